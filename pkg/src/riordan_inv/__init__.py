"""Exact Riordan-group involutions and self-inverse Sheffer sequences over Q."""

from .errors import DefectError, PreconditionError, RiordanError, ValidationError
from .fps import DEFAULT_ORDER, Series
from .riordan import RiordanArray, TriangularMatrix
from .involution import InvolutionParams, build_involution, decompose_involution
from .sheffer import PolySequence, Weight

__all__ = [
    "DEFAULT_ORDER",
    "DefectError",
    "InvolutionParams",
    "PolySequence",
    "PreconditionError",
    "RiordanArray",
    "RiordanError",
    "Series",
    "TriangularMatrix",
    "ValidationError",
    "Weight",
    "build_involution",
    "decompose_involution",
]

__version__ = "0.1.0"
