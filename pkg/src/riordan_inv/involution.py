"""Construction and decomposition of Riordan involutions.

Every involution other than ``T(1|1)`` and ``T(-1|1)`` arises from a triple
``(phi, u, sign)``: ``phi`` any series with ``phi_0 != 0``, ``u`` an odd
series and ``sign`` in ``{+1, -1}``. With ``s = x/phi`` and ``sbar`` its
compositional inverse,

    g = x / sbar(-s)
    f = sign * g * exp(u(s))

The triple is far from unique; :func:`decompose_involution` returns one
canonical choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DefectError, PreconditionError, ValidationError
from .fps import (
    Parity,
    Series,
    comp_inverse,
    compose,
    exp_series,
    log_series,
    mul,
    parity,
    reciprocal,
    scale,
    sub,
    x_over,
    x_over_exact,
)
from .riordan import RiordanArray


@dataclass(frozen=True)
class InvolutionParams:
    phi: Series
    u: Series
    sign: int

    def __post_init__(self):
        if self.phi.order != self.u.order:
            raise ValidationError(
                f"order mismatch: phi has {self.phi.order}, u has {self.u.order}"
            )
        if self.phi[0] == 0:
            raise PreconditionError("phi constant term must be nonzero")
        if parity(self.u) not in (Parity.ODD, Parity.ZERO):
            raise PreconditionError("u must be an odd series")
        if self.sign not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def order(self) -> int:
        return self.phi.order


def _linearizer(phi: Series) -> Series:
    """``s = x/phi`` one order above ``phi``; exact since it only reads ``phi_0..phi_N``."""
    return x_over(phi.extend(phi.order + 1))


def _h_from_phi(phi: Series) -> Series:
    """``sbar(-s)`` at order ``N+1``."""
    s = _linearizer(phi)
    return compose(comp_inverse(s), -s)


def g_from_phi(phi: Series) -> Series:
    if phi[0] == 0:
        raise PreconditionError("phi constant term must be nonzero")
    h = _h_from_phi(phi)
    if h[0] != 0 or h[1] == 0:
        raise DefectError("sbar(-s) must have zero constant and nonzero linear term")
    return x_over_exact(h)


def _f_from_g(p: InvolutionParams, g: Series) -> Series:
    s = _linearizer(p.phi).truncate(p.order)
    return scale(mul(g, exp_series(compose(p.u, s))), p.sign)


def f_from_params(p: InvolutionParams) -> Series:
    return _f_from_g(p, g_from_phi(p.phi))


def build_involution(p: InvolutionParams) -> RiordanArray:
    g = g_from_phi(p.phi)
    t = RiordanArray(_f_from_g(p, g), g)
    if not t.is_involution():
        raise DefectError("constructed array does not square to the identity")
    return t


def trivial_involutions(order: int) -> list[RiordanArray]:
    """The involutions with ``g = 1``: exactly ``T(1|1)`` and ``T(-1|1)``."""
    return [RiordanArray.identity(order), RiordanArray.minus_identity(order)]


def is_trivial(t: RiordanArray) -> bool:
    return t.g.is_constant(1) and (t.f.is_constant(1) or t.f.is_constant(-1))


def decompose_involution(t: RiordanArray) -> InvolutionParams:
    """Recover a parameter triple that rebuilds ``t`` exactly.

    With ``h = x/g`` one has ``h(h) = x`` and ``h_1 = -1``. The linearizer
    ``s = (x - h)/2`` satisfies ``s(h) = -s`` and ``s_1 = 1``; take
    ``phi = x/s``. Then ``sign = f_0/g_0`` and ``u = log(f/(sign*g)) o sbar``,
    which is odd because ``d * d(h) = 1``.
    """
    if not t.is_involution():
        raise PreconditionError(f"not an involution at order {t.order}")
    if is_trivial(t):
        raise ValidationError("trivial involution; parameters undefined")
    n = t.order
    h = t.h_ext
    if h[1] != -1:
        raise DefectError(f"nontrivial involution must have h_1 = -1, got {h[1]}")
    x_ext = Series.x(n + 1)
    s = scale(sub(x_ext, h), Fraction(1, 2))
    if compose(s, h) != -s:
        raise DefectError("linearizer does not anticommute with h")
    phi = x_over_exact(s)

    sign = t.f[0] / t.g[0]
    if sign not in (1, -1):
        raise DefectError(f"f_0/g_0 must be +1 or -1, got {sign}")
    sign = int(sign)
    w = mul(t.f, reciprocal(scale(t.g, sign)))
    u = compose(log_series(w), comp_inverse(s.truncate(n)))
    if parity(u) not in (Parity.ODD, Parity.ZERO):
        raise DefectError("recovered u is not odd")
    return InvolutionParams(phi, u, sign)


def parity_criterion(phi: Series) -> bool:
    """Whether ``g_from_phi(phi)`` is the constant ``-1``; holds exactly for even ``phi``."""
    return g_from_phi(phi).is_constant(-1)
