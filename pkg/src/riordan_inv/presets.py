"""Named series and arrays used by the examples and the command line."""

from __future__ import annotations

from .errors import PreconditionError, ValidationError
from .fps import Series, divide_by_x, log_series, reciprocal, scale, to_rational
from .riordan import RiordanArray


def alpha_log_phi(alpha, order: int) -> Series:
    """``phi = alpha*x / log(1 - alpha*x)``; its constant term is ``-1``."""
    a = to_rational(alpha)
    if a == 0:
        raise PreconditionError("alpha must be nonzero")
    # log(1 - a x)/x through x^N needs the log through x^(N+1)
    log_ext = log_series(Series([1, -a], order + 1))
    return scale(reciprocal(divide_by_x(log_ext).truncate(order)), a)


SERIES_PRESETS = {
    "alpha-log": alpha_log_phi,
}

ARRAY_PRESETS = {
    "identity": RiordanArray.identity,
    "minus-identity": RiordanArray.minus_identity,
    "pascal": RiordanArray.pascal,
    "alternating": RiordanArray.alternating,
}


def series_preset(name: str, order: int, alpha=None) -> Series:
    if name not in SERIES_PRESETS:
        raise ValidationError(
            f"unknown series preset {name!r}; choose from {', '.join(sorted(SERIES_PRESETS))}"
        )
    if alpha is None:
        raise ValidationError(f"preset {name!r} needs --alpha")
    return SERIES_PRESETS[name](alpha, order)


def array_preset(name: str, order: int) -> RiordanArray:
    try:
        return ARRAY_PRESETS[name](order)
    except KeyError:
        raise ValidationError(
            f"unknown array preset {name!r}; choose from {', '.join(sorted(ARRAY_PRESETS))}"
        ) from None
