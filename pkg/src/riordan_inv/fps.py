"""Truncated formal power series with exact rational coefficients.

A :class:`Series` of order ``N`` holds the coefficients ``c_0 .. c_N`` of
``c_0 + c_1 x + ... + c_N x^N``. Coefficients above ``N`` are unknown, not
zero, so every binary operation insists on equal orders instead of quietly
re-truncating one operand.

Coefficients are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence

from .errors import PreconditionError, ValidationError

DEFAULT_ORDER = 16

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float literal has already lost exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("+"):
            text = text[1:]
        try:
            num, _, den = text.partition("/")
            if den:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"not a rational: {value!r}") from None
    raise ValidationError(f"not a rational: {value!r}")


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"
    ZERO = "zero"


class Series:
    """Immutable truncated power series over Q.

    >>> Series([1, 1], 3) * Series([1, -1], 3)
    Series([1, 0, -1, 0])
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [to_rational(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValidationError("empty series needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValidationError(f"order must be non-negative, got {order}")
        if len(cs) > order + 1:
            extra = cs[order + 1:]
            if any(extra):
                raise ValidationError(
                    f"{len(cs)} coefficients given for a series of order {order}"
                )
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> Series:
        obj = object.__new__(cls)
        obj._coeffs = tuple(coeffs)
        return obj

    # constructors

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls._raw([Fraction(0)] * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> Series:
        return cls([value], order)

    @classmethod
    def x(cls, order: int) -> Series:
        """The series ``x`` (or ``0`` at order 0)."""
        return cls([0, 1], order) if order >= 1 else cls.zero(0)

    @classmethod
    def geometric(cls, ratio, order: int) -> Series:
        """``1 / (1 - ratio*x)``."""
        r = to_rational(ratio)
        return cls._raw([r**n for n in range(order + 1)])

    @classmethod
    def exp_x(cls, order: int) -> Series:
        """``e^x``, coefficients ``1/n!``."""
        return cls._raw([Fraction(1, factorial(n)) for n in range(order + 1)])

    @classmethod
    def ones(cls, order: int) -> Series:
        return cls._raw([Fraction(1)] * (order + 1))

    # basic protocol

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return "Series([" + ", ".join(str(c) for c in self._coeffs) + "])"

    def __str__(self) -> str:
        return format_series(self)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_constant(self, value=None) -> bool:
        if any(self._coeffs[1:]):
            return False
        return value is None or self._coeffs[0] == to_rational(value)

    # order changes

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValidationError(f"cannot truncate order {self.order} up to {order}")
        return Series._raw(self._coeffs[: order + 1])

    def extend(self, order: int) -> Series:
        """Pad with zeros up to ``order``.

        Only sound where the caller knows the padded coefficients cannot
        influence the part of the result it keeps.
        """
        if order < self.order:
            raise ValidationError(f"cannot extend order {self.order} down to {order}")
        return Series._raw(self._coeffs + (Fraction(0),) * (order - self.order))

    # operators

    def __add__(self, other):
        if isinstance(other, Series):
            return add(self, other)
        return add(self, Series.constant(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Series):
            return sub(self, other)
        return sub(self, Series.constant(other, self.order))

    def __rsub__(self, other):
        return sub(Series.constant(other, self.order), self)

    def __neg__(self):
        return Series._raw([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, reciprocal(other))
        r = to_rational(other)
        if r == 0:
            raise PreconditionError("division by zero scalar")
        return scale(self, 1 / r)

    def __pow__(self, k: int):
        if k < 0:
            return power(reciprocal(self), -k)
        return power(self, k)

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)


def _check_orders(a: Series, b: Series) -> None:
    if a.order != b.order:
        raise ValidationError(f"order mismatch: {a.order} vs {b.order}")


def add(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series._raw([x + y for x, y in zip(a.coeffs, b.coeffs)])


def sub(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series._raw([x - y for x, y in zip(a.coeffs, b.coeffs)])


def scale(a: Series, r) -> Series:
    r = to_rational(r)
    return Series._raw([c * r for c in a.coeffs])


def _scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order.

    Runs as an integer convolution over a common denominator; normalizing
    a Fraction after every partial product is far slower.
    """
    _check_orders(a, b)
    n = a.order
    an, ad = _scaled_ints(a.coeffs)
    bn, bd = _scaled_ints(b.coeffs)
    out = [0] * (n + 1)
    for i, ai in enumerate(an):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bn[j]
            if bj:
                out[i + j] += ai * bj
    den = ad * bd
    return Series._raw([Fraction(c, den) for c in out])


def power(a: Series, k: int) -> Series:
    result = Series.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def reciprocal(a: Series) -> Series:
    """Multiplicative inverse, solved term by term from ``a * c = 1``."""
    a0 = a[0]
    if a0 == 0:
        raise PreconditionError("reciprocal needs a nonzero constant term")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = sum((a[k] * out[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
        out.append(-acc * inv0)
    return Series._raw(out)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(x))`` by Horner accumulation. Needs ``inner[0] == 0``."""
    _check_orders(outer, inner)
    if inner[0] != 0:
        raise PreconditionError("composition needs the inner series to have zero constant term")
    n = outer.order
    result = Series.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        result = mul(result, inner)
        result = Series._raw((result[0] + outer[k],) + result.coeffs[1:])
    return result


def _check_invertible(s: Series) -> None:
    if s[0] != 0:
        raise PreconditionError("compositional inverse needs zero constant term")
    if s.order >= 1 and s[1] == 0:
        raise PreconditionError("compositional inverse needs a nonzero linear term")
    if s.order < 1:
        raise PreconditionError("compositional inverse needs order >= 1")


def comp_inverse(s: Series) -> Series:
    """Compositional inverse by triangular back-substitution.

    Writes the inverse as ``sum b_k x^k`` and solves
    ``sum_k b_k [x^n] s^k = [n == 1]`` for ``b_n`` in increasing ``n``.
    """
    _check_invertible(s)
    n_max = s.order
    powers = [None, s]
    for _ in range(2, n_max + 1):
        powers.append(mul(powers[-1], s))
    s1 = s[1]
    b = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = Fraction(1 if n == 1 else 0)
        for k in range(1, n):
            if b[k]:
                acc -= b[k] * powers[k][n]
        b[n] = acc / s1**n
    return Series._raw(b)


def comp_inverse_lagrange(s: Series) -> Series:
    """Compositional inverse via Lagrange inversion.

    ``[x^n] inverse = (1/n) [x^(n-1)] (x/s)^n``. Kept as an independent
    check on :func:`comp_inverse`.
    """
    _check_invertible(s)
    n_max = s.order
    # only coefficients up to x^(N-1) of x/s are needed, so the lost top term is harmless
    x_over_s = reciprocal(divide_by_x(s))
    out = [Fraction(0)] * (n_max + 1)
    pw = Series.constant(1, n_max)
    for n in range(1, n_max + 1):
        pw = mul(pw, x_over_s)
        out[n] = pw[n - 1] / n
    return Series._raw(out)


def exp_series(a: Series) -> Series:
    if a[0] != 0:
        raise PreconditionError("exp_series needs zero constant term")
    n = a.order
    total = Series.constant(1, n)
    term = Series.constant(1, n)
    for k in range(1, n + 1):
        term = scale(mul(term, a), Fraction(1, k))
        if term.is_zero():
            break
        total = add(total, term)
    return total


def log_series(a: Series) -> Series:
    if a[0] != 1:
        raise PreconditionError("log_series needs constant term 1")
    n = a.order
    y = sub(a, Series.constant(1, n))
    total = Series.zero(n)
    term = Series.constant(1, n)
    for k in range(1, n + 1):
        term = mul(term, y)
        if term.is_zero():
            break
        total = add(total, scale(term, Fraction((-1) ** (k + 1), k)))
    return total


def hadamard(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series._raw([x * y for x, y in zip(a.coeffs, b.coeffs)])


def divide_by_x(s: Series) -> Series:
    """Shift coefficients down one place, keeping the order.

    ``s / x`` at order ``N`` would need ``s_(N+1)``, which is unknown; the
    top coefficient of the result is set to zero. Callers that need it
    exact must work one order higher and truncate.
    """
    if s[0] != 0:
        raise PreconditionError("divide_by_x needs zero constant term")
    return Series._raw(s.coeffs[1:] + (Fraction(0),))


def times_x(a: Series) -> Series:
    """Shift coefficients up one place; exact at fixed order."""
    return Series._raw((Fraction(0),) + a.coeffs[:-1])


def x_over(a: Series) -> Series:
    """``x / a`` at the order of ``a``; exact."""
    return times_x(reciprocal(a))


def x_over_exact(s: Series) -> Series:
    """``x / s`` for ``s`` with ``s_0 = 0``, returned one order lower.

    ``s`` at order ``N+1`` determines ``x/s`` exactly through order ``N``.
    """
    return reciprocal(divide_by_x(s).truncate(s.order - 1))


def reflect(a: Series) -> Series:
    """``a(-x)``."""
    return Series._raw([c if n % 2 == 0 else -c for n, c in enumerate(a.coeffs)])


def parity(a: Series) -> Parity:
    odd_part = any(a.coeffs[1::2])
    even_part = any(a.coeffs[0::2])
    if not odd_part and not even_part:
        return Parity.ZERO
    if not odd_part:
        return Parity.EVEN
    if not even_part:
        return Parity.ODD
    return Parity.NEITHER


def parse_series(text: str, order: int | None = None) -> Series:
    """Parse ``[1,-1/2,0,1/3]``; missing high coefficients become zero."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValidationError(f"series literal must be bracketed: {text!r}")
    body = body[1:-1].strip()
    if not body:
        raise ValidationError(f"empty series literal: {text!r}")
    coeffs = [to_rational(part) for part in body.split(",")]
    if order is not None and len(coeffs) > order + 1:
        raise ValidationError(
            f"literal has {len(coeffs)} coefficients, more than order {order} allows"
        )
    return Series(coeffs, order if order is not None else len(coeffs) - 1)


def format_rational(r: Fraction) -> str:
    return str(r)


def format_series(s: Series, var: str = "x", big_o: bool = True) -> str:
    """Human-readable polynomial form, e.g. ``1 - 1/2*x^2 + O(x^3)``."""
    terms = []
    for n, c in enumerate(s.coeffs):
        if not c:
            continue
        mag = abs(c)
        if n == 0:
            body = str(mag)
        else:
            mono = var if n == 1 else f"{var}^{n}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    tail = f" + O({var}^{s.order + 1})" if big_o else ""
    if not terms:
        return "0" + tail
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out + tail
