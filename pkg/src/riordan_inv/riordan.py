"""Riordan arrays ``T(f|g)`` and their group structure.

``T(f|g)`` is the lower-triangular matrix whose ``k``-th column has
generating function ``(f/g) * (x/g)^k``. The classical pair is
``d = f/g`` and ``h = x/g``.

Truncation: an array of order ``N`` stores ``f`` and ``g`` through ``x^N``.
That fixes ``d`` through ``x^N`` and ``h`` through ``x^(N+1)``, one more
than the ``(N+1) x (N+1)`` matrix shows. Products and inverses carry ``h``
at that extra order so that ``g`` of the result is exact through ``x^N``.
Saying a truncated array "is an involution" therefore certifies ``T^2 = I``
only for the finite data held, never for the infinite matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import PreconditionError, ValidationError
from .fps import (
    Series,
    comp_inverse,
    compose,
    mul,
    reciprocal,
    x_over,
    x_over_exact,
)


class TriangularMatrix:
    """Lower-triangular ``(N+1) x (N+1)`` matrix over Q, stored row by row."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        norm = []
        for n, row in enumerate(rows):
            row = [Fraction(c) for c in row]
            if len(row) > n + 1:
                if any(row[n + 1:]):
                    raise ValidationError(f"entry above the diagonal in row {n}")
                row = row[: n + 1]
            row.extend([Fraction(0)] * (n + 1 - len(row)))
            norm.append(tuple(row))
        if not norm:
            raise ValidationError("matrix needs at least one row")
        self._rows = tuple(norm)

    @classmethod
    def identity(cls, order: int) -> TriangularMatrix:
        return cls([[0] * n + [1] for n in range(order + 1)])

    @classmethod
    def diagonal(cls, diag) -> TriangularMatrix:
        return cls([[0] * n + [c] for n, c in enumerate(diag)])

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, nk):
        n, k = nk
        return self._rows[n][k] if k <= n else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, TriangularMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other: TriangularMatrix) -> TriangularMatrix:
        if self.order != other.order:
            raise ValidationError(f"order mismatch: {self.order} vs {other.order}")
        a, b = self._rows, other._rows
        rows = []
        for n in range(self.order + 1):
            rows.append([
                sum((a[n][j] * b[j][k] for j in range(k, n + 1)), Fraction(0))
                for k in range(n + 1)
            ])
        return TriangularMatrix(rows)

    def __repr__(self):
        return f"TriangularMatrix(order={self.order})"

    def __str__(self):
        cells = [[str(c) for c in row] for row in self._rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


class RiordanArray:
    """Element ``T(f|g)`` of the Riordan group, truncated at a common order."""

    __slots__ = ("f", "g")

    def __init__(self, f: Series, g: Series):
        if f.order != g.order:
            raise ValidationError(f"order mismatch: f has {f.order}, g has {g.order}")
        if f[0] == 0:
            raise PreconditionError("f constant term must be nonzero")
        if g[0] == 0:
            raise PreconditionError("g constant term must be nonzero")
        self.f = f
        self.g = g

    @classmethod
    def from_dh(cls, d: Series, h_ext: Series) -> RiordanArray:
        """Build from ``d`` at order ``N`` and ``h`` at order ``N+1``."""
        if h_ext.order != d.order + 1:
            raise ValidationError("h must be supplied one order above d")
        if h_ext[0] != 0 or h_ext[1] == 0:
            raise PreconditionError("h needs zero constant term and nonzero linear term")
        g = x_over_exact(h_ext)
        return cls(mul(d, g), g)

    # named elements

    @classmethod
    def identity(cls, order: int) -> RiordanArray:
        one = Series.constant(1, order)
        return cls(one, one)

    @classmethod
    def minus_identity(cls, order: int) -> RiordanArray:
        return cls(Series.constant(-1, order), Series.constant(1, order))

    @classmethod
    def alternating(cls, order: int) -> RiordanArray:
        """``M = T(-1|-1)``, the diagonal matrix ``diag((-1)^n)``."""
        m = Series.constant(-1, order)
        return cls(m, m)

    @classmethod
    def pascal(cls, order: int) -> RiordanArray:
        return cls(Series.constant(1, order), Series([1, -1], order))

    # coordinates

    @property
    def order(self) -> int:
        return self.f.order

    @property
    def d(self) -> Series:
        return mul(self.f, reciprocal(self.g))

    @property
    def h_ext(self) -> Series:
        """``x/g`` at order ``N+1``; exact because it only reads ``g_0..g_N``."""
        return x_over(self.g.extend(self.order + 1))

    @property
    def h(self) -> Series:
        return x_over(self.g)

    def __eq__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def __repr__(self):
        return f"RiordanArray(f={self.f!r}, g={self.g!r})"

    def __matmul__(self, other: RiordanArray) -> RiordanArray:
        return multiply(self, other)

    def __pow__(self, k: int) -> RiordanArray:
        return power(self, k)

    def is_identity(self) -> bool:
        return self.f.is_constant(1) and self.g.is_constant(1)

    def is_involution(self) -> bool:
        return multiply(self, self).is_identity()

    def to_matrix(self) -> TriangularMatrix:
        return to_matrix(self)


def to_matrix(t: RiordanArray) -> TriangularMatrix:
    """Entry ``(n, k)`` is ``[x^n] d * h^k``."""
    n_max = t.order
    d, h = t.d, t.h
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    col = d
    for k in range(n_max + 1):
        for n in range(k, n_max + 1):
            rows[n][k] = col[n]
        col = mul(col, h)
    return TriangularMatrix(rows)


def multiply(t1: RiordanArray, t2: RiordanArray) -> RiordanArray:
    """Group product: ``(d1, h1)(d2, h2) = (d1 * d2(h1), h2(h1))``."""
    if t1.order != t2.order:
        raise ValidationError(f"order mismatch: {t1.order} vs {t2.order}")
    h1_ext = t1.h_ext
    d = mul(t1.d, compose(t2.d, h1_ext.truncate(t1.order)))
    h_ext = compose(t2.h_ext, h1_ext)
    return RiordanArray.from_dh(d, h_ext)


def inverse(t: RiordanArray) -> RiordanArray:
    """``(d, h)^-1 = (1 / d(hbar), hbar)`` with ``hbar`` the compositional inverse of ``h``."""
    hbar_ext = comp_inverse(t.h_ext)
    d_inv = reciprocal(compose(t.d, hbar_ext.truncate(t.order)))
    return RiordanArray.from_dh(d_inv, hbar_ext)


def power(t: RiordanArray, k: int) -> RiordanArray:
    if k < 0:
        return power(inverse(t), -k)
    result = RiordanArray.identity(t.order)
    for _ in range(k):
        result = multiply(result, t)
    return result


def a_sequence(phi: Series) -> Series:
    """A-sequence of ``T(1|phi)``: the series ``A`` with ``x/A`` inverse to ``x/phi``."""
    if phi[0] == 0:
        raise PreconditionError("phi constant term must be nonzero")
    s_ext = x_over(phi.extend(phi.order + 1))
    return x_over_exact(comp_inverse(s_ext))


def _diagonal_has_finite_order(t: RiordanArray) -> bool:
    # the diagonal is (f0/g0) * (1/g0)^n; over Q only +-1 are roots of unity
    f0, g0 = t.f[0], t.g[0]
    return abs(f0 / g0) == 1 and abs(g0) == 1


def probe_order(t: RiordanArray, max_n: int) -> Optional[int]:
    """Smallest ``n <= max_n`` with ``t^n`` the identity, else ``None``."""
    if max_n < 1:
        raise ValidationError("max_n must be at least 1")
    if not _diagonal_has_finite_order(t):
        return None
    acc = t
    for n in range(1, max_n + 1):
        if acc.is_identity():
            return n
        if n < max_n:
            acc = multiply(acc, t)
    return None


def is_pseudo_involution(t: RiordanArray) -> bool:
    """Whether ``t * M`` is an involution, ``M = T(-1|-1)``."""
    return multiply(t, RiordanArray.alternating(t.order)).is_involution()
