"""Hadamard-weighted polynomial sequences and umbral composition.

A polynomial sequence ``p_0, ..., p_N`` is stored as the lower-triangular
matrix of its coefficients (row ``n`` holds ``p_n``). Weighting by a series
``h`` with all coefficients nonzero multiplies column ``k`` by ``h_k``.

Note on conventions: a "generalized Appell" sequence here is the weighted
one, i.e. it already carries the factor ``h_n`` on ``x^n``. Some older
literature names the unweighted sequence that way.

Umbral composition of weighted sequences,

    (p #_h q)_n(x) = sum_k (p_{n,k} / h_k) q_k(x),

is the product ``P diag(1/h) Q`` of coefficient matrices. On weighted
sequences it mirrors the product of the unweighted matrices, and its
neutral element is ``e_n(x) = h_n x^n``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import PreconditionError, ValidationError
from .fps import Series
from .riordan import RiordanArray, TriangularMatrix, power, to_matrix


class Weight:
    """A Hadamard-invertible series: every coefficient through order N is nonzero.

    Only finitely many coefficients can be checked, so invertibility is
    certified through the truncation order and no further.
    """

    __slots__ = ("series",)

    def __init__(self, series: Series):
        zeros = [n for n, c in enumerate(series) if c == 0]
        if zeros:
            raise PreconditionError(
                f"weight coefficients must all be nonzero (zero at index {zeros[0]})"
            )
        self.series = series

    @property
    def order(self) -> int:
        return self.series.order

    def __getitem__(self, n):
        return self.series[n]

    def __eq__(self, other):
        return isinstance(other, Weight) and self.series == other.series

    def __repr__(self):
        return f"Weight({self.series!r})"


def ones_weight(order: int) -> Weight:
    return Weight(Series.ones(order))


def exp_weight(order: int) -> Weight:
    return Weight(Series.exp_x(order))


def harmonic_weight(order: int) -> Weight:
    return Weight(Series([Fraction(1, n + 1) for n in range(order + 1)], order))


WEIGHTS = {
    "ones": ones_weight,
    "exp": exp_weight,
    "harmonic": harmonic_weight,
}


def named_weight(name: str, order: int) -> Weight:
    try:
        return WEIGHTS[name](order)
    except KeyError:
        raise ValidationError(
            f"unknown weight {name!r}; choose from {', '.join(sorted(WEIGHTS))}"
        ) from None


class PolySequence:
    """Polynomials ``p_0..p_N`` with ``deg p_n <= n``."""

    __slots__ = ("matrix",)

    def __init__(self, rows):
        self.matrix = rows if isinstance(rows, TriangularMatrix) else TriangularMatrix(rows)

    @property
    def order(self) -> int:
        return self.matrix.order

    @property
    def rows(self):
        return self.matrix.rows

    def polynomial(self, n: int) -> Series:
        """``p_n`` as a series of the sequence's order."""
        return Series(self.rows[n], self.order)

    def is_riordan_type(self) -> bool:
        return all(self.rows[n][n] != 0 for n in range(self.order + 1))

    def __eq__(self, other):
        if not isinstance(other, PolySequence):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"PolySequence(order={self.order})"


def _check(p: PolySequence, order: int) -> None:
    if p.order != order:
        raise ValidationError(f"order mismatch: {p.order} vs {order}")


def _scale_columns(p: PolySequence, factors) -> PolySequence:
    return PolySequence([
        [c * factors[k] for k, c in enumerate(row)] for row in p.rows
    ])


def from_riordan(t: RiordanArray) -> PolySequence:
    return PolySequence(to_matrix(t))


def powers_of_x(order: int) -> PolySequence:
    return PolySequence(TriangularMatrix.identity(order))


def neutral(h: Weight) -> PolySequence:
    """``e_n(x) = h_n x^n``."""
    return PolySequence(TriangularMatrix.diagonal(h.series.coeffs))


def weight(p: PolySequence, h: Weight) -> PolySequence:
    _check(p, h.order)
    return _scale_columns(p, h.series.coeffs)


def unweight(p: PolySequence, h: Weight) -> PolySequence:
    _check(p, h.order)
    return _scale_columns(p, [1 / c for c in h.series.coeffs])


def umbral_compose_h(p: PolySequence, q: PolySequence, h: Weight) -> PolySequence:
    _check(p, h.order)
    _check(q, h.order)
    return PolySequence(unweight(p, h).matrix @ q.matrix)


def n_fold(p: PolySequence, times: int, h: Weight) -> PolySequence:
    if times < 1:
        raise ValidationError("times must be at least 1")
    acc = p
    for _ in range(times - 1):
        acc = umbral_compose_h(acc, p, h)
    return acc


def is_neutral(p: PolySequence, h: Weight) -> bool:
    _check(p, h.order)
    return p == neutral(h)


def prop1_equivalence(d: RiordanArray, times: int, h: Weight) -> tuple[bool, bool]:
    """Return (``times``-fold composition is neutral, ``d^times = I``).

    The group side is decided on the ``(N+1) x (N+1)`` matrix, which is
    what the sequence side sees, so the two answers always agree.
    """
    seq_side = is_neutral(n_fold(weight(from_riordan(d), h), times, h), h)
    group_side = to_matrix(power(d, times)) == TriangularMatrix.identity(d.order)
    return seq_side, group_side


def laguerre(order: int) -> PolySequence:
    """Classical Laguerre polynomials: ``L_n = sum_k (-1)^k C(n,k) x^k / k!``."""
    return PolySequence([
        [Fraction((-1) ** k * comb(n, k), factorial(k)) for k in range(n + 1)]
        for n in range(order + 1)
    ])
