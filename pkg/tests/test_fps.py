from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan_inv.errors import PreconditionError, ValidationError
from riordan_inv.fps import (
    Parity,
    Series,
    add,
    comp_inverse,
    comp_inverse_lagrange,
    compose,
    divide_by_x,
    exp_series,
    hadamard,
    log_series,
    mul,
    parity,
    parse_series,
    reciprocal,
    reflect,
    scale,
    sub,
    times_x,
)

from oracles import brute_compose, linear_solve_reciprocal, poly_pow, taylor
from strategies import invertible_series, series

X = sympy.Symbol("x")


def S(*coeffs, order=None):
    return Series(coeffs, order)


class TestRational:
    def test_lowest_terms(self):
        s = Series(["2/4", "-3/-6", "6/3"])
        assert s.coeffs == (F(1, 2), F(1, 2), F(2))
        assert all(c.denominator > 0 for c in s)

    @pytest.mark.parametrize("bad", ["1.5", "a", "1/0", 0.5, True])
    def test_rejects_non_rationals(self, bad):
        with pytest.raises(ValidationError):
            Series([bad])


class TestAddSubScale:
    def test_odd_terms_cancel(self):
        assert S(1, 1) + S(1, -1) == S(2, 0)

    def test_zero_annihilates(self):
        assert scale(S(1, 1), 0) == Series.zero(1)

    def test_self_subtraction(self):
        a = S(1, 2, 3)
        assert sub(a, a) == Series.zero(2)

    def test_order_mismatch(self):
        with pytest.raises(ValidationError):
            add(Series([1], 2), Series([1], 3))


class TestMul:
    def test_difference_of_squares(self):
        assert mul(Series([1, 1], 4), Series([1, -1], 4)) == Series([1, 0, -1], 4)

    def test_geometric_telescopes(self):
        assert mul(Series.ones(6), Series([1, -1], 6)) == Series([1], 6)

    def test_cube_against_binomial_expansion(self):
        a = Series([1, 1], 4)
        expected = poly_pow([1, 1, 0, 0, 0], 3, 4)  # oracle: repeated list convolution
        assert expected == [1, 3, 3, 1, 0]
        assert mul(mul(a, a), a) == Series(expected, 4)

    def test_order_mismatch(self):
        with pytest.raises(ValidationError):
            mul(Series([1], 2), Series([1], 3))


class TestReciprocal:
    def test_geometric(self):
        assert reciprocal(Series([1, -1], 4)) == Series.ones(4)

    def test_one(self):
        assert reciprocal(Series([1], 5)) == Series([1], 5)

    def test_two_plus_x(self):
        expected = linear_solve_reciprocal([2, 1, 0], 2)
        assert expected == [F(1, 2), F(-1, 4), F(1, 8)]
        assert reciprocal(Series([2, 1], 2)) == Series(expected, 2)

    def test_zero_constant(self):
        with pytest.raises(PreconditionError):
            reciprocal(Series([0, 1], 3))

    @settings(max_examples=60, deadline=None)
    @given(series(const="nonzero", max_order=12), st.data())
    def test_reciprocal_of_product(self, a, data):
        b = data.draw(series(order=a.order, const="nonzero"))
        assert reciprocal(mul(a, b)) == mul(reciprocal(a), reciprocal(b))

    @settings(max_examples=40, deadline=None)
    @given(series(const="nonzero", max_order=10))
    def test_is_inverse(self, a):
        assert mul(a, reciprocal(a)) == Series([1], a.order)


class TestCompose:
    def test_geometric_of_mobius(self):
        n = 4
        outer, inner = Series.ones(n), reciprocal(Series([1, 1], n))
        inner = times_x(inner)  # x/(1+x)
        brute = brute_compose(list(outer), list(inner), n)
        assert brute == [1, 1, 0, 0, 0]
        assert compose(outer, inner) == Series(brute, n)

    @given(series(max_order=8))
    def test_compose_with_zero(self, a):
        assert compose(a, Series.zero(a.order)) == Series([a[0]], a.order)

    @given(series(const="zero", max_order=8))
    def test_identity_outer(self, s):
        assert compose(Series.x(s.order), s) == s

    def test_rejects_nonzero_inner_constant(self):
        with pytest.raises(PreconditionError):
            compose(Series([1, 1], 3), Series([1, 1], 3))

    @settings(max_examples=40, deadline=None)
    @given(series(max_order=7), st.data())
    def test_matches_brute_force(self, a, data):
        s = data.draw(series(order=a.order, const="zero"))
        assert compose(a, s) == Series(brute_compose(list(a), list(s), a.order), a.order)


class TestCompInverse:
    def test_x_over_one_minus_x(self):
        n = 5
        s = times_x(Series.ones(n))
        inv = comp_inverse(s)
        assert inv == times_x(Series.geometric(-1, n))
        x = Series.x(n)
        assert compose(inv, s) == x and compose(s, inv) == x

    @pytest.mark.parametrize("c", [1, -1])
    def test_linear_self_inverse(self, c):
        s = Series([0, c], 6)
        assert comp_inverse(s) == s

    @pytest.mark.parametrize("s", [Series([1, 1], 3), Series([0, 0, 1], 3)])
    def test_preconditions(self, s):
        with pytest.raises(PreconditionError):
            comp_inverse(s)

    @settings(max_examples=60, deadline=None)
    @given(invertible_series(max_order=10))
    def test_two_sided(self, s):
        inv = comp_inverse(s)
        x = Series.x(s.order)
        assert compose(inv, s) == x
        assert compose(s, inv) == x

    @settings(max_examples=60, deadline=None)
    @given(invertible_series(max_order=10))
    def test_back_substitution_matches_lagrange(self, s):
        assert comp_inverse(s) == comp_inverse_lagrange(s)


class TestExpLog:
    def test_trivial(self):
        assert exp_series(Series.zero(4)) == Series([1], 4)
        assert log_series(Series([1], 4)) == Series.zero(4)

    def test_exp_log_one_plus_x(self):
        a = Series([1, 1], 6)
        assert exp_series(log_series(a)) == a

    def test_exp_minus_log_is_geometric(self):
        n = 4
        lhs = exp_series(-log_series(Series([1, -1], n)))
        assert lhs == reciprocal(Series([1, -1], n))
        assert lhs == Series.ones(n)

    def test_against_sympy(self):
        a = Series([0, 1, F(-1, 2), 3], 7)
        expr = sympy.exp(X - X**2 / 2 + 3 * X**3)
        assert exp_series(a) == Series(taylor(expr, 7), 7)

    @pytest.mark.parametrize("fn,arg", [(exp_series, Series([1], 3)), (log_series, Series([2], 3))])
    def test_preconditions(self, fn, arg):
        with pytest.raises(PreconditionError):
            fn(arg)

    @settings(max_examples=40, deadline=None)
    @given(series(const="zero", max_order=9), st.data())
    def test_exp_is_homomorphism(self, a, data):
        b = data.draw(series(order=a.order, const="zero"))
        assert exp_series(a + b) == mul(exp_series(a), exp_series(b))

    @settings(max_examples=40, deadline=None)
    @given(series(const="zero", max_order=9))
    def test_log_exp_round_trip(self, a):
        assert log_series(exp_series(a)) == a


class TestHadamard:
    def test_picks_factorials(self):
        assert hadamard(Series.ones(3), Series.exp_x(3)) == Series([1, 1, F(1, 2), F(1, 6)])

    def test_pointwise(self):
        assert hadamard(S(1, 2, 3), S(1, -1, 1)) == S(1, -2, 3)

    @given(series(max_order=8), st.data())
    def test_algebra(self, a, data):
        b = data.draw(series(order=a.order))
        c = data.draw(series(order=a.order))
        assert hadamard(a, b) == hadamard(b, a)
        assert hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c))
        assert hadamard(a, Series.ones(a.order)) == a


class TestShifts:
    def test_divide_by_x_loses_top_term_only(self):
        s = times_x(Series.ones(5))
        shifted = divide_by_x(s)
        assert shifted.coeffs[:5] == Series.ones(5).coeffs[:5]
        assert shifted[5] == 0

    def test_times_x_one(self):
        assert times_x(Series([1], 3)) == Series.x(3)

    @given(series(max_order=8))
    def test_round_trip(self, a):
        assert divide_by_x(times_x(a)).coeffs[:-1] == a.coeffs[:-1]

    def test_divide_needs_zero_constant(self):
        with pytest.raises(PreconditionError):
            divide_by_x(Series([1, 1], 2))


class TestParity:
    @pytest.mark.parametrize("coeffs,expected", [
        ([1, 0, 1], Parity.EVEN),
        ([0, 1, 0, 1], Parity.ODD),
        ([1, 1], Parity.NEITHER),
        ([0, 0, 0], Parity.ZERO),
    ])
    def test_examples(self, coeffs, expected):
        assert parity(Series(coeffs)) == expected

    @given(series(max_order=9))
    def test_odd_anticommutes_with_negation(self, a):
        odd = Series([c if k % 2 else 0 for k, c in enumerate(a)], a.order)
        if parity(odd) == Parity.ODD:
            assert compose(odd, Series([0, -1], a.order)) == -odd
            assert reflect(odd) == -odd


class TestLiteral:
    def test_parse_and_pad(self):
        assert parse_series("[1,-1/2,0,1/3]", 5) == Series([1, F(-1, 2), 0, F(1, 3), 0, 0])

    def test_plus_sign_and_spaces(self):
        assert parse_series("[ +1 , -2 ]") == Series([1, -2])

    @pytest.mark.parametrize("text", ["1,2", "[]", "[1,x]", "[1,2,3]"])
    def test_rejects(self, text):
        with pytest.raises(ValidationError):
            parse_series(text, 1)
