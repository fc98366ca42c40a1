"""Exact polynomial and rational-function arithmetic."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reconkernel.exact import (
    InvariantError,
    PowerSeries,
    RatFunction,
    RatPoly,
    ValidationError,
    cauchy_root_bound,
    poly_definite_integral,
    poly_eval,
    poly_gcd,
    poly_sliding_average,
    series_divide,
    square_free_part,
    sturm_real_root_count,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small_polys = st.lists(rationals, max_size=7).map(RatPoly.of)


class TestRatPoly:
    def test_trailing_zeros_are_stripped(self):
        assert RatPoly.of([1, 2, 0, 0]) == RatPoly.of([1, 2])
        assert RatPoly.of([0, 0]).is_zero
        assert RatPoly.of([]).degree == -1

    def test_rejects_floats(self):
        with pytest.raises(ValidationError):
            RatPoly.of([0.5])

    def test_eval_horner(self):
        p = RatPoly.of([1, -3, 2])
        assert p(F(1, 2)) == 0
        assert poly_eval(p, 2) == 3

    def test_ring_operations(self):
        p = RatPoly.of([1, 1])
        q = RatPoly.of([-1, 1])
        assert p * q == RatPoly.of([-1, 0, 1])
        assert p + q == RatPoly.of([0, 2])
        assert p - p == RatPoly()
        assert p**3 == RatPoly.of([1, 3, 3, 1])
        assert 2 * p == RatPoly.of([2, 2])

    def test_divmod(self):
        p = RatPoly.of([-1, 0, 0, 1])
        d = RatPoly.of([-1, 1])
        q, r = divmod(p, d)
        assert q * d + r == p
        assert r.is_zero

    def test_derivative_antiderivative_inverse(self):
        p = RatPoly.of([3, -2, F(1, 3), 5])
        assert p.antiderivative().derivative() == p

    def test_taylor_shift(self):
        p = RatPoly.of([0, 0, 1])
        shifted = p.taylor_shift(1)
        assert shifted == RatPoly.of([1, 2, 1])
        assert shifted(0) == p(1)

    def test_string_round_trip(self):
        p = RatPoly.of([F(-1, 24), F(1, 2), 1])
        assert RatPoly.from_strings(p.to_strings()) == p

    @given(small_polys, rationals)
    def test_shift_matches_pointwise(self, p, c):
        assert p.taylor_shift(c)(0) == p(c)


class TestCalculus:
    def test_definite_integral(self):
        p = RatPoly.of([0, 0, 3])
        assert poly_definite_integral(p, 0, 2) == 8
        assert poly_definite_integral(p, 2, 0) == -8

    @given(small_polys, rationals, rationals, rationals)
    def test_integral_additivity(self, p, a, b, c):
        whole = poly_definite_integral(p, a, c)
        split = poly_definite_integral(p, a, b) + poly_definite_integral(p, b, c)
        assert whole == split

    def test_sliding_average_of_quadratic(self):
        # average of x^2 over (x-1/2, x+1/2) is x^2 + 1/12
        assert poly_sliding_average(RatPoly.of([0, 0, 1])) == RatPoly.of([F(1, 12), 0, 1])

    @given(small_polys)
    def test_sliding_average_preserves_degree_and_leading(self, p):
        q = poly_sliding_average(p)
        assert q.degree == p.degree
        if not p.is_zero:
            assert q.leading == p.leading

    @given(small_polys, rationals)
    def test_sliding_average_pointwise(self, p, x):
        anti = p.antiderivative()
        expected = anti(x + F(1, 2)) - anti(x - F(1, 2))
        assert poly_sliding_average(p)(x) == expected


class TestRatFunction:
    def test_reduction_to_lowest_terms(self):
        r = RatFunction(RatPoly.of([-1, 0, 1]), RatPoly.of([1, 1]))
        assert r == RatFunction.from_poly(RatPoly.of([-1, 1]))
        assert r.is_polynomial

    def test_den_made_monic(self):
        r = RatFunction(RatPoly.of([1]), RatPoly.of([0, 2]))
        assert r.den == RatPoly.of([0, 1])
        assert r.num == RatPoly.of([F(1, 2)])

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValidationError):
            RatFunction(RatPoly.of([1]), RatPoly())

    def test_pole_evaluation(self):
        r = RatFunction(RatPoly.of([1]), RatPoly.of([0, 1]))
        with pytest.raises(ZeroDivisionError):
            r(0)
        assert r(F(1, 2)) == 2

    def test_field_operations(self):
        x = RatFunction(RatPoly.of([0, 1]), RatPoly.of([1]))
        one_over_x = RatFunction(RatPoly.of([1]), RatPoly.of([0, 1]))
        assert x * one_over_x == RatFunction.constant(1)
        s = x + one_over_x
        assert s.num == RatPoly.of([1, 0, 1])
        assert s.den == RatPoly.of([0, 1])
        assert s - x == one_over_x

    @given(small_polys, small_polys.filter(lambda p: not p.is_zero), rationals)
    @settings(max_examples=50)
    def test_pointwise_consistency(self, n, d, x):
        r = RatFunction(n, d)
        if poly_eval(r.den, x) != 0 and poly_eval(d, x) != 0:
            assert r(x) == poly_eval(n, x) / poly_eval(d, x)


class TestPowerSeries:
    def test_order_is_kept(self):
        s = PowerSeries.of([1, 0, 0], order=4)
        assert s.order == 4
        assert s.coeff(4) == 0
        with pytest.raises(ValidationError):
            s.coeff(5)

    def test_mul_truncates(self):
        a = PowerSeries.of([1, 1], order=3)
        b = PowerSeries.of([1, -1], order=2)
        assert (a * b).order == 2
        assert (a * b).coeffs == (1, 0, -1)

    def test_divide_round_trip(self):
        a = PowerSeries.of([1, 2, 3, 4], order=5)
        b = PowerSeries.of([2, -1, 5], order=5)
        q = series_divide(a, b, 5)
        lifted = PowerSeries.of(b.coeffs, order=5)
        assert (q * lifted).coeffs == PowerSeries.of(a.coeffs, order=5).coeffs

    def test_divide_rejects_zero_constant_term(self):
        with pytest.raises(ValidationError):
            series_divide(PowerSeries.of([1]), PowerSeries.of([0, 1]), 3)

    def test_geometric_series(self):
        q = series_divide(PowerSeries.of([1]), PowerSeries.of([1, -1]), 5)
        assert q.coeffs == (1, 1, 1, 1, 1, 1)


class TestGcdAndSturm:
    def test_gcd_of_shared_factor(self):
        common = RatPoly.of([1, 1])
        a = common * RatPoly.of([-2, 1])
        b = common * RatPoly.of([3, 0, 1])
        assert poly_gcd(a, b) == common.monic()

    def test_gcd_coprime(self):
        assert poly_gcd(RatPoly.of([1, 1]), RatPoly.of([2, 1])) == RatPoly.of([1])

    @given(small_polys, small_polys, small_polys.filter(lambda p: not p.is_zero))
    @settings(max_examples=50)
    def test_gcd_divides_both(self, a, b, scale):
        a, b = a * scale, b * scale
        if a.is_zero and b.is_zero:
            return
        g = poly_gcd(a, b)
        for p in (a, b):
            _, r = divmod(p, g)
            assert r.is_zero

    def test_square_free_part(self):
        p = RatPoly.of([-1, 1]) ** 3 * RatPoly.of([1, 1])
        assert square_free_part(p) == (RatPoly.of([-1, 1]) * RatPoly.of([1, 1])).monic()

    def test_cauchy_bound_contains_roots(self):
        p = RatPoly.of([-6, 11, -6, 1])  # roots 1, 2, 3
        assert cauchy_root_bound(p) >= 3

    def test_sturm_simple_roots(self):
        p = RatPoly.of([-6, 11, -6, 1])
        assert sturm_real_root_count(p, 0, 4) == 3
        assert sturm_real_root_count(p, F(3, 2), 4) == 2
        assert sturm_real_root_count(p, 4, 10) == 0

    def test_sturm_counts_distinct_roots_of_multiple_factor(self):
        p = RatPoly.of([-1, 1]) ** 2
        assert sturm_real_root_count(p, 0, 2) == 1

    def test_sturm_half_open_endpoints(self):
        # the count is over (a, b]: a root at b is in, a root at a is out
        p = RatPoly.of([0, -1, 0, 1])  # roots -1, 0, 1
        assert sturm_real_root_count(p, -1, 1) == 2
        assert sturm_real_root_count(p, 0, 1) == 1
        assert sturm_real_root_count(p, -1, 0) == 1
        assert sturm_real_root_count(p, -2, 1) == 3

    def test_sturm_endpoint_only_interval(self):
        p = RatPoly.of([-1, 1])
        assert sturm_real_root_count(p, 1, 2) == 0
        assert sturm_real_root_count(p, 0, 1) == 1

    def test_sturm_irrational_roots(self):
        p = RatPoly.of([-2, 0, 1])
        assert sturm_real_root_count(p, 0, 2) == 1
        assert sturm_real_root_count(p, -2, 2) == 2

    def test_sturm_no_real_roots(self):
        assert sturm_real_root_count(RatPoly.of([1, 0, 1]), -10, 10) == 0

    def test_sturm_validates_input(self):
        with pytest.raises(ValidationError):
            sturm_real_root_count(RatPoly(), 0, 1)
        with pytest.raises(ValidationError):
            sturm_real_root_count(RatPoly.of([1, 1]), 1, 1)

    def test_sturm_against_factored_oracle(self):
        # (x+2)(x-1/3)(x-1)(x-5/2) with a window sweep
        roots = [F(-2), F(1, 3), F(1), F(5, 2)]
        p = RatPoly.of([1])
        for r in roots:
            p = p * RatPoly.of([-r, 1])
        for a, b in [(F(-3), F(3)), (F(-2), F(1)), (F(0), F(1, 3)), (F(2), F(3))]:
            expected = sum(1 for r in roots if a < r <= b)
            assert sturm_real_root_count(p, a, b) == expected
