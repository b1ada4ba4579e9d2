import pytest

from hhbounds.core import Interval
from hhbounds.identity import (
    identity_lhs,
    identity_residual,
    identity_rhs,
    kernel_weighted_d2_integral,
)
from hhbounds.rng import SplitMix64

UNIT = Interval(0.0, 1.0)


class TestRightHandSide:
    def test_square_gives_one_twelfth(self, by_id):
        # f'' = 2, so the right side is (1/4) * 2 * 2 * (1/12) = 1/12
        assert identity_rhs(by_id["x2"], UNIT) == pytest.approx(1.0 / 12.0, abs=1e-10)

    def test_affine_vanishes(self, by_id):
        assert identity_rhs(by_id["affine"], UNIT) == pytest.approx(0.0, abs=1e-13)

    def test_cubic_on_one_two(self, by_id):
        # true gap of x^3 on [1,2] is (a+b)(b-a)^2/8 = 3/8
        assert identity_rhs(by_id["x3"], Interval(1.0, 2.0)) == pytest.approx(0.375, abs=1e-10)

    def test_exponential_matches_its_gap(self, by_id):
        expected = 0.17520119364380146  # (e - 1/e)/2 - 1
        assert identity_rhs(by_id["exp"], Interval(-1.0, 1.0)) == pytest.approx(
            expected, abs=1e-10)


class TestResidual:
    @pytest.mark.parametrize("fid,a,b", [
        ("x4", 0.0, 1.0),
        ("inv_x", 1.0, 2.0),
        ("exp", -1.0, 1.0),
    ])
    def test_named_cases_are_quadrature_noise(self, by_id, fid, a, b):
        assert identity_residual(by_id[fid], Interval(a, b)) < 1e-9

    def test_full_catalog_on_windows(self, catalog):
        for fn in catalog:
            assert identity_residual(fn, fn.window) < 1e-9, fn.id

    def test_random_subintervals(self, catalog):
        rng = SplitMix64(424242)
        for fn in catalog:
            for _ in range(20):
                iv = rng.subinterval(fn.window)
                assert identity_residual(fn, iv) < 1e-9, (fn.id, iv)

    def test_signed_left_side(self, by_id):
        # mean value of x^2 on [0,1] exceeds the midpoint value
        assert identity_lhs(by_id["x2"], UNIT) == pytest.approx(1.0 / 12.0, abs=1e-11)


class TestHalfCoefficientRegression:
    def test_doubled_coefficient_breaks_identity_on_square(self, by_id):
        # With a (b-a)^2/2 leading coefficient the right side doubles to 1/6
        # for x^2 on [0,1], leaving a residual of exactly 1/12.
        fn = by_id["x2"]
        weighted = kernel_weighted_d2_integral(fn, UNIT, tol=1e-12)
        rhs_half = UNIT.width ** 2 / 2.0 * weighted
        residual = abs(identity_lhs(fn, UNIT, tol=1e-12) - rhs_half)
        assert rhs_half == pytest.approx(1.0 / 6.0, abs=1e-11)
        assert residual == pytest.approx(1.0 / 12.0, abs=1e-10)
