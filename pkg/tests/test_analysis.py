import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexalg import (
    ArityMismatchError,
    DegenerateIntervalError,
    FiniteDist,
    NotDominatedError,
    Tolerance,
    UnknownFunctionError,
    check_convex_in,
    check_div_convexity,
    check_div_nonneg,
    concave_at,
    convex_at,
    div,
    get_function,
    log_ext,
    second_derivative_test,
)
from convexalg.analysis import FUNCTIONS, check_order_laws, float_conv, real_str

SQUARE = FUNCTIONS["square"]
LOG = FUNCTIONS["log_ext"]
NEG_LOG = FUNCTIONS["neg_log_ext"]
SIN = FUNCTIONS["sin"]
LINEAR = FUNCTIONS["linear"]


class TestLogExt:
    def test_values(self):
        assert log_ext(1.0) == 0.0
        assert log_ext(8.0) == 3.0
        assert log_ext(0.25) == -2.0

    def test_extension_clamps_nonpositive_to_zero(self):
        assert log_ext(0.0) == 0.0
        assert log_ext(-5.0) == 0.0

    def test_other_base(self):
        assert log_ext(math.e, base=math.e) == pytest.approx(1.0)


def test_real_str_is_17_digit_decimal():
    assert real_str(0.1) == "0.10000000000000001"
    assert real_str(1.0) == "1"
    assert real_str(-2.5) == "-2.5"


def test_tolerance_rejects_negative_slack():
    with pytest.raises(ValueError):
        Tolerance(slack=-1e-9)


def test_get_function_unknown_lists_catalog():
    with pytest.raises(UnknownFunctionError, match="known:"):
        get_function("cosh")
    assert get_function("square") is SQUARE


class TestPointwise:
    def test_square_midpoint(self):
        # f(1) = 1 <= (f(0) + f(2)) / 2 = 2
        assert convex_at(SQUARE, 0.5, 0.0, 2.0)

    def test_equal_endpoints_are_always_tight(self):
        assert convex_at(SQUARE, 0.3, 4.0, 4.0)
        assert concave_at(SQUARE, 0.3, 4.0, 4.0)

    def test_neg_log_midpoint(self):
        # mix = 2.5, f(2.5) = -log2(2.5) ~ -1.3219 <= (0 + -2)/2 = -1
        assert convex_at(NEG_LOG, 0.5, 1.0, 4.0)
        assert NEG_LOG(2.5) == pytest.approx(-math.log2(2.5))

    def test_duality(self):
        assert concave_at(LOG, 0.5, 1.0, 4.0)
        assert not convex_at(LOG, 0.5, 1.0, 4.0)


@given(
    st.floats(min_value=-100, max_value=100),
    st.floats(min_value=-100, max_value=100),
    st.floats(min_value=0, max_value=1),
)
def test_square_convex_everywhere_sampled(x, y, p):
    assert convex_at(SQUARE, p, x, y)


class TestSampledChecks:
    def test_log_concave_on_positive_interval(self):
        assert check_convex_in(LOG, (1.0, 100.0), seed=3, cases=2000,
                               mode="concave").ok

    def test_log_extension_breaks_concavity_across_zero(self):
        # mixing across the 0 plateau violates the inequality
        report = check_convex_in(LOG, (-5.0, 5.0), seed=3, cases=2000,
                                 mode="concave")
        result = report.results[0]
        assert not result.passed
        assert result.counterexample is not None
        assert set(result.counterexample.detail) == {"p", "x", "y", "f(mix)", "mixed_f"}

    def test_square_convex_not_concave(self):
        assert check_convex_in(SQUARE, (-50.0, 50.0), seed=3, cases=2000).ok
        assert not check_convex_in(SQUARE, (-50.0, 50.0), seed=3, cases=2000,
                                   mode="concave").ok

    def test_sin_is_neither_on_a_full_period(self):
        dom = (0.0, 2.0 * math.pi)
        assert not check_convex_in(SIN, dom, seed=3, cases=2000).ok
        assert not check_convex_in(SIN, dom, seed=3, cases=2000, mode="concave").ok

    def test_linear_is_both(self):
        assert check_convex_in(LINEAR, (-10.0, 10.0), seed=3, cases=1000).ok
        assert check_convex_in(LINEAR, (-10.0, 10.0), seed=3, cases=1000,
                               mode="concave").ok

    def test_bad_mode_and_bad_interval(self):
        with pytest.raises(ValueError):
            check_convex_in(SQUARE, (0.0, 1.0), mode="monotone")
        with pytest.raises(DegenerateIntervalError):
            check_convex_in(SQUARE, (1.0, 1.0))
        with pytest.raises(DegenerateIntervalError):
            check_convex_in(SQUARE, (0.0, math.inf))

    def test_callable_domain_is_used_directly(self):
        report = check_convex_in(LOG, lambda rng: rng.uniform(2.0, 3.0),
                                 seed=0, cases=500, mode="concave")
        assert report.ok

    def test_law_names(self):
        report = check_convex_in(SQUARE, (0.0, 1.0), cases=10)
        assert report.results[0].law == "analysis/convex/square"


class TestSecondDerivative:
    def test_square_has_positive_curvature(self):
        assert second_derivative_test(SQUARE, (-10.0, 10.0), grid_points=200).ok

    def test_log_has_negative_curvature_on_positive_axis(self):
        report = second_derivative_test(LOG, (2.0 ** -10, 2.0 ** 10),
                                        grid_points=500, mode="concave")
        assert report.ok
        assert report.results[0].law == "analysis/second-derivative/concave/log_ext"

    def test_sin_fails_convexity(self):
        report = second_derivative_test(SIN, (0.0, 2.0 * math.pi), grid_points=100)
        result = report.results[0]
        assert not result.passed
        assert "second_difference" in result.counterexample.detail

    def test_linear_passes_both_modes(self):
        assert second_derivative_test(LINEAR, (-5.0, 5.0), grid_points=50).ok
        assert second_derivative_test(LINEAR, (-5.0, 5.0), grid_points=50,
                                      mode="concave").ok

    def test_validation(self):
        with pytest.raises(DegenerateIntervalError):
            second_derivative_test(SQUARE, (3.0, 3.0))
        with pytest.raises(ValueError):
            second_derivative_test(SQUARE, (0.0, 1.0), grid_points=2)
        with pytest.raises(DegenerateIntervalError):
            second_derivative_test(SQUARE, (-1.0, 1.0), spacing="log")
        with pytest.raises(ValueError):
            second_derivative_test(SQUARE, (0.0, 1.0), spacing="chebyshev")


def fd(*ws):
    return FiniteDist(tuple(F(w) for w in ws))


class TestDivergence:
    def test_self_divergence_is_zero(self):
        P = fd(F(1, 3), F(1, 6), F(1, 2))
        assert div(P, P) == 0.0

    def test_one_bit(self):
        # deterministic vs fair coin: exactly 1 bit
        assert div(fd(1, 0), fd(F(1, 2), F(1, 2))) == 1.0

    def test_natural_base(self):
        assert div(fd(1, 0), fd(F(1, 2), F(1, 2)), base=math.e) == pytest.approx(math.log(2))

    def test_zero_mass_terms_are_dropped(self):
        # P(a) = 0 where Q(a) = 0 is fine; the term never divides
        P = fd(F(1, 2), F(1, 2), 0)
        Q = fd(F(1, 4), F(3, 4), 0)
        expected = 0.5 * math.log2(2.0) + 0.5 * math.log2(F(1, 2) / F(3, 4))
        assert div(P, Q) == pytest.approx(expected)

    def test_not_dominated(self):
        with pytest.raises(NotDominatedError):
            div(fd(F(1, 2), F(1, 2)), fd(1, 0))

    def test_alphabet_mismatch(self):
        with pytest.raises(ArityMismatchError):
            div(fd(1, 0), fd(1, 0, 0))

    def test_nonnegativity_sampled(self):
        for alphabet in (2, 3, 4):
            assert check_div_nonneg(seed=5, cases=1500, alphabet=alphabet).ok

    def test_joint_convexity_sampled(self):
        report = check_div_convexity(seed=5, cases=1500, alphabet=4)
        assert report.ok
        assert report.results[0].law == "analysis/divergence-convexity"

    def test_convex_combination_identity_case(self):
        # lam = 1 mixture collapses: lhs and rhs both equal div(P1, Q1)
        P1, Q1 = fd(F(1, 4), F(3, 4)), fd(F(1, 2), F(1, 2))
        lhs = div(P1, Q1)
        rhs = float_conv(1.0, div(P1, Q1), div(fd(1, 0), fd(1, 0)))
        assert lhs == rhs


def test_order_laws():
    report = check_order_laws(seed=0, cases=300)
    assert report.ok
    assert [r.law for r in report.results] == [
        "analysis/order-reflexivity",
        "analysis/order-transitivity",
        "analysis/order-antisymmetry",
    ]
