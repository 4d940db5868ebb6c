"""Kernel tests: lngamma / digamma / polygamma against the series oracle."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import _oracle as oracle
from gammacert import (
    CONSTANTS,
    EULER_GAMMA,
    CapabilityError,
    DomainError,
    EvalOptions,
    ParameterError,
    PrecisionError,
    digamma,
    lngamma,
    polygamma,
)
from gammacert.gammakit import BERNOULLI_EVEN_RATIONAL, MAX_DERIV_ORDER

GRID = [float(x) for x in np.geomspace(1e-2, 1e3, 40)]


def rel_err(got: float, ref) -> float:
    ref = float(ref)
    return abs(got - ref) / max(abs(ref), 1e-300)


# ---------------------------------------------------------------------------
# accuracy against the independent oracle
# ---------------------------------------------------------------------------

def test_lngamma_matches_oracle_across_scales():
    worst = max(rel_err(lngamma(x), oracle.lngamma(x)) for x in GRID)
    assert worst <= 1e-12


def test_digamma_matches_oracle_across_scales():
    # digamma crosses zero near 1.46: compare absolutely near the root
    for x in GRID:
        ref = float(oracle.digamma(x))
        assert abs(digamma(x) - ref) <= 1e-12 * max(1.0, abs(ref))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6, 9, 12])
def test_polygamma_matches_oracle_across_scales(k):
    worst = max(rel_err(polygamma(k, x), oracle.polygamma(k, x)) for x in GRID)
    assert worst <= 1e-12


def test_small_argument_spots():
    assert rel_err(lngamma(1e-2), oracle.lngamma(1e-2)) <= 1e-13
    assert rel_err(digamma(1e-2), oracle.digamma(1e-2)) <= 1e-13
    assert rel_err(polygamma(6, 1e-2), oracle.polygamma(6, 1e-2)) <= 1e-13


def test_known_closed_form_values():
    assert abs(lngamma(1.0)) <= 1e-14
    assert abs(lngamma(2.0)) <= 1e-14
    assert rel_err(lngamma(0.5), 0.5 * math.log(math.pi)) <= 1e-13
    assert rel_err(lngamma(5.0), math.log(24.0)) <= 1e-14
    assert abs(digamma(1.0) + EULER_GAMMA) <= 1e-14
    assert abs(digamma(0.5) + EULER_GAMMA + 2.0 * math.log(2.0)) <= 1e-13
    assert rel_err(polygamma(1, 1.0), math.pi ** 2 / 6.0) <= 1e-14
    assert rel_err(polygamma(1, 0.5), math.pi ** 2 / 2.0) <= 1e-13


def test_constants_are_consistent():
    assert CONSTANTS.euler_gamma == EULER_GAMMA
    assert abs(float(oracle.euler_gamma()) - EULER_GAMMA) <= 1e-15
    assert rel_err(CONSTANTS.exp_neg_euler_gamma, math.exp(-EULER_GAMMA)) <= 1e-15
    assert rel_err(CONSTANTS.pi_sq_over_6, math.pi ** 2 / 6.0) <= 1e-15
    assert rel_err(CONSTANTS.log_two_pi, math.log(2.0 * math.pi)) <= 1e-15


def test_bernoulli_table_spot_values():
    assert BERNOULLI_EVEN_RATIONAL[0] == Fraction(1, 6)
    assert BERNOULLI_EVEN_RATIONAL[1] == Fraction(-1, 30)
    assert BERNOULLI_EVEN_RATIONAL[5] == Fraction(-691, 2730)
    assert BERNOULLI_EVEN_RATIONAL[:6] == oracle.bernoulli_even(6)


# ---------------------------------------------------------------------------
# functional equations
# ---------------------------------------------------------------------------

@given(st.floats(min_value=0.05, max_value=100.0, allow_nan=False))
def test_lngamma_recurrence(x):
    lhs = lngamma(x + 1.0) - lngamma(x)
    assert abs(lhs - math.log(x)) <= 1e-12 * max(1.0, abs(math.log(x)))


@given(st.floats(min_value=0.05, max_value=100.0, allow_nan=False))
def test_digamma_recurrence(x):
    lhs = digamma(x + 1.0) - digamma(x)
    assert abs(lhs - 1.0 / x) <= 1e-12 * max(1.0, 1.0 / x)


@given(st.integers(min_value=1, max_value=8),
       st.floats(min_value=0.1, max_value=50.0, allow_nan=False))
def test_polygamma_recurrence(k, x):
    jump = (-1.0) ** k * math.factorial(k) / x ** (k + 1)
    lhs = polygamma(k, x + 1.0) - polygamma(k, x)
    assert abs(lhs - jump) <= 1e-11 * abs(jump)


@pytest.mark.parametrize("k", range(1, 13))
def test_polygamma_sign_alternation(k):
    for x in (0.05, 1.0, 7.0, 300.0):
        assert (-1.0) ** (k + 1) * polygamma(k, x) > 0.0


def test_digamma_is_increasing_and_crosses_zero():
    xs = [0.5, 1.0, 1.4, 1.5, 2.0, 10.0]
    vals = [digamma(x) for x in xs]
    assert vals == sorted(vals)
    assert digamma(1.4) < 0.0 < digamma(1.5)


def test_evaluations_are_deterministic():
    assert lngamma(3.7) == lngamma(3.7)
    assert digamma(0.3) == digamma(0.3)
    assert polygamma(5, 2.2) == polygamma(5, 2.2)


# ---------------------------------------------------------------------------
# options and error paths
# ---------------------------------------------------------------------------

def test_domain_errors():
    for bad in (0.0, -1.0, math.nan, math.inf, -math.inf):
        with pytest.raises(DomainError):
            lngamma(bad)
        with pytest.raises(DomainError):
            digamma(bad)
        with pytest.raises(DomainError):
            polygamma(1, bad)


def test_polygamma_order_validation():
    assert MAX_DERIV_ORDER == 12
    for bad in (0, -1, 1.0, "2", True):
        with pytest.raises(DomainError):
            polygamma(bad, 1.0)
    with pytest.raises(CapabilityError):
        polygamma(13, 1.0)


def test_eval_options_validation():
    with pytest.raises(ParameterError):
        EvalOptions(shift_threshold=4.0)
    with pytest.raises(ParameterError):
        EvalOptions(asym_terms=3)
    with pytest.raises(ParameterError):
        EvalOptions(asym_terms=40)
    with pytest.raises(ParameterError):
        EvalOptions(rel_tol=1e-6)
    with pytest.raises(ParameterError):
        EvalOptions(rel_tol=0.0)


def test_larger_shift_threshold_agrees_with_default():
    opts = EvalOptions(shift_threshold=32.0, asym_terms=14)
    for x in (0.2, 1.0, 17.5, 500.0):
        base = lngamma(x)
        assert abs(lngamma(x, opts) - base) <= 1e-13 * max(1.0, abs(base))
        assert abs(digamma(x, opts) - digamma(x)) <= 1e-13 * max(
            1.0, abs(digamma(x)))
        assert rel_err(polygamma(3, x, opts), polygamma(3, x)) <= 1e-12


def test_truncation_guard_raises_precision_error():
    # few asymptotic terms + a low shift threshold + an unreachable tolerance
    opts = EvalOptions(shift_threshold=8.0, asym_terms=4, rel_tol=1e-30)
    with pytest.raises(PrecisionError):
        lngamma(50.0, opts)
    with pytest.raises(PrecisionError):
        digamma(50.0, opts)
    with pytest.raises(PrecisionError):
        polygamma(2, 50.0, opts)
