"""Tests for unit-ball volumes and their ratio inequalities."""

from __future__ import annotations

import math

import pytest

import _oracle as oracle
from gammacert import (
    DomainError,
    ball_ratio_checks,
    log_omega,
    omega,
    recurrence_check,
)


def test_omega_closed_form_spots():
    assert omega(0) == 1.0
    assert math.isclose(omega(1), 2.0, rel_tol=2e-14)
    assert math.isclose(omega(2), math.pi, rel_tol=2e-14)
    assert math.isclose(omega(3), 4.0 * math.pi / 3.0, rel_tol=2e-14)
    assert math.isclose(omega(4), math.pi ** 2 / 2.0, rel_tol=2e-14)


def test_log_omega_matches_oracle():
    for n in (1, 2, 7, 50, 400):
        ref = float(oracle.log_omega(n))
        assert abs(log_omega(n) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_dimension_validation():
    with pytest.raises(DomainError):
        log_omega(-1)
    with pytest.raises(DomainError):
        omega(-3)
    with pytest.raises(DomainError):
        ball_ratio_checks(0)
    with pytest.raises(DomainError):
        recurrence_check(1)
    for bad in (True, 1.0, "2", None):
        with pytest.raises(DomainError):
            log_omega(bad)


def test_check_counts_by_dimension():
    assert len(ball_ratio_checks(1)) == 3
    assert len(ball_ratio_checks(2)) == 3
    assert len(ball_ratio_checks(3)) == 4
    names = [r.name for r in ball_ratio_checks(5)]
    assert names == [
        "ball_ratio_skip2_window",
        "ball_ratio_adjacent_window",
        "ball_sandwich_consecutive",
        "ball_adjacent_refines_sandwich",
    ]


def test_all_ratio_checks_hold_up_to_dimension_sixty():
    for n in range(1, 61):
        for r in ball_ratio_checks(n):
            assert r.holds, (n, r.name, r.margin)


def test_sandwich_equality_at_dimension_one():
    # (2/sqrt(pi)) Omega_2^{1/2} = 2 = Omega_1 exactly: the non-strict
    # lower side touches, so margin ~ 0 and the check still holds
    r = ball_ratio_checks(1)[2]
    assert r.name == "ball_sandwich_consecutive"
    assert r.holds
    lower_gap = dict(r.inputs)["mid"] - r.lhs
    assert abs(lower_gap) <= 1e-14


def test_refinement_slacks_are_positive():
    for n in range(3, 11):
        r = ball_ratio_checks(n)[3]
        d = dict(r.inputs)
        assert d["slack_lower"] > 0.0
        assert d["slack_upper"] > 0.0
        assert r.margin > 0.0


def test_recurrence_residual_is_tiny():
    for n in range(2, 101):
        r = recurrence_check(n)
        assert r.name == "ball_volume_recurrence"
        assert not r.strict
        assert r.holds
        assert abs(dict(r.inputs)["mid"]) <= 1e-12
