import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leafkernel import ode_oracle
from leafkernel.core import (
    REDUCTION_LIMIT,
    Case,
    arcsleaf,
    classify,
    cleaf,
    reduce_arg,
    sign_cleaf_prime,
    sign_sleaf_prime,
    sleaf,
)
from leafkernel.errors import ArgumentRangeError, DomainError
from leafkernel.numerics import period_constants
from leafkernel.reference import SLEAF3_CLEAF3_TABLE, TABLE_TOLERANCE

PI3 = period_constants(3).pi_n
ARGS = st.floats(-10.0, 10.0, allow_nan=False)
ORDERS = st.sampled_from([1, 2, 3])


def test_reduce_arg_examples():
    a = reduce_arg(3, 0.3)
    assert (a.residue, a.branch_m, a.negated) == (0.3, 0, False)
    b = reduce_arg(3, 0.3 + 2 * PI3)
    assert b.residue == pytest.approx(0.3, abs=1e-15)
    assert b.branch_m == 1
    c = reduce_arg(3, -0.3)
    assert c.negated and c.residue == 0.3 and c.branch_m == 0


@settings(max_examples=300, deadline=None)
@given(ORDERS, st.floats(-1e6, 1e6, allow_nan=False))
def test_reduce_arg_window_and_reconstruction(n, l):
    arg = reduce_arg(n, l)
    half = period_constants(n).half_pi_n
    assert -half <= arg.residue < 3 * half
    assert arg.reconstruct() == pytest.approx(l, abs=1e-15 * max(1.0, abs(l)) * 4)


def test_range_and_order_errors():
    for l in (math.inf, -math.inf, math.nan, 2 * REDUCTION_LIMIT):
        with pytest.raises(ArgumentRangeError):
            sleaf(3, l)
        with pytest.raises(ArgumentRangeError):
            cleaf(3, l)
    with pytest.raises(DomainError):
        sleaf(0, 0.5)
    with pytest.raises(DomainError):
        cleaf(1.5, 0.5)
    for r in (1.0000001, -2.0):
        with pytest.raises(DomainError):
            arcsleaf(3, r)


def test_sleaf_examples():
    assert sleaf(3, 0.5).r == pytest.approx(0.499443, abs=TABLE_TOLERANCE)
    assert sleaf(3, 2.0).r == pytest.approx(0.428461, abs=TABLE_TOLERANCE)
    v = sleaf(3, 0.0)
    assert (v.r, v.dr) == (0.0, 1.0)
    assert sleaf(1, 1.0).r == pytest.approx(math.sin(1.0), abs=1e-15)


def test_cleaf_examples():
    assert cleaf(3, 0.5).r == pytest.approx(0.707632, abs=TABLE_TOLERANCE)
    assert cleaf(3, 1.3).r == pytest.approx(-0.085670, abs=TABLE_TOLERANCE)
    v = cleaf(3, 0.0)
    assert (v.r, v.dr) == (1.0, 0.0)


def test_arcsleaf_examples():
    assert arcsleaf(1, 1.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert arcsleaf(3, 0.499443) == pytest.approx(0.5, abs=TABLE_TOLERANCE)
    for r in (0.1, 0.5, 0.9, 1.0):
        assert arcsleaf(3, -r) == -arcsleaf(3, r)


def test_sign_examples():
    assert sign_sleaf_prime(0.0) == 1
    assert sign_sleaf_prime(1.3) == -1
    assert sign_cleaf_prime(0.5) == -1
    # table rows 1.2 -> 1.4 decrease
    rows = {round(l, 1): s for l, s, _ in SLEAF3_CLEAF3_TABLE}
    assert rows[1.4] < rows[1.2]


def test_reference_table():
    for l, s, c in SLEAF3_CLEAF3_TABLE:
        assert abs(sleaf(3, l).r - s) <= TABLE_TOLERANCE
        assert abs(cleaf(3, l).r - c) <= TABLE_TOLERANCE
    # cleaf_3 changes sign between 1.2 and 1.3
    assert cleaf(3, 1.2).r > 0 > cleaf(3, 1.3).r


@settings(max_examples=300, deadline=None)
@given(ORDERS, ARGS)
def test_symmetry(n, l):
    assert abs(sleaf(n, -l).r + sleaf(n, l).r) <= 1e-11
    assert abs(cleaf(n, -l).r - cleaf(n, l).r) <= 1e-11


@settings(max_examples=300, deadline=None)
@given(ORDERS, ARGS)
def test_periodicity(n, l):
    period = period_constants(n).period
    assert abs(sleaf(n, l + period).r - sleaf(n, l).r) <= 1e-10
    assert abs(cleaf(n, l + period).r - cleaf(n, l).r) <= 1e-10


@settings(max_examples=300, deadline=None)
@given(ORDERS, ARGS)
def test_energy_and_amplitude(n, l):
    for v in (sleaf(n, l), cleaf(n, l)):
        assert abs(v.r) <= 1.0 + 1e-12
        assert abs(v.energy_residual()) <= 1e-10


@settings(max_examples=300, deadline=None)
@given(ARGS)
def test_quartic_relation(l):
    s, c = sleaf(3, l).r, cleaf(3, l).r
    assert abs(s * s + c * c + 2 * s * s * c * c - 1.0) <= 1e-11


@settings(max_examples=200, deadline=None)
@given(ARGS)
def test_lemniscate_relation(l):
    s, c = sleaf(2, l).r, cleaf(2, l).r
    assert abs(s * s + c * c + s * s * c * c - 1.0) <= 1e-11


def test_sine_and_cosine():
    for l in np.linspace(-10.0, 10.0, 2001):
        assert abs(sleaf(1, l).r - math.sin(l)) <= 1e-12
        assert abs(cleaf(1, l).r - math.cos(l)) <= 1e-12


def test_derivative_matches_finite_difference():
    h = 1e-6
    for n in (2, 3):
        for l in np.linspace(-6.0, 6.0, 97):
            fd = (sleaf(n, l + h).r - sleaf(n, l - h).r) / (2 * h)
            assert abs(fd - sleaf(n, l).dr) <= 1e-8
            fd = (cleaf(n, l + h).r - cleaf(n, l - h).r) / (2 * h)
            assert abs(fd - cleaf(n, l).dr) <= 1e-8


def test_second_difference_solves_ode():
    h = 1e-4
    for l in np.linspace(-8.0, 8.0, 321):
        r = sleaf(3, l).r
        second = (sleaf(3, l + h).r - 2 * r + sleaf(3, l - h).r) / (h * h)
        assert abs(second + 3 * r**5) <= 1e-5


@pytest.mark.parametrize("n", [2, 3])
def test_cleaf_against_ode(n):
    samples = np.linspace(0.0, 8.0, 81)
    traj = ode_oracle.integrate_leaf_ode(n, ode_oracle.CLEAF_START, 8.0, sample_at=samples)
    direct = np.array([cleaf(n, l).r for l in samples])
    assert np.max(np.abs(traj.r - direct)) <= 1e-8


def test_crest_and_zero_values():
    for n in (1, 2, 3):
        half = period_constants(n).half_pi_n
        top = sleaf(n, half)
        assert top.r == 1.0 and top.dr == 0.0
        assert abs(cleaf(n, half).r) <= 1e-15
        assert abs(sleaf(n, 2 * half).r) <= 1e-15


def test_tiny_arguments():
    for l in (1e-300, 1e-20, 1e-9):
        assert sleaf(3, l).r == pytest.approx(l, rel=1e-15)
        assert sleaf(3, -l).r == pytest.approx(-l, rel=1e-15)


def test_near_crest_derivative_precision():
    # dr = sqrt(1 - r^6) ~ 3 * delta near the crest; keeps relative accuracy
    half = period_constants(3).half_pi_n
    for delta in (1e-3, 1e-5, 1e-7):
        v = sleaf(3, half - delta)
        assert v.dr == pytest.approx(3 * delta, rel=1e-4)


@settings(max_examples=300, deadline=None)
@given(ARGS, ARGS)
def test_classify_matches_numeric_derivative_signs(l1, l2):
    case = classify(l1, l2)
    for l, sign in ((l1, case.s_sign_l1), (l2, case.s_sign_l2)):
        dr = sleaf(3, l).dr
        if abs(dr) > 1e-9:
            assert sign == (1 if dr > 0 else -1)
    dr = cleaf(3, l1).dr
    if abs(dr) > 1e-9:
        assert case.c_sign_l1 == (1 if dr > 0 else -1)
    assert case.sleaf_case == (Case.I if case.s_sign_l1 == case.s_sign_l2 else Case.II)
    assert case.cleaf_case == (Case.I if case.c_sign_l1 != case.s_sign_l2 else Case.II)
    assert {case.s_sign_l1, case.s_sign_l2, case.c_sign_l1} <= {-1, 1}


def test_half_open_boundaries():
    half = period_constants(3).half_pi_n
    assert sign_sleaf_prime(-half) == 1
    assert sign_sleaf_prime(half) == -1
    assert sign_cleaf_prime(0.0) == -1
    assert sign_cleaf_prime(PI3) == 1
