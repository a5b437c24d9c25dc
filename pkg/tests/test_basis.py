import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kernel_entropy.basis import (ConvergenceError, DomainError, OperatorParams, basis_weight,
                                  bernstein_derivative, bernstein_eval, entropy_point,
                                  f_bernstein_coeffs, renyi_entropy, s_series, tsallis_entropy,
                                  variance)

from oracles import f_exact, s_closed_form


def test_params_validation():
    with pytest.raises(DomainError):
        OperatorParams(0, -1)
    with pytest.raises(DomainError):
        OperatorParams(2, -0.5)
    with pytest.raises(DomainError):
        OperatorParams(2.5, 0)
    with pytest.raises(DomainError):
        OperatorParams(True, 0)
    assert OperatorParams(3, 2).domain == (0.0, math.inf)
    assert OperatorParams(3, -1).domain == (0.0, 1.0)
    with pytest.raises(DomainError):
        OperatorParams(3, -1).check(1.5)


def test_small_values_exact():
    # n = 1: x^2 + (1-x)^2
    assert s_series(OperatorParams(1, -1), 0.25) == pytest.approx(0.625, rel=1e-15)
    x = Fraction(1, 4)
    assert s_series(OperatorParams(3, -1), 0.25) == pytest.approx(float(f_exact(3, x)), rel=1e-15)
    assert s_series(OperatorParams(5, 0), 0.0) == 1.0


@pytest.mark.parametrize("c", [-1.0, 0.0, 0.5, 1.0, 2.0])
@pytest.mark.parametrize("n", [1, 2, 7, 30])
def test_series_matches_closed_form(n, c):
    hi = 1.0 if c == -1 else 6.0
    for x in np.linspace(0.0, hi, 13):
        ref = s_closed_form(n, c, float(x))
        assert s_series(OperatorParams(n, c), float(x)) == pytest.approx(ref, rel=1e-12)


def test_large_n_bernstein_log_path():
    n, x = 200, 0.3
    assert s_series(OperatorParams(n, -1), x) == pytest.approx(s_closed_form(n, -1, x), rel=1e-11)


def test_far_tail_szasz():
    assert s_series(OperatorParams(3, 0), 500.0) == pytest.approx(s_closed_form(3, 0, 500.0), rel=1e-12)


def test_term_cap():
    with pytest.raises(ConvergenceError):
        s_series(OperatorParams(10, 0), 2e5)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 40), x=st.floats(0.0, 1.0))
def test_bernstein_partition_and_mean(n, x):
    p = OperatorParams(n, -1)
    w = [basis_weight(p, j, x) for j in range(n + 1)]
    assert math.fsum(w) == pytest.approx(1.0, abs=1e-13)
    assert math.fsum(j / n * wj for j, wj in enumerate(w)) == pytest.approx(x, abs=1e-13)
    second = math.fsum((j / n - x) ** 2 * wj for j, wj in enumerate(w))
    assert second == pytest.approx(variance(p, x), abs=1e-13)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 20), c=st.sampled_from([0.0, 1.0, 3.0]), x=st.floats(0.0, 3.0))
def test_infinite_family_moments(n, c, x):
    p = OperatorParams(n, c)
    # Baskakov tails decay like (cx/(1+cx))^j, so keep plenty of terms
    w = np.array([basis_weight(p, j, x) for j in range(4000)])
    j = np.arange(4000)
    assert w.sum() == pytest.approx(1.0, abs=1e-10)
    assert (j / n * w).sum() == pytest.approx(x, abs=1e-10)
    assert (((j / n - x) ** 2) * w).sum() == pytest.approx(variance(p, x), abs=1e-10)
    assert (w ** 2).sum() == pytest.approx(s_series(p, x), rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 60), x=st.floats(0.0, 1.0))
def test_bernstein_symmetry(n, x):
    p = OperatorParams(n, -1)
    assert s_series(p, x) == pytest.approx(s_series(p, 1.0 - x), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(S=st.floats(1e-300, 1.0))
def test_entropy_transforms(S):
    r, t = renyi_entropy(S), tsallis_entropy(S)
    assert r >= 0.0 and 0.0 <= t <= 1.0
    # both are decreasing functions of S, and T = 1 - exp(-R)
    assert t == pytest.approx(-math.expm1(-r), abs=1e-15)


def test_entropy_rejects_nonpositive():
    with pytest.raises(DomainError):
        renyi_entropy(0.0)
    with pytest.raises(DomainError):
        tsallis_entropy(-1.0)


def test_entropy_point_at_origin():
    pt = entropy_point(OperatorParams(4, 1), 0.0)
    assert (pt.S, pt.V, pt.renyi, pt.tsallis) == (1.0, 0.0, 0.0, 0.0)
    assert math.copysign(1.0, pt.renyi) == 1.0


@pytest.mark.parametrize("n", [1, 3, 10])
def test_bernstein_form_of_F(n):
    d = f_bernstein_coeffs(n)
    for x in np.linspace(0, 1, 9):
        assert bernstein_eval(d, x) == pytest.approx(float(f_exact(n, Fraction(x))), rel=1e-13)
    # derivative of the Bernstein form against a central difference of the exact polynomial
    dd = bernstein_derivative(d)
    x, h = Fraction(3, 10), Fraction(1, 10**6)
    fd = (f_exact(n, x + h) - f_exact(n, x - h)) / (2 * h)
    assert bernstein_eval(dd, 0.3) == pytest.approx(float(fd), rel=1e-9)
