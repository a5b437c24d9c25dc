import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kernel_entropy.basis import DomainError, OperatorParams
from kernel_entropy.ode import (envelope, envelope_printed, envelope_quadratic_residual,
                                envelope_verdict, f_derivatives_exact, logconvexity_margin,
                                ode_residual, riccati_residual, s_derivatives)

from oracles import s_closed_form, s_derivative


@pytest.mark.parametrize("n,c,x", [(1, -1.0, 0.3), (6, -1.0, 0.9), (4, 0.0, 0.8), (3, 1.0, 1.7), (10, 2.0, 0.4)])
def test_derivatives_against_mpmath(n, c, x):
    d = s_derivatives(OperatorParams(n, c), x)
    assert d.S == pytest.approx(s_closed_form(n, c, x), rel=1e-12)
    assert d.dS == pytest.approx(s_derivative(n, c, x, 1), rel=1e-10)
    assert d.d2S == pytest.approx(s_derivative(n, c, x, 2), rel=1e-10)


@pytest.mark.parametrize("n", [1, 2, 9, 30])
def test_exact_bernstein_derivatives(n):
    for x in (0.0, 0.1, 0.5, 0.77, 1.0):
        a = f_derivatives_exact(n, x)
        b = s_derivatives(OperatorParams(n, -1), x)
        assert a.S == pytest.approx(b.S, rel=1e-12)
        assert a.dS == pytest.approx(b.dS, rel=1e-9, abs=1e-9)
        assert a.d2S == pytest.approx(b.d2S, rel=1e-9, abs=1e-9)


def test_ode_holds_for_mpmath_values():
    # the ODE itself, checked on reference values rather than our own derivatives
    n, c, x = 5, 1.0, 0.6
    X, Xp = x * (1 + c * x), 1 + 2 * c * x
    S, dS, d2S = (s_derivative(n, c, x, k) for k in range(3))
    lhs = X * Xp * d2S + (4 * (n + c) * X + 1) * dS + 2 * n * Xp * S
    assert abs(lhs) <= 1e-12 * (abs(X * Xp * d2S) + abs(2 * n * Xp * S))


@pytest.mark.parametrize("c", [-1.0, 0.0, 1.0])
def test_residuals_small(c):
    hi = 1.0 - 1 / 128 if c == -1 else 4.0
    for n in (1, 7, 30):
        p = OperatorParams(n, c)
        for x in np.linspace(1 / 128, hi, 17):
            assert ode_residual(p, float(x)) <= 1e-10
            assert riccati_residual(p, float(x)) <= 1e-10


@settings(max_examples=80, deadline=None)
@given(n=st.integers(1, 30), c=st.sampled_from([-1.0, 0.0, 0.5, 1.0, 3.0]), x=st.floats(1e-3, 3.0))
def test_envelope_roots(n, c, x):
    if c == -1.0:
        x = min(x, 0.999)
    p = OperatorParams(n, c)
    if abs(1 + 2 * c * x) < 1e-6:
        return
    env = envelope(p, x)
    assert env.z1 <= env.z2
    assert envelope_quadratic_residual(p, env) <= 1e-12
    assert env.Xp**2 == pytest.approx(1 + 4 * c * env.X, abs=1e-14 * (1 + 4 * abs(c) * env.X))
    coeffs = [env.X * env.Xp, 4 * (n + c) * env.X + 1, 2 * n * env.Xp]
    ref = np.sort(np.roots(coeffs).real)
    np.testing.assert_allclose([env.z1, env.z2], ref, rtol=1e-8)
    # the literal root formulas agree wherever they do not cancel badly
    lit = sorted(envelope_printed(p, x))
    np.testing.assert_allclose(lit, [env.z1, env.z2], rtol=1e-6)


def test_envelope_undefined_points():
    with pytest.raises(DomainError):
        envelope(OperatorParams(3, -1), 0.5)
    with pytest.raises(DomainError):
        envelope(OperatorParams(3, 0), 0.0)


@pytest.mark.parametrize("c", [-1.0, 0.0, 1.0])
def test_biconditional(c):
    xs = np.linspace(1 / 128, 1 - 1 / 128, 65) if c == -1 else np.linspace(1 / 128, 4.0, 65)
    for n in (1, 3, 12):
        p = OperatorParams(n, c)
        for x in xs:
            x = float(x)
            if abs(1 + 2 * c * x) < 1e-12:
                continue
            d = s_derivatives(p, x)
            margin = d.logconv_margin / d.logconv_scale
            if abs(margin) < 1e-9:
                continue
            assert (margin > 0) == envelope_verdict(envelope(p, x), d.A)


def test_logconvexity_margin_matches_definition():
    n, c, x = 4, -1.0, 0.2
    S, dS, d2S = (s_derivative(n, c, x, k) for k in range(3))
    assert logconvexity_margin(OperatorParams(n, c), x) == pytest.approx((d2S * S - dS**2) / S**2, rel=1e-9)


def test_envelope_containment_tolerance():
    env = envelope(OperatorParams(2, 0), 0.5)
    assert env.contains(env.z1) and env.contains(env.z2)
    assert not env.contains(env.z2 + 1.0)
    assert env.distance(0.5 * (env.z1 + env.z2)) > 0
