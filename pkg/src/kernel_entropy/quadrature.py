"""Trigonometric integral representation of S, and the Bessel function I0.

For ``c != 0``::

    S_{n,c}(x) = 1/pi * int_0^pi (1 + 4cX sin^2(phi/2))^(-n/c) dphi

and for ``c = 0``::

    S_{n,0}(x) = 1/pi * int_0^pi exp(-4nX sin^2(phi/2)) dphi

with ``X = x (1 + cx) = n V_{n,c}(x)``. Integrals are computed with composite
16-point Gauss-Legendre, doubling the panel count until two successive
estimates agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import ConvergenceError, DomainError, OperatorParams, s_series

GAUSS_NODES = 16
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSpec:
    initial_panels: int = 4
    max_doublings: int = 14
    rel_tol: float = 1e-13

    def __post_init__(self):
        if self.initial_panels < 1 or self.max_doublings < 1:
            raise ValueError("initial_panels and max_doublings must be positive")
        if not self.rel_tol >= 100 * _EPS:
            raise ValueError(f"rel_tol must be at least {100 * _EPS:.3g}")


DEFAULT_SPEC = QuadratureSpec()


@lru_cache(maxsize=None)
def _gauss_rule(m: int):
    nodes, weights = np.polynomial.legendre.leggauss(m)
    return nodes, weights


def _panel_sum(f, a: float, b: float, panels: int):
    nodes, weights = _gauss_rule(GAUSS_NODES)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    pts = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    vals = f(pts)
    return vals @ w, np.abs(vals) @ w


def integrate(f, a: float, b: float, spec: QuadratureSpec = DEFAULT_SPEC):
    """Integrate ``f`` over ``[a, b]``.

    ``f`` maps an array of nodes to an array of values, or to a 2-D array with
    one row per component. Each component converges when its change between
    doublings is below ``rel_tol`` times the integral of its absolute value.
    Returns a float or a 1-D array matching the shape of ``f``.
    """
    panels = spec.initial_panels
    prev, _ = _panel_sum(f, a, b, panels)
    for _ in range(spec.max_doublings):
        panels *= 2
        cur, scale = _panel_sum(f, a, b, panels)
        if np.all(np.abs(cur - prev) <= spec.rel_tol * scale):
            out = cur
            break
        prev = cur
    else:
        raise ConvergenceError(
            f"quadrature did not converge after {spec.max_doublings} doublings "
            f"(last change {np.max(np.abs(cur - prev)):.3g})")
    return float(out) if np.ndim(out) == 0 else out


def _kernel_terms(params: OperatorParams, x: float, order: int):
    """Integrand rows for S and its first ``order`` x-derivatives."""
    n, c = params.n, params.c
    X = x * (1.0 + c * x)
    Xp = 1.0 + 2.0 * c * x

    def f(phi):
        u = np.sin(0.5 * phi) ** 2
        if c == 0.0:
            g = np.exp(-4.0 * n * X * u)
            rows = [g]
            if order >= 1:
                rows.append(-4.0 * n * Xp * u * g)
            if order >= 2:
                rows.append(16.0 * n * n * u * u * g)
        else:
            m = n / c
            B = 1.0 + 4.0 * c * X * u
            logB = np.log1p(4.0 * c * X * u) if c > 0 else None
            if c > 0:
                g = np.exp(-m * logB)
                g1 = np.exp((-m - 1.0) * logB)
                g2 = np.exp((-m - 2.0) * logB)
            else:
                # c = -1: integer exponents n, n-1, n-2 on B in [0, 1]
                g = B**n
                g1 = B ** (n - 1)
                g2 = B ** (n - 2) if n >= 2 else None
            rows = [g]
            if order >= 1:
                rows.append(-4.0 * n * Xp * u * g1)
            if order >= 2:
                d2 = -8.0 * n * c * u * g1
                if g2 is not None and n + c != 0.0:
                    d2 = d2 + 16.0 * n * (n + c) * Xp * Xp * u * u * g2
                rows.append(d2)
        return np.vstack(rows) / math.pi if order else rows[0] / math.pi

    return f


def s_integral(params: OperatorParams, x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """S_{n,c}(x) from its integral over ``[0, pi]``."""
    x = params.check(x)
    if x == 0.0:
        return 1.0
    return integrate(_kernel_terms(params, x, 0), 0.0, math.pi, spec)


def s_integral_derivatives(params: OperatorParams, x: float,
                           spec: QuadratureSpec = DEFAULT_SPEC) -> tuple[float, float, float]:
    """``(S, S', S'')`` by differentiating under the integral sign."""
    x = params.check(x)
    S, dS, d2S = integrate(_kernel_terms(params, x, 2), 0.0, math.pi, spec)
    return float(S), float(dS), float(d2S)


_I0_TAYLOR_MAX = 30.0


def bessel_i0e(x: float) -> float:
    """Exponentially scaled ``exp(-x) I0(x)``."""
    x = float(x)
    if x < 0 or math.isnan(x):
        raise DomainError(f"I0 argument must be nonnegative, got {x!r}")
    if x <= _I0_TAYLOR_MAX:
        return _i0_taylor(x) * math.exp(-x)
    # Hankel asymptotic series; its smallest term is about exp(-2x), far below eps here
    total = 1.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= (2 * k - 1) ** 2 / (8.0 * k * x)
        total += term
        if term <= 1e-17 * total:
            break
    return total / math.sqrt(2.0 * math.pi * x)


def _i0_taylor(x: float) -> float:
    q = 0.25 * x * x
    total = 1.0
    term = 1.0
    j = 0
    while True:
        j += 1
        term *= q / (j * j)
        total += term
        if term <= 1e-17 * total:
            return total


def bessel_i0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero."""
    x = float(x)
    if x < 0 or math.isnan(x):
        raise DomainError(f"I0 argument must be nonnegative, got {x!r}")
    if x <= _I0_TAYLOR_MAX:
        return _i0_taylor(x)
    return bessel_i0e(x) * math.exp(x)


def bessel_identity_residual(n: int, x: float) -> float:
    """Relative gap in ``I0(x) = exp(x) S_{n,0}(x / 2n)``."""
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    i0e = bessel_i0e(x)
    k = s_series(OperatorParams(n, 0.0), x / (2.0 * n))
    return abs(k - i0e) / i0e
