"""Derivatives of S_{n,c}, the second-order ODE it satisfies, and log-convexity.

With ``X = x(1+cx)`` and ``X' = 1+2cx``, S solves::

    X X' S'' + (4(n+c)X + 1) S' + 2n X' S = 0

so ``A = S'/S`` solves a Riccati equation, and ``log S`` is convex at ``x``
exactly when ``A`` lies between the roots of
``X X' z^2 + (4(n+c)X + 1) z + 2n X'`` (wherever ``X X' != 0``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .basis import (DomainError, OperatorParams, bernstein_derivative,
                    bernstein_eval, f_bernstein_coeffs)
from .quadrature import DEFAULT_SPEC, QuadratureSpec, s_integral_derivatives


@dataclass(frozen=True)
class SDerivatives:
    x: float
    S: float
    dS: float
    d2S: float

    @property
    def A(self) -> float:
        return self.dS / self.S

    @property
    def logconv_margin(self) -> float:
        """``(log S)''``."""
        return (self.d2S * self.S - self.dS * self.dS) / (self.S * self.S)

    @property
    def logconv_scale(self) -> float:
        return (abs(self.d2S * self.S) + self.dS * self.dS) / (self.S * self.S)


@dataclass(frozen=True)
class Envelope:
    x: float
    z1: float
    z2: float
    X: float
    Xp: float

    def contains(self, A: float, tol: float = 0.0) -> bool:
        width = tol * max(abs(self.z1), abs(self.z2), 1.0)
        return self.z1 - width <= A <= self.z2 + width

    def distance(self, A: float) -> float:
        """Signed distance of ``A`` to the envelope: positive inside."""
        return min(A - self.z1, self.z2 - A)


def s_derivatives(params: OperatorParams, x: float,
                  spec: QuadratureSpec = DEFAULT_SPEC) -> SDerivatives:
    """S and its first two derivatives, differentiated under the integral sign."""
    x = params.check(x)
    S, dS, d2S = s_integral_derivatives(params, x, spec)
    return SDerivatives(x, S, dS, d2S)


def f_derivatives_exact(n: int, x: float) -> SDerivatives:
    """Polynomial derivatives of ``F_n = S_{n,-1}`` from its Bernstein form."""
    x = OperatorParams(n, -1).check(x)
    d0 = f_bernstein_coeffs(n)
    d1 = bernstein_derivative(d0)
    d2 = bernstein_derivative(d1)
    return SDerivatives(x, bernstein_eval(d0, x), bernstein_eval(d1, x), bernstein_eval(d2, x))


def _coefficients(params: OperatorParams, x: float):
    X = x * (1.0 + params.c * x)
    Xp = 1.0 + 2.0 * params.c * x
    return X * Xp, 4.0 * (params.n + params.c) * X + 1.0, 2.0 * params.n * Xp


def _normalized(terms) -> float:
    total = math.fsum(terms)
    scale = math.fsum(abs(t) for t in terms)
    return abs(total) / scale if scale else 0.0


def ode_residual(params: OperatorParams, x: float, derivs: SDerivatives | None = None) -> float:
    """Residual of the ODE divided by the sum of its term magnitudes."""
    d = derivs if derivs is not None else s_derivatives(params, x)
    a2, a1, a0 = _coefficients(params, d.x)
    return _normalized((a2 * d.d2S, a1 * d.dS, a0 * d.S))


def riccati_residual(params: OperatorParams, x: float, derivs: SDerivatives | None = None) -> float:
    """Normalized residual of the Riccati equation for ``A = S'/S``."""
    d = derivs if derivs is not None else s_derivatives(params, x)
    a2, a1, a0 = _coefficients(params, d.x)
    A = d.A
    dA = d.logconv_margin
    return _normalized((a2 * (dA + A * A), a1 * A, a0))


def envelope(params: OperatorParams, x: float) -> Envelope:
    """Roots ``z1 <= z2`` of ``X X' z^2 + (4(n+c)X+1) z + 2n X'``."""
    x = params.check(x)
    n, c = params.n, params.c
    X = x * (1.0 + c * x)
    Xp = 1.0 + 2.0 * c * x
    if X == 0.0 or Xp == 0.0:
        raise DomainError(f"envelope undefined at x={x} (X X' = 0)")
    b = 1.0 + 4.0 * c * X
    disc = math.hypot(b, 4.0 * n * X)
    lead = 2.0 * X * Xp
    # the root with -sqrt has no cancellation; the other follows from z1 z2 = 2n/X
    far = (-disc - b - 4.0 * n * X) / lead
    near = 2.0 * n / (X * far)
    z1, z2 = (far, near) if far <= near else (near, far)
    return Envelope(x, z1, z2, X, Xp)


def envelope_printed(params: OperatorParams, x: float) -> tuple[float, float]:
    """The two root formulas evaluated literally, ``-sqrt`` first."""
    n, c = params.n, params.c
    X = x * (1.0 + c * x)
    Xp = 1.0 + 2.0 * c * x
    b = 1.0 + 4.0 * c * X
    disc = math.sqrt(b * b + (4.0 * n * X) ** 2)
    return ((-disc - b - 4.0 * n * X) / (2.0 * X * Xp),
            (disc - b - 4.0 * n * X) / (2.0 * X * Xp))


def envelope_quadratic_residual(params: OperatorParams, env: Envelope) -> float:
    a2 = env.X * env.Xp
    a1 = 4.0 * (params.n + params.c) * env.X + 1.0
    a0 = 2.0 * params.n * env.Xp
    return max(_normalized((a2 * z * z, a1 * z, a0)) for z in (env.z1, env.z2))


def envelope_verdict(env: Envelope, A: float, tol: float = 0.0) -> bool:
    """Whether ``A`` lies in ``[z1, z2]``, the log-convexity criterion.

    ``(log S)'' = -q(A) / (X X')`` where ``q`` is the envelope quadratic with
    leading coefficient ``X X'``, so the criterion reads "between the roots"
    on both sides of ``X' = 0``.
    """
    return env.contains(A, tol)


def logconvexity_margin(params: OperatorParams, x: float) -> float:
    """``(log S)''(x)``; nonnegative wherever ``log S`` is convex."""
    return s_derivatives(params, x).logconv_margin
