"""Legendre polynomials on ``t >= 1`` and their link with ``F_n = S_{n,-1}``.

On ``x in [0, 1/2)`` the substitution ``t = (2x^2 - 2x + 1) / (1 - 2x)`` gives::

    F_n(x) = (t - sqrt(t^2 - 1))^n P_n(t)

with ``t - sqrt(t^2 - 1) = 1 - 2x``. The ratio ``P_n'/P_n`` obeys several
two-sided bounds collected here, together with the bounds on ``P_n`` they
integrate to.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .basis import DomainError


@dataclass(frozen=True)
class TSubstitution:
    x: float
    t: float
    X: float
    Xp: float

    @property
    def root(self) -> float:
        """``sqrt(t^2 - 1)``, computed as ``2X / X'``."""
        return 2.0 * self.X / self.Xp

    @property
    def dt_dx(self) -> float:
        return 4.0 * self.X / (1.0 - 4.0 * self.X) if self.X else 0.0


def x_to_t(x: float) -> TSubstitution:
    x = float(x)
    if not 0.0 <= x < 0.5:
        raise DomainError(f"x must lie in [0, 1/2), got {x!r}")
    X = x * (1.0 - x)
    Xp = 1.0 - 2.0 * x
    return TSubstitution(x, (1.0 - 2.0 * X) / Xp, X, Xp)


def t_to_x(t: float) -> TSubstitution:
    t = float(t)
    if not t >= 1.0:
        raise DomainError(f"t must be >= 1, got {t!r}")
    s = _root(t)
    # 1 - t + s = 1 - 1/(t + s), free of cancellation for large t
    x = 0.5 * (1.0 - 1.0 / (t + s))
    return TSubstitution(x, t, x * (1.0 - x), 1.0 / (t + s))


def _root(t: float) -> float:
    return math.sqrt((t - 1.0) * (t + 1.0))


def _check_t(t: float, strict: bool = False) -> float:
    t = float(t)
    if strict and not t > 1.0:
        raise DomainError(f"t must be > 1, got {t!r}")
    if not t >= 1.0:
        raise DomainError(f"t must be >= 1, got {t!r}")
    return t


def legendre_pair(n: int, t: float) -> tuple[float, float]:
    """``(P_n(t), P_n'(t))`` by upward recurrence.

    The derivative uses ``P'_{k+1} = P'_{k-1} + (2k+1) P_k``, which only adds
    positive quantities for ``t >= 1``.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n!r}")
    if n == 0:
        return 1.0, 0.0
    p_prev, p = 1.0, t
    d_prev, d = 0.0, 1.0
    for k in range(1, n):
        p_next = ((2 * k + 1) * t * p - k * p_prev) / (k + 1)
        d_next = d_prev + (2 * k + 1) * p
        p_prev, p = p, p_next
        d_prev, d = d, d_next
    return p, d


def legendre_p(n: int, t: float) -> float:
    return legendre_pair(n, _check_t(t))[0]


def legendre_dp(n: int, t: float) -> float:
    return legendre_pair(n, _check_t(t))[1]


def legendre_ratio(n: int, t: float) -> float:
    """``P_n'(t) / P_n(t)``."""
    p, d = legendre_pair(n, _check_t(t))
    return d / p


def f_via_legendre(n: int, x: float) -> float:
    """``F_n(x)`` through the Legendre representation, ``x in [0, 1/2)``."""
    sub = x_to_t(x)
    return sub.Xp**n * legendre_p(n, sub.t)


def ratio_lower_bound(n: int, t: float) -> float:
    """``n(n+1) / (2t + (n-1) sqrt(t^2-1))``, a lower bound for ``P_n'/P_n``."""
    t = _check_t(t)
    return n * (n + 1) / (2.0 * t + (n - 1) * _root(t))


def ratio_upper_simple(n: int, t: float) -> float:
    t = _check_t(t)
    return 2.0 * n * n / (t + (2 * n - 1) * _root(t))


def ratio_upper_refined(n: int, t: float) -> float:
    t = _check_t(t)
    return n * n * (2 * n + 1) / ((n + 1) * t + (2 * n * n - 1) * _root(t))


def ratio_upper_conditional(n: int, t: float) -> float:
    """Upper bound for ``P_n'/P_n`` that holds if ``log F_n`` is convex.

    Evaluated in the rationalised form
    ``2n^2 / (sqrt(4n^2 (t^2-1) + w^2) + w)`` with ``w = t - sqrt(t^2-1)``.
    """
    t = _check_t(t, strict=True)
    s = _root(t)
    w = 1.0 / (t + s)
    return 2.0 * n * n / (math.sqrt(4.0 * n * n * s * s + w * w) + w)


def _log_poly_upper_sharp(n: int, t: float) -> float:
    s = _root(t)
    d = 2 * n * n - n - 2
    a = n * (2 * n * n - 1) / d
    b = n * (n + 1) / d
    return a * math.log(t + s) - b * math.log(t + (2 * n * n - 1) / (n + 1) * s)


def poly_upper_sharp(n: int, t: float) -> float:
    t = _check_t(t)
    if n < 1:
        raise DomainError(f"n must be positive, got {n!r}")
    return math.exp(_log_poly_upper_sharp(n, t))


def poly_upper_simple(n: int, t: float) -> float:
    t = _check_t(t)
    if n < 2:
        raise DomainError(f"bound needs n >= 2, got {n!r}")
    s = _root(t)
    a = n * (2 * n - 1) / (2 * (n - 1))
    b = n / (2 * (n - 1))
    return math.exp(a * math.log(t + s) - b * math.log(t + (2 * n - 1) * s))


def crossover_ratio(n: int) -> float:
    return (3 * n + 2) / (4 * n + 3)


def crossover_t(n: int) -> float:
    """Point ``t* > 1`` where ``t / (t + sqrt(t^2-1)) = (3n+2)/(4n+3)``.

    Squaring gives ``t*^2 = r^2 / (2r - 1)``; ``r > 1/2`` for every ``n``.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n!r}")
    r = crossover_ratio(n)
    return r / math.sqrt(2.0 * r - 1.0)
