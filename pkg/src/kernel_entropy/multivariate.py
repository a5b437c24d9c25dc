"""Squared Bernstein sums on the triangle and on the square.

On the simplex ``x, y >= 0, x + y <= 1``::

    R_n(x, y) = sum_{i+j<=n} (n! / (i! j! (n-i-j)!))^2 x^2i y^2j (1-x-y)^2(n-i-j)

For fixed ``y < 1`` this collapses to univariate sums ``F_{n-j}(x / (1-y))``,
so ``R_n`` is convex along every segment parallel to a side of the triangle.
On the square the sum factorises as ``Q_n(x, y) = F_n(x) F_n(y)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .basis import DomainError, OperatorParams, s_series
from .reports import ViolationReport

AXIAL_TOL = 1e-9
HESSIAN_STEP = 1e-4
HESSIAN_TOL = 1e-7
LOG_CONVEX_TOL = 1e-9


@dataclass(frozen=True)
class SimplexPoint:
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        # tolerate rounding on the hypotenuse
        if x < 0 or y < 0 or x + y > 1.0 + 1e-15:
            raise DomainError(f"({x}, {y}) is outside the canonical triangle")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def slack(self) -> float:
        return max(0.0, 1.0 - self.x - self.y)


def _F(n: int, x: float) -> float:
    if n == 0:
        return 1.0
    return s_series(OperatorParams(n, -1), min(max(x, 0.0), 1.0))


def r_n(n: int, p: SimplexPoint) -> float:
    """Brute-force multinomial sum."""
    x, y, z = p.x, p.y, p.slack
    fn = math.factorial(n)
    terms = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            m = fn // (math.factorial(i) * math.factorial(j) * math.factorial(k))
            terms.append(float(m * m) * x ** (2 * i) * y ** (2 * j) * z ** (2 * k))
    return math.fsum(terms)


def r_n_reduction(n: int, p: SimplexPoint) -> float:
    """``R_n`` through univariate ``F_{n-j}`` evaluated at ``x / (1-y)``."""
    if p.y >= 1.0:
        raise DomainError("the reduction needs y < 1")
    y = p.y
    u = p.x / (1.0 - y)
    return math.fsum(math.comb(n, j) ** 2 * y ** (2 * j) * (1.0 - y) ** (2 * (n - j)) * _F(n - j, u)
                     for j in range(n + 1))


def _lattice(step: float) -> int:
    N = int(round(1.0 / step))
    if N < 1 or abs(N * step - 1.0) > 1e-9:
        raise ValueError(f"step must be 1/N for an integer N, got {step!r}")
    return N


def axial_convexity_scan(n: int, step: float) -> list[ViolationReport]:
    """Second differences of ``R_n`` along the three side directions.

    Grid lines run parallel to Ox, Oy, and the hypotenuse. Lines with fewer
    than three grid points are skipped.
    """
    if not 0 < step <= 0.125:
        raise ValueError("step must lie in (0, 1/8]")
    N = _lattice(step)
    R = {}
    for i in range(N + 1):
        for j in range(N + 1 - i):
            R[i, j] = r_n(n, SimplexPoint(i / N, j / N))

    out = []

    def second(a, b, c, where, direction):
        d2 = R[a] - 2.0 * R[b] + R[c]
        if d2 < -AXIAL_TOL:
            out.append(ViolationReport("axial-convexity", {"n": n, "direction": direction},
                                       (b[0] / N, b[1] / N), d2, False))

    for i in range(N + 1):
        for j in range(N + 1 - i):
            if i >= 1 and i + 1 + j <= N:
                second((i - 1, j), (i, j), (i + 1, j), (i, j), "x")
            if j >= 1 and i + j + 1 <= N:
                second((i, j - 1), (i, j), (i, j + 1), (i, j), "y")
            if i >= 1 and j >= 1:
                second((i - 1, j + 1), (i, j), (i + 1, j - 1), (i, j), "hypotenuse")
    return sorted(out, key=ViolationReport.sort_key)


def q_n(n: int, x: float, y: float) -> float:
    for v in (x, y):
        if not 0.0 <= v <= 1.0:
            raise DomainError(f"({x}, {y}) is outside the unit square")
    return _F(n, x) * _F(n, y)


def q_n_double_sum(n: int, x: float, y: float) -> float:
    bx = [math.comb(n, i) ** 2 * x ** (2 * i) * (1.0 - x) ** (2 * n - 2 * i) for i in range(n + 1)]
    by = [math.comb(n, j) ** 2 * y ** (2 * j) * (1.0 - y) ** (2 * n - 2 * j) for j in range(n + 1)]
    return math.fsum(a * b for a in bx for b in by)


def _hessian(f, x: float, y: float, h: float = HESSIAN_STEP):
    f0 = f(x, y)
    fxx = (f(x + h, y) - 2.0 * f0 + f(x - h, y)) / (h * h)
    fyy = (f(x, y + h) - 2.0 * f0 + f(x, y - h)) / (h * h)
    fxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h)
    return fxx, fyy, fxy


def _psd(fxx: float, fyy: float, fxy: float) -> bool:
    return fxx >= -HESSIAN_TOL and fyy >= -HESSIAN_TOL and fxx * fyy - fxy * fxy >= -HESSIAN_TOL


@dataclass
class EquivalenceReport:
    """Grid verdicts for: log F_n convex, Q_n convex, log Q_n convex."""

    n: int
    step: float
    log_f_failures: list = field(default_factory=list)
    q_hessian_failures: list = field(default_factory=list)
    log_q_failures: list = field(default_factory=list)

    @property
    def verdicts(self) -> tuple[bool, bool, bool]:
        return (not self.log_f_failures, not self.q_hessian_failures, not self.log_q_failures)

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts)) == 1

    def to_dict(self) -> dict:
        i, ii, iii = self.verdicts
        return {"n": self.n, "step": self.step, "log_F_convex": i, "Q_convex": ii,
                "log_Q_convex": iii, "consistent": self.consistent,
                "failures": {"log_F": self.log_f_failures, "Q_hessian": self.q_hessian_failures,
                             "log_Q": self.log_q_failures}}


def equivalence_check(n: int, step: float) -> EquivalenceReport:
    if not 0 < step <= 1.0 / 16:
        raise ValueError("step must lie in (0, 1/16]")
    N = _lattice(step)
    xs = [k / N for k in range(N + 1)]
    logF = np.log([_F(n, x) for x in xs])
    rep = EquivalenceReport(n, step)

    for k in range(1, N):
        d2 = logF[k - 1] - 2.0 * logF[k] + logF[k + 1]
        if d2 < -LOG_CONVEX_TOL:
            rep.log_f_failures.append((xs[k], float(d2)))

    q = lambda x, y: q_n(n, x, y)  # noqa: E731
    for a in range(1, N):
        for b in range(1, N):
            H = _hessian(q, xs[a], xs[b])
            if not _psd(*H):
                rep.q_hessian_failures.append((xs[a], xs[b]))

    logQ = logF[:, None] + logF[None, :]
    for a in range(N + 1):
        for b in range(N + 1):
            for da, db in ((1, 0), (0, 1), (1, 1), (1, -1)):
                lo, hi = (a - da, b - db), (a + da, b + db)
                if not all(0 <= v <= N for v in lo + hi):
                    continue
                d2 = logQ[lo] - 2.0 * logQ[a, b] + logQ[hi]
                if d2 < -LOG_CONVEX_TOL:
                    rep.log_q_failures.append((xs[a], xs[b], (da, db), float(d2)))
    return rep


def simplex_hessian_scan(n: int, step: float) -> list[tuple[float, float]]:
    """Interior lattice points where the numerical Hessian of ``R_n`` is not PSD.

    Full convexity of ``R_n`` is not claimed anywhere; this is exploratory.
    """
    N = _lattice(step)
    h = HESSIAN_STEP
    out = []
    f = lambda x, y: r_n(n, SimplexPoint(x, y))  # noqa: E731
    for i in range(1, N):
        for j in range(1, N - i):
            x, y = i / N, j / N
            if x + y + 2 * h > 1.0:
                continue
            if not _psd(*_hessian(f, x, y, h)):
                out.append((x, y))
    return out
