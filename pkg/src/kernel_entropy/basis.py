"""Baskakov-type basis functions, the squared-weight sum S and the entropies.

The family is indexed by a degree ``n`` and a shape parameter ``c``:

* ``c = -1``: Bernstein weights ``C(n, j) x^j (1-x)^(n-j)`` on ``[0, 1]``
* ``c = 0``: Szasz-Mirakjan weights ``exp(-nx) (nx)^j / j!`` on ``[0, inf)``
* ``c > 0``: Baskakov weights
  ``(n/c)_j / j! * (cx)^j * (1+cx)^(-n/c-j)`` on ``[0, inf)``

For every member the variance of the operator is ``x (1 + cx) / n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EXACT_BINOMIAL_MAX_N = 60
MAX_SERIES_TERMS = 1_000_000


class DomainError(ValueError):
    """Argument outside the domain of an operator or formula."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach its tolerance."""


@dataclass(frozen=True)
class OperatorParams:
    """Degree ``n`` and shape ``c`` of a Baskakov-family operator."""

    n: int
    c: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        c = float(self.c)
        if not (c == -1.0 or c >= 0.0) or math.isnan(c):
            raise DomainError(f"c must be -1 or nonnegative, got {self.c!r}")
        object.__setattr__(self, "c", c)

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, 1.0) if self.c == -1.0 else (0.0, math.inf)

    @property
    def is_finite(self) -> bool:
        return self.c == -1.0

    def check(self, x: float) -> float:
        lo, hi = self.domain
        x = float(x)
        if not lo <= x <= hi:
            raise DomainError(f"x={x} outside I_c=[{lo}, {hi}] for c={self.c}")
        return x


@dataclass(frozen=True)
class EntropyPoint:
    x: float
    S: float
    V: float
    renyi: float
    tsallis: float

    @classmethod
    def from_sv(cls, x: float, S: float, V: float) -> "EntropyPoint":
        return cls(x, S, V, renyi_entropy(S), tsallis_entropy(S))


def binom(n: int, k: int) -> float:
    """Binomial coefficient as a float; exact integers up to n = 60."""
    if k < 0 or k > n:
        return 0.0
    if n <= EXACT_BINOMIAL_MAX_N:
        return float(math.comb(n, k))
    return math.exp(log_binom(n, k))


def log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _log_weight(params: OperatorParams, j: int, x: float) -> float:
    # x > 0 assumed; c >= 0
    n, c = params.n, params.c
    if c == 0.0:
        nx = n * x
        return j * math.log(nx) - nx - math.lgamma(j + 1)
    a = n / c
    return (math.lgamma(a + j) - math.lgamma(a) - math.lgamma(j + 1)
            + j * math.log(c * x) - (a + j) * math.log1p(c * x))


def basis_weight(params: OperatorParams, j: int, x: float) -> float:
    """Return the fundamental function ``p_{n,j}^{[c]}(x)``."""
    x = params.check(x)
    if j < 0 or int(j) != j:
        raise DomainError(f"j must be a nonnegative integer, got {j!r}")
    j = int(j)
    n = params.n
    if params.is_finite:
        if j > n:
            raise DomainError(f"j={j} exceeds n={n} for the Bernstein basis")
        if n <= EXACT_BINOMIAL_MAX_N:
            return binom(n, j) * x**j * (1.0 - x) ** (n - j)
        if x == 0.0 or x == 1.0:
            return float(j == (0 if x == 0.0 else n))
        return math.exp(log_binom(n, j) + j * math.log(x) + (n - j) * math.log1p(-x))
    if x == 0.0:
        return float(j == 0)
    return math.exp(_log_weight(params, j, x))


def _weight_ratio(params: OperatorParams, j: int, x: float) -> float:
    """p_{j+1} / p_j for the infinite families."""
    if params.c == 0.0:
        return params.n * x / (j + 1)
    a = params.n / params.c
    p = params.c * x / (1.0 + params.c * x)
    return (a + j) / (j + 1) * p


def _bernstein_squares(n: int, x: float) -> float:
    if n <= EXACT_BINOMIAL_MAX_N:
        y = 1.0 - x
        return math.fsum((binom(n, j) * x**j * y ** (n - j)) ** 2 for j in range(n + 1))
    if x == 0.0 or x == 1.0:
        return 1.0
    lx, ly = math.log(x), math.log1p(-x)
    return math.fsum(math.exp(2.0 * (log_binom(n, j) + j * lx + (n - j) * ly))
                     for j in range(n + 1))


def s_series(params: OperatorParams, x: float, tol: float = 1e-15) -> float:
    """Sum of squared basis weights at ``x``.

    For the infinite families the sum starts at the modal index ``floor(nx)``
    and runs outward. The upward tail is cut once a geometric bound on the
    remaining terms falls below ``tol`` times the partial sum.
    """
    x = params.check(x)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if x == 0.0:
        return 1.0
    if params.is_finite:
        return _bernstein_squares(params.n, x)

    mode = int(math.floor(params.n * x))
    if mode > MAX_SERIES_TERMS:
        raise ConvergenceError(f"modal index {mode} exceeds the term cap")
    w_mode = math.exp(_log_weight(params, mode, x))
    terms = [w_mode * w_mode]

    w = w_mode
    for j in range(mode - 1, -1, -1):
        w /= _weight_ratio(params, j, x)
        t = w * w
        if t == 0.0:
            break
        terms.append(t)

    if params.c > 0.0:
        p = params.c * x / (1.0 + params.c * x)
        limit = p * p
    else:
        limit = 0.0
    partial = math.fsum(terms)
    w = w_mode
    j = mode
    while True:
        r = _weight_ratio(params, j, x)
        w *= r
        j += 1
        t = w * w
        terms.append(t)
        partial += t
        q = max(r * r, limit)
        if r < 1.0 and q < 1.0 and t * q / (1.0 - q) <= tol * partial:
            break
        if j - mode > MAX_SERIES_TERMS:
            raise ConvergenceError(
                f"S series for n={params.n}, c={params.c}, x={x} did not converge "
                f"within {MAX_SERIES_TERMS} terms")
    return math.fsum(terms)


def variance(params: OperatorParams, x: float) -> float:
    x = params.check(x)
    return x * (1.0 + params.c * x) / params.n


def renyi_entropy(S: float) -> float:
    """Order-2 Renyi entropy ``-log S``."""
    if not S > 0:
        raise DomainError(f"S must be positive, got {S!r}")
    return 0.0 - math.log(S)


def tsallis_entropy(S: float) -> float:
    """Order-2 Tsallis entropy ``1 - S``."""
    if not S > 0:
        raise DomainError(f"S must be positive, got {S!r}")
    return 1.0 - S


def entropy_point(params: OperatorParams, x: float) -> EntropyPoint:
    return EntropyPoint.from_sv(x, s_series(params, x), variance(params, x))


# Bernstein-form polynomials  sum_k d_k C(N, k) x^k (1-x)^(N-k)

def bernstein_eval(coeffs, x: float) -> float:
    d = np.asarray(coeffs, dtype=float)
    N = len(d) - 1
    if N < 0:
        return 0.0
    if N == 0:
        return float(d[0])
    k = np.arange(N + 1)
    if N <= EXACT_BINOMIAL_MAX_N:
        b = np.array([binom(N, int(i)) for i in k])
        basis = b * x**k * (1.0 - x) ** (N - k)
    else:
        basis = np.array([basis_weight(OperatorParams(N, -1), int(i), x) for i in k])
    return math.fsum(d * basis)


def bernstein_derivative(coeffs) -> np.ndarray:
    """Coefficients of the derivative, one degree lower."""
    d = np.asarray(coeffs, dtype=float)
    N = len(d) - 1
    if N == 0:
        return np.zeros(1)
    return N * np.diff(d)


def f_bernstein_coeffs(n: int) -> np.ndarray:
    """Degree-2n Bernstein coefficients of ``S_{n,-1}``."""
    d = np.zeros(2 * n + 1)
    for j in range(n + 1):
        d[2 * j] = math.comb(n, j) ** 2 / math.comb(2 * n, 2 * j)
    return d
