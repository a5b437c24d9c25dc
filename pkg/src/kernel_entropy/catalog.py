"""Closed-form S and V for a zoo of positive linear operators.

Discrete operators ``sum_k f(x_k) a_k(x)`` have ``S = sum_k a_k(x)^2``; integral
operators ``int K(x, t) f(t) dt`` have ``S = int K(x, t)^2 dt``. Integral
kernels are densities, so their S may exceed one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .basis import DomainError, EntropyPoint, OperatorParams, binom, s_series, variance
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate

FAMILIES = ("baskakov", "kantorovich", "gauss_weierstrass", "convolution",
            "post_widder", "durrmeyer", "genuine_bd")

MASS_TOL = 1e-9


@dataclass(frozen=True)
class OperatorDescriptor:
    family: str
    n: Optional[int] = None
    c: Optional[float] = None
    r: Optional[float] = None
    kernel: Optional[Callable] = field(default=None, compare=False)
    window: Optional[tuple[float, float]] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("baskakov", "kantorovich", "post_widder", "durrmeyer", "genuine_bd"):
            if self.n is None or int(self.n) != self.n or self.n < 1:
                raise DomainError(f"{self.family} needs an integer n >= 1, got {self.n!r}")
        if self.family == "baskakov":
            OperatorParams(self.n, self.c if self.c is not None else 0.0)
        if self.family == "gauss_weierstrass" and not (self.r is not None and self.r > 0):
            raise DomainError(f"gauss_weierstrass needs r > 0, got {self.r!r}")
        if self.family == "convolution":
            if self.kernel is None or self.window is None or not self.window[0] < self.window[1]:
                raise ValueError("convolution needs a kernel and a window (a, b) with a < b")

    @property
    def label(self) -> str:
        if self.family == "baskakov":
            return f"baskakov(n={self.n},c={self.c:g})"
        if self.family == "gauss_weierstrass":
            return f"gauss_weierstrass(r={self.r:g})"
        if self.family == "convolution":
            return f"convolution(window={self.window})"
        return f"{self.family}(n={self.n})"

    @property
    def domain(self) -> tuple[float, float]:
        if self.family == "baskakov":
            return OperatorParams(self.n, self.c).domain
        if self.family in ("gauss_weierstrass", "convolution"):
            return (-math.inf, math.inf)
        if self.family == "post_widder":
            return (0.0, math.inf)  # open at 0
        return (0.0, 1.0)


def baskakov(n: int, c: float) -> OperatorDescriptor:
    return OperatorDescriptor("baskakov", n=n, c=float(c))


@dataclass
class CoeffSequence:
    n: int
    coeffs: list[Fraction]

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.n + 1:
            raise ValueError("expected 2n+1 coefficients")

    @property
    def is_symmetric(self) -> bool:
        return all(a == b for a, b in zip(self.coeffs, reversed(self.coeffs)))

    @property
    def is_positive(self) -> bool:
        return all(a > 0 for a in self.coeffs)

    def second_differences(self) -> list[Fraction]:
        c = self.coeffs
        return [c[k - 1] - 2 * c[k] + c[k + 1] for k in range(1, len(c) - 1)]


@dataclass
class EntropyProfile:
    descriptor: OperatorDescriptor
    points: list[EntropyPoint]

    def __post_init__(self):
        xs = [p.x for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("profile grid must be strictly increasing")

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(p, name) for p in self.points])


def _unit(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    return x


def kantorovich_sv(n: int, x: float) -> tuple[float, float]:
    x = _unit(x)
    S = (n + 1) * s_series(OperatorParams(n, -1), x)
    V = (n * x * (1.0 - x) + 1.0 / 12.0) / (n + 1) ** 2
    return S, V


def gauss_weierstrass_sv(r: float) -> tuple[float, float]:
    if not r > 0:
        raise DomainError(f"r must be positive, got {r!r}")
    return 1.0 / math.sqrt(8.0 * math.pi * r), 2.0 * r


def gauss_weierstrass_kernel(r: float) -> Callable:
    norm = 1.0 / math.sqrt(4.0 * math.pi * r)
    return lambda s: norm * np.exp(-np.asarray(s) ** 2 / (4.0 * r))


def convolution_sv(kernel: Callable, window: tuple[float, float],
                   quad: QuadratureSpec = DEFAULT_SPEC) -> tuple[float, float]:
    """``S = int phi^2`` and ``V = int s^2 phi - (int s phi)^2`` over ``window``.

    Raises ``ValueError`` when the kernel mass over the window is off by more
    than ``1e-9``.
    """
    a, b = map(float, window)

    def rows(s):
        p = np.asarray(kernel(s), dtype=float)
        return np.vstack([p, s * p, s * s * p, p * p])

    mass, m1, m2, energy = integrate(rows, a, b, quad)
    if abs(1.0 - mass) > MASS_TOL:
        raise ValueError(f"kernel mass over window is {mass!r}; deficit {1.0 - mass:.3g}")
    return float(energy), float(m2 - m1 * m1)


def post_widder_sv(n: int, x: float) -> tuple[float, float]:
    x = float(x)
    if not x > 0:
        raise DomainError(f"Post-Widder needs x > 0, got {x!r}")
    S = binom(2 * n - 2, n - 1) * 2.0 ** (1 - 2 * n) * n / x
    return S, x * x / n


def durrmeyer_coeffs(n: int) -> CoeffSequence:
    """Exact coefficients ``c_{n,k}``, ``k = 0..2n``."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    sq = [math.comb(n, j) ** 2 for j in range(n + 1)]
    pref = Fraction((n + 1) ** 2, 2 * n + 1)
    coeffs = []
    for k in range(2 * n + 1):
        conv = sum(sq[j] * sq[k - j] for j in range(max(0, k - n), min(k, n) + 1))
        coeffs.append(pref * Fraction(conv, math.comb(2 * n, k) ** 2))
    return CoeffSequence(n, coeffs)


def durrmeyer_sv(n: int, x: float, coeffs: CoeffSequence | None = None) -> tuple[float, float]:
    x = _unit(x)
    seq = coeffs if coeffs is not None else durrmeyer_coeffs(n)
    N = 2 * n
    S = math.fsum(float(ck) * binom(N, k) * x**k * (1.0 - x) ** (N - k)
                  for k, ck in enumerate(seq.coeffs))
    V = (n + 1) * (2.0 * n * x * (1.0 - x) + 1.0) / ((n + 2) ** 2 * (n + 3))
    return S, V


def genuine_bd_sv(n: int, x: float) -> tuple[float, float]:
    x = _unit(x)
    y = 1.0 - x
    S = y ** (2 * n) + x ** (2 * n)
    if n >= 2:
        terms = []
        for k in range(1, n):
            for j in range(1, n):
                w = (binom(n - 2, k - 1) * binom(n - 2, j - 1) * binom(n, k) * binom(n, j)
                     / binom(2 * n - 4, k + j - 2))
                terms.append(w * x ** (k + j) * y ** (2 * n - k - j))
        S += (n - 1) ** 2 / (2 * n - 3) * math.fsum(terms)
    return S, 2.0 * x * y / (n + 1)


def sv(descriptor: OperatorDescriptor, x: float, quad: QuadratureSpec = DEFAULT_SPEC):
    """``(S(x), V(x))`` for any catalogued family."""
    f = descriptor.family
    if f == "baskakov":
        p = OperatorParams(descriptor.n, descriptor.c)
        return s_series(p, x), variance(p, x)
    if f == "kantorovich":
        return kantorovich_sv(descriptor.n, x)
    if f == "gauss_weierstrass":
        return gauss_weierstrass_sv(descriptor.r)
    if f == "convolution":
        return convolution_sv(descriptor.kernel, descriptor.window, quad)
    if f == "post_widder":
        return post_widder_sv(descriptor.n, x)
    if f == "durrmeyer":
        return durrmeyer_sv(descriptor.n, x)
    return genuine_bd_sv(descriptor.n, x)


def grid(x_min: float, x_max: float, steps: int) -> np.ndarray:
    """Closed uniform grid including both endpoints."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        return np.array([float(x_min)])
    if not x_max > x_min:
        raise ValueError("x_max must exceed x_min when steps > 1")
    return np.linspace(x_min, x_max, steps)


def profile(descriptor: OperatorDescriptor, x_min: float, x_max: float, steps: int,
            quad: QuadratureSpec = DEFAULT_SPEC) -> EntropyProfile:
    xs = grid(x_min, x_max, steps)
    points = []
    cached = None
    if descriptor.family in ("gauss_weierstrass", "convolution"):
        cached = sv(descriptor, 0.0, quad)
    elif descriptor.family == "durrmeyer":
        seq = durrmeyer_coeffs(descriptor.n)
    for x in xs:
        x = float(x)
        if cached is not None:
            S, V = cached
        elif descriptor.family == "durrmeyer":
            S, V = durrmeyer_sv(descriptor.n, x, seq)
        else:
            S, V = sv(descriptor, x, quad)
        points.append(EntropyPoint.from_sv(x, S, V))
    return EntropyProfile(descriptor, points)
