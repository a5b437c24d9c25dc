"""Grid scans of every registered inequality and conjecture.

Each check yields signed relative margins (negative means the inequality
fails). A margin below ``-hard_tol`` becomes a :class:`ViolationReport`:
unconditional checks (statements that are theorems) produce *violations*,
checks resting on an open conjecture produce *findings*. Margins within
``10 * hard_tol`` of zero are kept separately as *grazing* points; most of
them are the equality cases at ``x = 0`` or ``t = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, NamedTuple, Optional

import numpy as np

from . import catalog, legendre as lg, multivariate as mv
from .basis import ConvergenceError, OperatorParams, s_series
from .ode import envelope, f_derivatives_exact, s_derivatives
from .quadrature import bessel_i0e
from .reports import Margin, ViolationReport

GRAZING_FACTOR = 10.0


@dataclass(frozen=True)
class ScanConfig:
    n_range: tuple[int, int] = (1, 30)
    c_values: tuple[float, ...] = (-1.0, 0.0, 1.0)
    x_window: Optional[tuple[float, float]] = None
    t_window: tuple[float, float] = (1.0, 10.0)
    grid_points: int = 129
    hard_tol: float = 1e-9
    boundary_delta: float = 1.0 / 128
    legendre_delta: float = 1.0 / 64
    bessel_x_max: float = 20.0
    logconv_x_max: float = 4.0
    durrmeyer_n_max: int = 40
    multivariate_n_max: int = 15
    multivariate_step: float = 1.0 / 16

    def __post_init__(self):
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad n_range {self.n_range!r}")
        if self.grid_points < 3:
            raise ValueError("grid_points must be >= 3")
        if not self.hard_tol > 0:
            raise ValueError("hard_tol must be positive")
        for c in self.c_values:
            OperatorParams(1, c)
        if self.x_window is not None and not 0 <= self.x_window[0] < self.x_window[1]:
            raise ValueError(f"bad x_window {self.x_window!r}")
        if not 1.0 <= self.t_window[0] < self.t_window[1]:
            raise ValueError(f"bad t_window {self.t_window!r}")

    @property
    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def window(self, default_hi: float) -> tuple[float, float]:
        return self.x_window if self.x_window is not None else (0.0, default_hi)

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


class Sample(NamedTuple):
    params: dict
    location: object
    margin: Margin
    conditional: Optional[bool] = None


@dataclass(frozen=True)
class Check:
    check_id: str
    statement: str
    conditional: bool
    run: Callable[[ScanConfig], Iterable[Sample]]


@dataclass
class ScanResult:
    violations: list[ViolationReport] = field(default_factory=list)
    findings: list[ViolationReport] = field(default_factory=list)
    grazing: list[ViolationReport] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def reports(self) -> list[ViolationReport]:
        return sorted(self.violations + self.findings, key=ViolationReport.sort_key)

    def extend(self, other: "ScanResult") -> "ScanResult":
        self.violations += other.violations
        self.findings += other.findings
        self.grazing += other.grazing
        self.errors += other.errors
        for k, v in other.counts.items():
            self.counts[k] = self.counts.get(k, 0) + v
        self.sort()
        return self

    def sort(self):
        for lst in (self.violations, self.findings, self.grazing):
            lst.sort(key=ViolationReport.sort_key)
        self.errors.sort(key=lambda e: (e["check_id"], str(e["message"])))

    def to_dict(self) -> dict:
        return {
            "violations": [r.to_dict() for r in self.violations],
            "findings": [r.to_dict() for r in self.findings],
            "grazing": [r.to_dict() for r in self.grazing],
            "errors": list(self.errors),
            "counts": dict(sorted(self.counts.items())),
        }


def rel_margin(lhs: float, rhs: float, floor: float = 0.0) -> float:
    """Margin of ``lhs <= rhs`` relative to the larger side."""
    scale = max(abs(lhs), abs(rhs), floor)
    if scale == 0.0:
        return 0.0
    return (rhs - lhs) / scale


def _grid(lo: float, hi: float, m: int) -> np.ndarray:
    return np.linspace(lo, hi, m)


@lru_cache(maxsize=200_000)
def _K(n: int, x: float) -> float:
    return s_series(OperatorParams(n, 0.0), x)


@lru_cache(maxsize=200_000)
def _legendre(n: int, t: float) -> tuple[float, float]:
    return lg.legendre_pair(n, t)


@lru_cache(maxsize=200_000)
def _derivs(n: int, c: float, x: float):
    return s_derivatives(OperatorParams(n, c), x)


# Bounds on K_n = S_{n,0} and on I0

def _bound_k_squared(n: int, x: float) -> float:
    r = math.sqrt(1.0 + (4.0 * n * x) ** 2)
    return 2.0 * math.exp(r - 1.0 - 4.0 * n * x) / (r + 1.0)


def _bound_i0e_squared(x: float) -> float:
    """Upper bound for ``(exp(-x) I0(x))^2`` valid if log K_n is convex."""
    r = math.sqrt(1.0 + 4.0 * x * x)
    return 2.0 * math.exp(r - 1.0 - 2.0 * x) / (r + 1.0)


def _check_k_sqrt_bound(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
            yield Sample({"n": n, "c": 0.0}, float(x), rel_margin(_K(n, x), 1.0 / math.sqrt(4 * n * x + 1)))


def _check_i0_bound(cfg: ScanConfig) -> Iterator[Sample]:
    for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
        yield Sample({}, float(x), rel_margin(bessel_i0e(x), 1.0 / math.sqrt(2 * x + 1)))


def _check_k_ratio_envelope(cfg: ScanConfig) -> Iterator[Sample]:
    lo, hi = cfg.window(cfg.logconv_x_max)
    for n in cfg.ns:
        for t in _grid(max(lo, cfg.boundary_delta), hi, cfg.grid_points):
            t = float(t)
            d = _derivs(n, 0.0, t)
            r = math.sqrt(1.0 + (4.0 * n * t) ** 2)
            low = (-r - 1.0 - 4.0 * n * t) / (2.0 * t)
            high = (r - 1.0 - 4.0 * n * t) / (2.0 * t)
            yield Sample({"n": n, "c": 0.0}, t,
                         min(rel_margin(low, d.A), rel_margin(d.A, high)))


def _check_k_squared_bound(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
            x = float(x)
            yield Sample({"n": n, "c": 0.0}, x, rel_margin(_K(n, x) ** 2, _bound_k_squared(n, x)))


def _check_i0_squared_bound(cfg: ScanConfig) -> Iterator[Sample]:
    for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
        x = float(x)
        yield Sample({}, x, rel_margin(bessel_i0e(x) ** 2, _bound_i0e_squared(x)))


def _cmp_k_bounds(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
            x = float(x)
            yield Sample({"n": n, "c": 0.0}, x,
                         rel_margin(_bound_k_squared(n, x), 1.0 / (4 * n * x + 1)))


def _cmp_i0_bounds(cfg: ScanConfig) -> Iterator[Sample]:
    # both sides scaled by exp(-2x)
    for x in _grid(*cfg.window(cfg.bessel_x_max), cfg.grid_points):
        x = float(x)
        yield Sample({}, x, rel_margin(_bound_i0e_squared(x), 1.0 / (2 * x + 1)))


# Bounds in the Legendre variable

def _f_ratio(n: int, x: float) -> float:
    d = f_derivatives_exact(n, x)
    return d.dS / d.S


def _check_f_ratio_upper(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for x in _grid(0.0, 0.5 - cfg.legendre_delta, cfg.grid_points)[1:]:
            x = float(x)
            X, Xp = x * (1 - x), 1 - 2 * x
            z2 = (math.sqrt((1 - 4 * X) ** 2 + (4 * n * X) ** 2) - (1 - 4 * X) - 4 * n * X) / (2 * X * Xp)
            yield Sample({"n": n, "c": -1.0}, x, rel_margin(_f_ratio(n, x), z2, floor=1.0))


def _check_f_ratio_lower(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for x in _grid(0.0, 0.5, cfg.grid_points):
            x = float(x)
            X, Xp = x * (1 - x), 1 - 2 * x
            low = -2.0 * n * Xp / (1.0 + (n - 3) * X)
            yield Sample({"n": n, "c": -1.0}, x, rel_margin(low, _f_ratio(n, x), floor=1.0))


def _t_grid(cfg: ScanConfig, open_left: bool = False) -> np.ndarray:
    ts = _grid(*cfg.t_window, cfg.grid_points)
    return ts[1:] if open_left and ts[0] == 1.0 else ts


def _ratio(n: int, t: float) -> float:
    p, d = _legendre(n, t)
    return d / p


def _ratio_check(bound, lower: bool, open_left: bool = False, n_min: int = 1):
    def run(cfg: ScanConfig) -> Iterator[Sample]:
        for n in cfg.ns:
            if n < n_min:
                continue
            for t in _t_grid(cfg, open_left):
                t = float(t)
                b, r = bound(n, t), _ratio(n, t)
                yield Sample({"n": n}, t, rel_margin(b, r) if lower else rel_margin(r, b))
    return run


def _poly_check(bound, n_min: int):
    def run(cfg: ScanConfig) -> Iterator[Sample]:
        for n in cfg.ns:
            if n < n_min:
                continue
            for t in _t_grid(cfg):
                t = float(t)
                yield Sample({"n": n}, t, rel_margin(_legendre(n, t)[0], bound(n, t)))
    return run


def _poly_strength(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        if n < 2:
            continue
        for t in _t_grid(cfg):
            t = float(t)
            yield Sample({"n": n}, t, rel_margin(lg.poly_upper_sharp(n, t), lg.poly_upper_simple(n, t)))


def _cmp_ratio_bounds(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        for t in _t_grid(cfg, open_left=True):
            t = float(t)
            yield Sample({"n": n}, t, rel_margin(lg.ratio_upper_conditional(n, t), lg.ratio_upper_simple(n, t)))


def crossover_grid(n: int, t_max: float, m: int) -> list[float]:
    """Uniform grid on ``(1, t_max]`` plus points bracketing the crossover."""
    ts = lg.crossover_t(n)
    pts = set(float(t) for t in _grid(1.0, t_max, m)[1:])
    for f in (1e-3, 1e-2, 1e-1, 0.5):
        pts.add(ts - f * (ts - 1.0))
        pts.add(ts + f * (ts - 1.0))
    return sorted(p for p in pts if 1.0 < p <= max(t_max, ts * 1.5))


def _crossover_pattern(cfg: ScanConfig) -> Iterator[Sample]:
    for n in cfg.ns:
        ts = lg.crossover_t(n)
        for t in crossover_grid(n, cfg.t_window[1], cfg.grid_points):
            a, b = lg.ratio_upper_conditional(n, t), lg.ratio_upper_refined(n, t)
            m = rel_margin(a, b) if t <= ts else rel_margin(b, a)
            yield Sample({"n": n}, t, m)


# Conjectures and structural claims

def _logconv_grid(cfg: ScanConfig, c: float) -> np.ndarray:
    d = cfg.boundary_delta
    if c == -1.0:
        return _grid(d, 1.0 - d, cfg.grid_points)
    lo, hi = cfg.window(cfg.logconv_x_max)
    return _grid(max(lo, d), hi, cfg.grid_points)


def _logconv_samples(cfg: ScanConfig) -> Iterator[tuple[str, Sample]]:
    tol = cfg.hard_tol
    for c in cfg.c_values:
        for n in cfg.ns:
            for x in _logconv_grid(cfg, c):
                x = float(x)
                d = _derivs(n, c, x)
                scale = d.logconv_scale
                margin = d.logconv_margin / scale if scale else 0.0
                params = {"n": n, "c": c}
                yield "conj-C", Sample(params, x, margin)
                Xp = 1.0 + 2.0 * c * x
                if abs(Xp) < 1e-12:
                    continue
                env = envelope(OperatorParams(n, c), x)
                width = max(abs(env.z1), abs(env.z2), 1.0)
                dist = env.distance(d.A) / width
                # a disagreement counts only when both verdicts are decisive
                if margin > tol and dist < -tol:
                    yield "thm-2.1-envelope", Sample(params, x, -min(margin, -dist))
                elif margin < -tol and dist > tol:
                    yield "thm-2.1-envelope", Sample(params, x, -min(-margin, dist))
                else:
                    yield "thm-2.1-envelope", Sample(params, x, 1.0)


def _only(check_id: str):
    def run(cfg: ScanConfig) -> Iterator[Sample]:
        for cid, s in _logconv_samples(cfg):
            if cid == check_id:
                yield s
    return run


def _durrmeyer_samples(cfg: ScanConfig, n_max: Optional[int] = None) -> Iterator[tuple[str, Sample]]:
    n_max = cfg.durrmeyer_n_max if n_max is None else n_max
    for n in range(1, n_max + 1):
        seq = catalog.durrmeyer_coeffs(n)
        for k, (a, b) in enumerate(zip(seq.coeffs, reversed(seq.coeffs))):
            yield "durrmeyer-symmetry", Sample({"n": n}, k, -abs(a - b) if a != b else Fraction(1))
        for k, d2 in enumerate(seq.second_differences(), start=1):
            yield "conj-4.6", Sample({"n": n, "object": "coeffs"}, k, d2)
        xs = _grid(0.0, 1.0, cfg.grid_points)
        S = [catalog.durrmeyer_sv(n, float(x), seq)[0] for x in xs]
        for i in range(1, len(xs) - 1):
            d2 = S[i - 1] - 2.0 * S[i] + S[i + 1]
            yield "conj-4.6", Sample({"n": n, "object": "S"}, float(xs[i]), d2 / max(S[i], 1.0))


def _durrmeyer_only(check_id: str):
    def run(cfg: ScanConfig) -> Iterator[Sample]:
        for cid, s in _durrmeyer_samples(cfg):
            if cid == check_id:
                yield s
    return run


def _axial(cfg: ScanConfig) -> Iterator[Sample]:
    # the scan itself only reports failures; passing lines contribute a unit margin
    for n in range(1, cfg.multivariate_n_max + 1):
        bad = mv.axial_convexity_scan(n, cfg.multivariate_step)
        for r in bad:
            yield Sample(r.params, r.location, r.margin)
        if not bad:
            yield Sample({"n": n}, (0.0, 0.0), 1.0)


def _equivalence(cfg: ScanConfig) -> Iterator[Sample]:
    for n in range(1, cfg.multivariate_n_max + 1):
        rep = mv.equivalence_check(n, cfg.multivariate_step)
        yield Sample({"n": n, "verdicts": list(rep.verdicts)}, 0.0, 1.0 if rep.consistent else -1.0)


def default_sync_families(cfg: ScanConfig) -> list[tuple[catalog.OperatorDescriptor, tuple[float, float]]]:
    lo, hi = cfg.n_range
    ns = sorted({n for n in (1, 2, 5, 10, 30) if lo <= n <= hi} | {lo, hi})
    fams = []
    for c in (-1.0, 0.0, 1.0):
        for n in ns:
            fams.append((catalog.baskakov(n, c), (0.0, 1.0) if c == -1.0 else (0.0, cfg.logconv_x_max)))
    for n in ns:
        fams.append((catalog.OperatorDescriptor("kantorovich", n=n), (0.0, 1.0)))
    fams.append((catalog.OperatorDescriptor("gauss_weierstrass", r=1.0 / (8 * math.pi)), (-2.0, 2.0)))
    fams.append((catalog.OperatorDescriptor("gauss_weierstrass", r=1.0), (-2.0, 2.0)))
    for n in ns:
        fams.append((catalog.OperatorDescriptor("post_widder", n=n), (0.25, 4.0)))
    for n in ns:
        fams.append((catalog.OperatorDescriptor("durrmeyer", n=n), (0.0, 1.0)))
    return fams


def _sign(v: float) -> int:
    return int(v > 0) - int(v < 0)


def sync_samples(descriptor: catalog.OperatorDescriptor, x_min: float, x_max: float,
                 steps: int) -> Iterator[Sample]:
    prof = catalog.profile(descriptor, x_min, x_max, steps)
    V, T, R = prof.column("V"), prof.column("tsallis"), prof.column("renyi")
    conditional = descriptor.family == "durrmeyer"
    params = {"family": descriptor.label}
    for i in range(len(V) - 1):
        dV, dT, dR = V[i + 1] - V[i], T[i + 1] - T[i], R[i + 1] - R[i]
        loc = (float(prof.points[i].x), float(prof.points[i + 1].x))
        for pair, a, b, sa, sb in (("variance-tsallis", dV, dT, np.max(np.abs(V)), np.max(np.abs(T))),
                                   ("tsallis-renyi", dT, dR, np.max(np.abs(T)), np.max(np.abs(R)))):
            if _sign(a) * _sign(b) < 0:
                m = -min(abs(a) / (sa or 1.0), abs(b) / (sb or 1.0))
            else:
                m = 1.0
            yield Sample({**params, "pair": pair}, loc, m, conditional)


def _synchronicity(cfg: ScanConfig) -> Iterator[Sample]:
    for desc, (lo, hi) in default_sync_families(cfg):
        yield from sync_samples(desc, lo, hi, cfg.grid_points)


REGISTRY: dict[str, Check] = {}


def _register(check_id: str, statement: str, conditional: bool, run) -> None:
    REGISTRY[check_id] = Check(check_id, statement, conditional, run)


_register("ineq-2.2", "K_n(x) <= 1/sqrt(4nx+1), x >= 0", False, _check_k_sqrt_bound)
_register("ineq-2.4", "I0(x) <= exp(x)/sqrt(2x+1), x >= 0", False, _check_i0_bound)
_register("ineq-2.5", "two-sided envelope bound on K_n'/K_n, t > 0", True, _check_k_ratio_envelope)
_register("ineq-2.6", "K_n(x)^2 <= 2 exp(sqrt(1+(4nx)^2)-1-4nx)/(sqrt(1+(4nx)^2)+1)", True,
          _check_k_squared_bound)
_register("ineq-2.7", "I0(x)^2 <= 2 exp(sqrt(1+4x^2)-1)/(sqrt(1+4x^2)+1)", True, _check_i0_squared_bound)
_register("cmp-2.6-vs-2.2", "squared-K envelope bound <= 1/(4nx+1)", False, _cmp_k_bounds)
_register("cmp-2.7-vs-2.4", "squared-I0 envelope bound <= exp(2x)/(2x+1)", False, _cmp_i0_bounds)
_register("ineq-2.10", "F_n'/F_n <= upper envelope root on (0, 1/2)", True, _check_f_ratio_upper)
_register("ineq-2.11", "P_n'/P_n <= 2n^2/(sqrt(4n^2(t^2-1)+w^2)+w), w = t - sqrt(t^2-1)", True,
          _ratio_check(lg.ratio_upper_conditional, lower=False, open_left=True))
_register("ineq-2.12", "n(n+1)/(2t+(n-1)sqrt(t^2-1)) <= P_n'/P_n", False,
          _ratio_check(lg.ratio_lower_bound, lower=True))
_register("ineq-2.13", "-2nX'/(1+(n-3)X) <= F_n'/F_n on [0, 1/2]", False, _check_f_ratio_lower)
_register("ineq-2.14", "P_n'/P_n <= 2n^2/(t+(2n-1)sqrt(t^2-1))", False,
          _ratio_check(lg.ratio_upper_simple, lower=False))
_register("ineq-2.15", "P_n'/P_n <= n^2(2n+1)/((n+1)t+(2n^2-1)sqrt(t^2-1))", False,
          _ratio_check(lg.ratio_upper_refined, lower=False))
_register("ineq-2.16", "P_n(t) <= integrated sharper bound", False, _poly_check(lg.poly_upper_sharp, 1))
_register("ineq-2.17", "P_n(t) <= integrated weaker bound, n >= 2", False, _poly_check(lg.poly_upper_simple, 2))
_register("ineq-2.16-vs-2.17", "sharper P_n bound <= weaker P_n bound", False, _poly_strength)
_register("cmp-2.11-vs-2.14", "conditional ratio bound <= 2n^2/(t+(2n-1)sqrt(t^2-1)), t > 1", False,
          _cmp_ratio_bounds)
_register("crossover-2.11-vs-2.15", "conditional ratio bound <= third ratio bound exactly on (1, t*]",
          False, _crossover_pattern)
_register("conj-C", "log S_{n,c} is convex", True, _only("conj-C"))
_register("thm-2.1-envelope", "(log S)'' >= 0 iff S'/S lies between the envelope roots", False,
          _only("thm-2.1-envelope"))
_register("conj-4.6", "Durrmeyer coefficients c_{n,k} are convex in k; S_n convex on [0,1]", True,
          _durrmeyer_only("conj-4.6"))
_register("durrmeyer-symmetry", "c_{n,2n-k} = c_{n,k}", False, _durrmeyer_only("durrmeyer-symmetry"))
_register("axial-convexity", "R_n convex along lines parallel to the triangle sides", False, _axial)
_register("equivalence-3", "log F_n convex <=> Q_n convex <=> log Q_n convex (grid verdicts agree)",
          True, _equivalence)
_register("synchronicity", "variance, Tsallis and Renyi entropies are synchronous", False, _synchronicity)

INEQUALITY_IDS = tuple(k for k in REGISTRY if k.startswith(("ineq-", "cmp-", "crossover-")))


def _classify(check: Check, samples: Iterable[Sample], cfg: ScanConfig) -> ScanResult:
    res = ScanResult()
    count = 0
    tol = cfg.hard_tol
    try:
        for s in samples:
            count += 1
            conditional = check.conditional if s.conditional is None else s.conditional
            report = ViolationReport(check.check_id, s.params, s.location, s.margin, conditional)
            exact = isinstance(s.margin, Fraction)
            if (s.margin < 0) if exact else (s.margin < -tol):
                (res.findings if conditional else res.violations).append(report)
            elif not exact and abs(s.margin) <= GRAZING_FACTOR * tol:
                res.grazing.append(report)
    except (ConvergenceError, ArithmeticError) as exc:
        res.errors.append({"check_id": check.check_id, "message": str(exc)})
    res.counts[check.check_id] = count
    res.sort()
    return res


def run_checks(check_ids: Iterable[str], config: ScanConfig = ScanConfig()) -> ScanResult:
    ids = list(check_ids)
    unknown = [c for c in ids if c not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown check ids: {', '.join(unknown)}")
    result = ScanResult()
    for cid in ids:
        check = REGISTRY[cid]
        result.extend(_classify(check, check.run(config), config))
    return result


def run_inequality_suite(config: ScanConfig = ScanConfig()) -> ScanResult:
    return run_checks(INEQUALITY_IDS, config)


def scan_logconvexity(config: ScanConfig = ScanConfig()) -> ScanResult:
    """Log-convexity margins plus the independent envelope verdict.

    Findings carry check id ``conj-C``; disagreements between the margin and
    the envelope membership are violations under ``thm-2.1-envelope``.
    """
    out = ScanResult()
    by_id = {"conj-C": [], "thm-2.1-envelope": []}
    for cid, s in _logconv_samples(config):
        by_id[cid].append(s)
    for cid, samples in by_id.items():
        out.extend(_classify(REGISTRY[cid], samples, config))
    return out


def scan_durrmeyer_convexity(n_max: int, config: ScanConfig = ScanConfig()) -> ScanResult:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = ScanResult()
    by_id = {"conj-4.6": [], "durrmeyer-symmetry": []}
    for cid, s in _durrmeyer_samples(config, n_max):
        by_id[cid].append(s)
    for cid, samples in by_id.items():
        out.extend(_classify(REGISTRY[cid], samples, config))
    return out


def scan_synchronicity(families, x_grid: tuple[float, float, int] | None = None,
                       config: ScanConfig = ScanConfig()) -> ScanResult:
    """Adjacent-pair sign agreement of the variance and entropy increments.

    ``families`` holds descriptors or ``(descriptor, (x_min, x_max))`` pairs;
    ``x_grid`` overrides every window with ``(x_min, x_max, steps)``.
    """
    samples = []
    for item in families:
        desc, window = item if isinstance(item, tuple) else (item, None)
        if x_grid is not None:
            lo, hi, steps = x_grid
        else:
            (lo, hi), steps = window or (0.0, 1.0), config.grid_points
        samples.extend(sync_samples(desc, lo, hi, steps))
    return _classify(REGISTRY["synchronicity"], samples, config)
