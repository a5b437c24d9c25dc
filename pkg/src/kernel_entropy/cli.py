"""Command-line front end.

Exit codes: 0 success, 1 usage or numerical failure, 2 an unconditional
inequality was violated.
"""
from __future__ import annotations

import argparse
import sys
import time
from contextlib import contextmanager

from . import __version__, catalog, legendre as lg, multivariate as mv, verifier
from .basis import ConvergenceError, DomainError, OperatorParams
from .ode import s_derivatives
from .serialization import dumps, write_csv

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

PROFILE_COLUMNS = ("x", "S", "V", "renyi", "tsallis", "dS", "d2S", "logconv_margin")
LEGENDRE_COLUMNS = ("t", "P", "ratio", "lower", "upper_simple", "upper_refined", "upper_conditional",
                    "poly_sharp", "poly_simple", "margin_lower", "margin_simple", "margin_refined",
                    "margin_conditional", "margin_poly_sharp", "margin_poly_simple")
FAMILY_CHOICES = ("bernstein", "szasz", "baskakov", "kantorovich", "gauss-weierstrass",
                  "post-widder", "durrmeyer", "genuine-bd")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(s: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in s.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kernel-entropy", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    e = sub.add_parser("entropy", help="S, V, Renyi and Tsallis entropy profile of one operator")
    e.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    e.add_argument("--n", type=int, default=None, help="degree (all families except gauss-weierstrass)")
    e.add_argument("--c", type=float, default=1.0, help="Baskakov shape parameter (family baskakov, default 1)")
    e.add_argument("--r", type=float, default=None, help="Gauss-Weierstrass parameter r > 0")
    e.add_argument("--x-min", type=float, default=0.0)
    e.add_argument("--x-max", type=float, default=1.0)
    e.add_argument("--steps", type=int, default=11, help="grid points including both ends (default 11)")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--output", default="-", help="output path, '-' for stdout")

    v = sub.add_parser("verify", help="run inequality suites and conjecture scans")
    v.add_argument("--suite", default="all", help="'all' or comma-separated check ids")
    v.add_argument("--list", action="store_true", help="print the check registry and exit")
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--n-max", type=int, default=30)
    v.add_argument("--c", type=_float_list, default=(-1.0, 0.0, 1.0), help="shape parameters, e.g. -1,0,1")
    v.add_argument("--grid-points", type=int, default=129)
    v.add_argument("--hard-tol", type=float, default=1e-9)
    v.add_argument("--x-window", type=_float_list, default=None, help="x range for c >= 0 scans, e.g. 0,4")
    v.add_argument("--t-max", type=float, default=10.0)
    v.add_argument("--durrmeyer-n-max", type=int, default=40)
    v.add_argument("--multivariate-n-max", type=int, default=15)
    v.add_argument("--output", default="-")

    d = sub.add_parser("durrmeyer", help="exact Durrmeyer coefficients c_{n,k}")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--check-convexity", action="store_true")
    d.add_argument("--format", choices=("csv", "json"), default="csv")
    d.add_argument("--output", default="-")

    g = sub.add_parser("legendre", help="Legendre ratio bounds table or crossover point")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--t-min", type=float, default=1.0)
    g.add_argument("--t-max", type=float, default=2.0)
    g.add_argument("--steps", type=int, default=9)
    g.add_argument("--crossover", action="store_true", help="print t* and exit")
    g.add_argument("--hard-tol", type=float, default=1e-9)
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--output", default="-")

    m = sub.add_parser("multivariate", help="simplex and square scans")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--step", type=float, default=1.0 / 16)
    m.add_argument("--check", choices=("axial", "reduction", "product", "equivalence", "all"), default="all")
    m.add_argument("--output", default="-")
    return p


@contextmanager
def _open(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _manifest(args, started: float, counts=(0, 0, 0)) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("output",)}
    return {
        "command": args.command,
        "config": config,
        "version": __version__,
        "wall_time_s": round(time.perf_counter() - started, 6),
        "violation_counts": {"unconditional": counts[0], "conditional": counts[1], "grazing": counts[2]},
    }


def _emit_manifest(args, manifest: dict) -> None:
    text = dumps(manifest)
    if args.output == "-":
        sys.stderr.write(text)
    else:
        with open(args.output + ".manifest.json", "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _descriptor(args) -> catalog.OperatorDescriptor:
    fam = args.family
    if fam == "gauss-weierstrass":
        if args.r is None:
            raise UsageError("--r is required for gauss-weierstrass")
        return catalog.OperatorDescriptor("gauss_weierstrass", r=args.r)
    if args.n is None:
        raise UsageError(f"--n is required for {fam}")
    if fam in ("bernstein", "szasz", "baskakov"):
        c = {"bernstein": -1.0, "szasz": 0.0}.get(fam, args.c)
        return catalog.baskakov(args.n, c)
    return catalog.OperatorDescriptor(fam.replace("-", "_"), n=args.n)


def cmd_entropy(args, started: float) -> int:
    desc = _descriptor(args)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    lo, hi = desc.domain
    if args.x_min < lo or args.x_max > hi or (desc.family == "post_widder" and args.x_min <= 0):
        raise UsageError(f"x range [{args.x_min}, {args.x_max}] outside the domain of {desc.label}")
    prof = catalog.profile(desc, args.x_min, args.x_max, args.steps)
    rows = []
    for pt in prof.points:
        dS = d2S = margin = None
        if desc.family == "baskakov":
            d = s_derivatives(OperatorParams(desc.n, desc.c), pt.x)
            dS, d2S, margin = d.dS, d.d2S, d.logconv_margin
        rows.append((pt.x, pt.S, pt.V, pt.renyi, pt.tsallis, dS, d2S, margin))
    with _open(args.output) as fh:
        if args.format == "csv":
            write_csv(PROFILE_COLUMNS, rows, fh)
            _emit_manifest(args, _manifest(args, started))
        else:
            fh.write(dumps({"manifest": _manifest(args, started), "operator": desc.label,
                            "points": [dict(zip(PROFILE_COLUMNS, r)) for r in rows]}))
    return EXIT_OK


def _scan_config(args) -> verifier.ScanConfig:
    try:
        return verifier.ScanConfig(
            n_range=(args.n_min, args.n_max), c_values=args.c,
            x_window=tuple(args.x_window) if args.x_window else None,
            t_window=(1.0, args.t_max), grid_points=args.grid_points, hard_tol=args.hard_tol,
            durrmeyer_n_max=args.durrmeyer_n_max, multivariate_n_max=args.multivariate_n_max)
    except (ValueError, DomainError) as exc:
        raise UsageError(str(exc))


def cmd_verify(args, started: float) -> int:
    if args.list:
        for cid, chk in verifier.REGISTRY.items():
            tag = "conditional" if chk.conditional else "unconditional"
            print(f"{cid:26s} {tag:13s} {chk.statement}")
        return EXIT_OK
    ids = list(verifier.REGISTRY) if args.suite == "all" else [s.strip() for s in args.suite.split(",") if s.strip()]
    unknown = [i for i in ids if i not in verifier.REGISTRY]
    if unknown or not ids:
        raise UsageError(f"unknown check id(s): {', '.join(unknown) or '(none given)'}")
    cfg = _scan_config(args)
    res = verifier.run_checks(ids, cfg)
    counts = (len(res.violations), len(res.findings), len(res.grazing))
    report = {"manifest": _manifest(args, started, counts), **res.to_dict()}
    report["manifest"]["config"]["scan"] = cfg.to_dict()
    with _open(args.output) as fh:
        fh.write(dumps(report))
    if res.errors:
        return EXIT_USAGE
    return EXIT_VIOLATION if res.violations else EXIT_OK


def cmd_durrmeyer(args, started: float) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    seq = catalog.durrmeyer_coeffs(args.n)
    d2 = [None] + seq.second_differences() + [None]
    rows = [(k, ck, d2[k]) for k, ck in enumerate(seq.coeffs)]
    res = None
    if args.check_convexity:
        res = verifier.scan_durrmeyer_convexity(args.n)
        # only the requested degree
        for lst in (res.violations, res.findings, res.grazing):
            lst[:] = [r for r in lst if r.params.get("n") == args.n]
    counts = (len(res.violations), len(res.findings), len(res.grazing)) if res else (0, 0, 0)
    manifest = _manifest(args, started, counts)
    with _open(args.output) as fh:
        if args.format == "csv":
            write_csv(("k", "c_nk", "second_difference"), rows, fh)
            _emit_manifest(args, {**manifest, **({"scan": res.to_dict()} if res else {})})
        else:
            out = {"manifest": manifest, "n": args.n, "symmetric": seq.is_symmetric,
                   "coefficients": [str(c) for c in seq.coeffs],
                   "second_differences": [str(v) for v in seq.second_differences()]}
            if res is not None:
                out.update(res.to_dict())
            fh.write(dumps(out))
    if not seq.is_symmetric or (res is not None and res.violations):
        return EXIT_VIOLATION
    return EXIT_OK


def legendre_rows(n: int, ts) -> list[tuple]:
    rows = []
    for t in ts:
        t = float(t)
        P, dP = lg.legendre_pair(n, t)
        ratio = dP / P
        lb = lg.ratio_lower_bound(n, t)
        simple = lg.ratio_upper_simple(n, t)
        refined = lg.ratio_upper_refined(n, t)
        cond = lg.ratio_upper_conditional(n, t) if t > 1.0 else None
        sharp = lg.poly_upper_sharp(n, t)
        poly_simple = lg.poly_upper_simple(n, t) if n >= 2 else None
        rm = verifier.rel_margin
        rows.append((t, P, ratio, lb, simple, refined, cond, sharp, poly_simple,
                     rm(lb, ratio), rm(ratio, simple), rm(ratio, refined),
                     rm(ratio, cond) if cond is not None else None,
                     rm(P, sharp), rm(P, poly_simple) if poly_simple is not None else None))
    return rows


def cmd_legendre(args, started: float) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.crossover:
        ts = lg.crossover_t(args.n)
        print(format(ts, ".17g"))
        return EXIT_OK
    if args.steps < 1 or args.t_min < 1.0 or args.t_max < args.t_min:
        raise UsageError("need 1 <= t-min <= t-max and steps >= 1")
    ts = catalog.grid(args.t_min, args.t_max, args.steps)
    rows = legendre_rows(args.n, ts)
    # columns 9..14 are margins; index 12 (conditional bound) never fails the run
    hard = [r[i] for r in rows for i in (9, 10, 11, 13, 14) if r[i] is not None]
    failed = any(m < -args.hard_tol for m in hard)
    with _open(args.output) as fh:
        if args.format == "csv":
            write_csv(LEGENDRE_COLUMNS, rows, fh)
            _emit_manifest(args, _manifest(args, started))
        else:
            fh.write(dumps({"manifest": _manifest(args, started), "n": args.n,
                            "rows": [dict(zip(LEGENDRE_COLUMNS, r)) for r in rows]}))
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_multivariate(args, started: float) -> int:
    n, step = args.n, args.step
    if n < 1:
        raise UsageError("--n must be >= 1")
    checks = ("axial", "reduction", "product", "equivalence") if args.check == "all" else (args.check,)
    try:
        N = mv._lattice(step)
    except ValueError as exc:
        raise UsageError(str(exc))
    out: dict = {"n": n, "step": step}
    hard_fail = False
    if "axial" in checks:
        if not 0 < step <= 0.125:
            raise UsageError("--step must lie in (0, 1/8] for the axial scan")
        viol = mv.axial_convexity_scan(n, step)
        out["axial"] = {"violations": [r.to_dict() for r in viol]}
        hard_fail |= bool(viol)
    if "reduction" in checks:
        worst = 0.0
        for i in range(N + 1):
            for j in range(N + 1 - i):
                if j == N:
                    continue
                p = mv.SimplexPoint(i / N, j / N)
                a, b = mv.r_n(n, p), mv.r_n_reduction(n, p)
                worst = max(worst, abs(a - b) / a)
        out["reduction"] = {"max_rel_error": worst, "tolerance": 1e-12}
        hard_fail |= worst > 1e-12
    if "product" in checks:
        worst = 0.0
        for i in range(N + 1):
            for j in range(N + 1):
                a, b = mv.q_n(n, i / N, j / N), mv.q_n_double_sum(n, i / N, j / N)
                worst = max(worst, abs(a - b) / a)
        out["product"] = {"max_rel_error": worst, "tolerance": 1e-12}
        hard_fail |= worst > 1e-12
    if "equivalence" in checks:
        if not 0 < step <= 1.0 / 16:
            raise UsageError("--step must lie in (0, 1/16] for the equivalence check")
        out["equivalence"] = mv.equivalence_check(n, step).to_dict()
    out = {"manifest": _manifest(args, started, (int(hard_fail), 0, 0)), **out}
    with _open(args.output) as fh:
        fh.write(dumps(out))
    return EXIT_VIOLATION if hard_fail else EXIT_OK


COMMANDS = {"entropy": cmd_entropy, "verify": cmd_verify, "durrmeyer": cmd_durrmeyer,
            "legendre": cmd_legendre, "multivariate": cmd_multivariate}


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,0,1" as an option flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--c", "--x-window") and i + 1 < len(argv) and argv[i + 1][:1] == "-" \
                and len(argv[i + 1]) > 1 and (argv[i + 1][1].isdigit() or argv[i + 1][1] == "."):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        return COMMANDS[args.command](args, started)
    except UsageError as exc:
        print(f"kernel-entropy {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ValueError, ConvergenceError, ArithmeticError) as exc:
        print(f"kernel-entropy {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
