"""Command line front end: ``solve``, ``analyze`` and ``sweep``.

Exit codes: 0 success, 1 usage error, 2 failed ``--check``.
"""
from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import analysis, io
from .assembly import (AdvectionConfig, EtaRule, StabilizationSpec, Variant,
                       assemble, assemble_dod, resolve_eta)
from .mesh import build_mesh
from .oracle import advect_and_average
from .stepping import (Constant, Diagnostics, Sine, Step,
                       project_initial_data, step)

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_geometry(p):
    p.add_argument("--n", type=int, default=10, help="background cells")
    p.add_argument("--alpha", type=float, default=0.001, help="cut fraction of the small cell")
    p.add_argument("--split-left", type=float, default=0.5,
                   help="left boundary of the split background cell")
    p.add_argument("--lambda", dest="lambda_cfl", type=float, default=0.4, help="CFL number")
    p.add_argument("--beta", type=float, default=1.0, help="advection velocity")


def _add_scheme(p):
    p.add_argument("--stab", choices=[v.value for v in Variant], default="dod")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--eta", type=float, help="fixed DoD eta")
    g.add_argument("--eta-rule", choices=[r.value for r in EtaRule],
                   help="paper: 1-a/l, half: 1-a/(2l) (default), one: 1")
    p.add_argument("--eta1", type=float, help="ghost-penalty eta at face k-1/2")
    p.add_argument("--eta2", type=float, help="ghost-penalty eta at the cut face")
    p.add_argument("--force-eta", action="store_true", help="allow eta outside [0, 1]")


def _stabilization(args) -> StabilizationSpec:
    variant = Variant(args.stab)
    if variant is not Variant.DOD and (args.eta is not None or args.eta_rule is not None):
        raise UsageError("--eta/--eta-rule require --stab dod")
    if variant is not Variant.GHOST_PENALTY and (args.eta1 is not None or args.eta2 is not None):
        raise UsageError("--eta1/--eta2 require --stab gp")
    if variant is Variant.NONE:
        return StabilizationSpec.none()
    if variant is Variant.GHOST_PENALTY:
        return StabilizationSpec.ghost_penalty(args.eta1 or 0.0, args.eta2 or 0.0)
    if args.eta is not None:
        if not args.force_eta and not 0.0 <= args.eta <= 1.0:
            raise UsageError("--eta outside [0, 1] needs --force-eta")
        return StabilizationSpec.dod(args.eta, force_eta=args.force_eta)
    return StabilizationSpec.dod(EtaRule(args.eta_rule or EtaRule.HALF))


def _setup(args):
    try:
        mesh = build_mesh(args.n, args.alpha, args.split_left)
        cfg = AdvectionConfig(args.beta, args.lambda_cfl)
    except ValueError as e:
        raise UsageError(str(e)) from e
    stab = _stabilization(args)
    return mesh, cfg, stab, assemble(mesh, cfg, stab)


def parse_init(spec: str, mesh, seed=None):
    kind, *params = spec.split(":")
    try:
        if kind == "step" and len(params) == 2:
            return project_initial_data(mesh, Step(float(params[0]), float(params[1])))
        if kind == "constant" and len(params) == 1:
            return project_initial_data(mesh, Constant(float(params[0])))
        if kind == "sine" and not params:
            return project_initial_data(mesh, Sine())
        if kind == "random" and not params:
            rng = np.random.default_rng(seed)
            return project_initial_data(mesh, rng.uniform(-1.0, 1.0, mesh.n_cells))
    except ValueError as e:
        raise UsageError(f"bad --init {spec!r}: {e}") from e
    raise UsageError(f"bad --init {spec!r}; use step:a:b, constant:c, sine or random")


def _snapshot_every(spec: str, n_steps: int) -> int:
    if spec == "final":
        return n_steps
    if spec.startswith("every-"):
        try:
            k = int(spec[len("every-"):])
        except ValueError:
            k = 0
        if k >= 1:
            return k
    raise UsageError(f"bad --snapshots {spec!r}; use final or every-<k>")


def _summary(n: int, state, mesh) -> str:
    lo, hi = analysis.extrema(state)
    return (f"step={n} t={state.time:.17g} mass={analysis.mass(state, mesh):.17g} "
            f"tv={analysis.total_variation(state):.17g} min={lo:.17g} max={hi:.17g}")


def cmd_solve(args) -> int:
    mesh, cfg, stab, matrices = _setup(args)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    every = _snapshot_every(args.snapshots, args.steps)
    state = parse_init(args.init, mesh, args.seed)
    diag = Diagnostics()
    diag.record(state, mesh.lengths)
    shift = cfg.tau(mesh.h)

    multi = every < args.steps
    out = Path(args.out) if args.out else None
    if multi:
        print(_summary(0, state, mesh))
        if out:
            io.write_snapshot(out.with_name(f"{out.stem}_{0:06d}{out.suffix}"), mesh, state)
    for n in range(1, args.steps + 1):
        if args.oracle:
            state = advect_and_average(state, mesh, shift, dt=matrices.dt)
        else:
            state = step(state, matrices)
        diag.record(state, mesh.lengths)
        if n % every == 0 or n == args.steps:
            print(_summary(n, state, mesh))
            if out:
                path = out.with_name(f"{out.stem}_{n:06d}{out.suffix}") if multi else out
                io.write_snapshot(path, mesh, state)

    if args.check:
        m0 = diag.mass[0]
        drift = max(abs(m - m0) for m in diag.mass)
        lo, hi = diag.minimum[0], diag.maximum[0]
        tol = 1e-12 * max(1.0, abs(lo), abs(hi))
        ok = drift <= 1e-12 * max(1.0, abs(m0))
        ok &= min(diag.minimum) >= lo - tol and max(diag.maximum) <= hi + tol
        if not ok:
            print(f"check failed: mass drift {drift:.3g}, range "
                  f"[{min(diag.minimum):.17g}, {max(diag.maximum):.17g}] "
                  f"vs initial [{lo:.17g}, {hi:.17g}]", file=sys.stderr)
            return EXIT_CHECK
    return EXIT_OK


def cmd_analyze(args) -> int:
    mesh, cfg, stab, matrices = _setup(args)
    report = analysis.check_monotonicity(matrices)
    interval = analysis.admissible_eta_interval(mesh.alpha, cfg.lambda_cfl)
    payload = report.to_dict()
    payload["eta"] = matrices.resolved_eta
    payload["eta_interval"] = interval.to_dict()
    if Variant(stab.variant) is Variant.GHOST_PENALTY:
        cert = analysis.ghost_penalty_feasibility(mesh.alpha, cfg.lambda_cfl)
        payload["gp_feasibility"] = cert.to_dict()
        print(f"ghost penalty feasible: {str(cert.feasible).lower()}")
    if interval.empty:
        print(f"admissible eta: none needed (alpha={mesh.alpha} > lambda={cfg.lambda_cfl}); "
              "do not stabilize")
    else:
        print(f"admissible eta interval: [{interval.lower:.17g}, {interval.upper:.17g}]")
    print(f"monotone: {str(report.monotone).lower()} min_entry={report.min_entry:.17g}")
    for r, c, v in report.negative_entries:
        print(f"  negative entry B[{r},{c}] = {v:.17g}")
    if args.report:
        io.write_json(args.report, payload)
    if args.check and not report.monotone:
        return EXIT_CHECK
    return EXIT_OK


def _grid(range_spec, value):
    if range_spec is None:
        return np.array([value], dtype=float)
    try:
        if "," in range_spec:
            return np.array([float(v) for v in range_spec.split(",")])
        a, b, n = range_spec.split(":")
        n = int(n)
        if n < 1:
            raise ValueError
        return np.linspace(float(a), float(b), n)
    except ValueError as e:
        raise UsageError(f"bad range {range_spec!r}; use a:b:steps or v1,v2,...") from e


def _sweep_point(n, split_left, beta, alpha, lam, eta_values, eta_rule):
    mesh = build_mesh(n, alpha, split_left)
    cfg = AdvectionConfig(beta, lam)
    lower = analysis.admissible_eta_interval(alpha, lam).lower
    etas = eta_values if eta_values is not None else [resolve_eta(eta_rule, alpha, lam)]
    rows = []
    for eta in etas:
        rep = analysis.check_monotonicity(assemble_dod(mesh, cfg, eta, force=True))
        rows.append((alpha, lam, float(eta), int(rep.monotone), rep.min_entry, lower))
    return rows


def cmd_sweep(args) -> int:
    alphas = _grid(args.alpha_range, args.alpha)
    lambdas = _grid(args.lambda_range, args.lambda_cfl)
    etas = None if args.eta_range is None else _grid(args.eta_range, None)
    for a in alphas:
        if not 0.0 < a <= 0.5:
            raise UsageError(f"alpha={a} outside (0, 1/2]")
    for lam in lambdas:
        if not 0.0 < lam < 1.0:
            raise UsageError(f"lambda={lam} outside (0, 1)")
    try:
        build_mesh(args.n, float(alphas[0]), args.split_left)
    except ValueError as e:
        raise UsageError(str(e)) from e
    rule = EtaRule(args.eta_rule or EtaRule.HALF)
    points = [(float(a), float(lam)) for a in alphas for lam in lambdas]

    def work(p):
        return _sweep_point(args.n, args.split_left, args.beta, p[0], p[1], etas, rule)

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(work, points))  # map keeps grid order

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["alpha", "lambda", "eta", "monotone", "min_entry", "eta_lower"])
        for rows in results:
            for a, lam, eta, mono, mn, lower in rows:
                w.writerow([f"{a:.17g}", f"{lam:.17g}", f"{eta:.17g}", mono,
                            f"{mn:.17g}", f"{lower:.17g}"])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cutcell-dod",
                     description="1D cut-cell P0 DG advection with DoD stabilization")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="run explicit Euler steps and write CSV snapshots")
    _add_geometry(p)
    _add_scheme(p)
    p.add_argument("--init", default="step:0.1:0.5",
                   help="step:a:b, constant:c, sine or random")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--out", help="snapshot CSV path")
    p.add_argument("--snapshots", default="final", help="final or every-<k>")
    p.add_argument("--oracle", action="store_true",
                   help="use exact advect-and-average instead of the scheme")
    p.add_argument("--check", action="store_true",
                   help="exit 2 if mass drifts or initial bounds are violated")
    p.add_argument("--seed", type=int, default=0, help="seed for --init random")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="monotonicity report for the system matrix")
    _add_geometry(p)
    _add_scheme(p)
    p.add_argument("--report", help="JSON report path")
    p.add_argument("--check", action="store_true", help="exit 2 if not monotone")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="DoD monotonicity over an (alpha, lambda, eta) grid")
    _add_geometry(p)
    p.add_argument("--alpha-range", help="a:b:steps")
    p.add_argument("--lambda-range", help="a:b:steps")
    p.add_argument("--eta-range", help="a:b:steps or v1,v2,... (default: the --eta-rule value)")
    p.add_argument("--eta-rule", choices=[r.value for r in EtaRule])
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
