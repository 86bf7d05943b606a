"""Command-line front end.

Subcommands: eigen, threshold, sweep, shell, verify, plot. Numeric output is
JSON (17 significant digits, stable key order) and CSV; plots are standalone
SVG rendered from CSV. Exit codes: 0 success, 1 usage error, 2 computational
failure, 3 verification failure. Runs that write files also write a
manifest.json listing them; timestamps live only in the manifest so the data
files are byte-identical across reruns.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .acceptance import SUITES, run as run_suites
from .errors import ShelloptError
from .optimal_sets import predict_shell_2d, predict_shell_nd
from .radial import ShellProblem, radial_principal_eigenvalue
from .reduction import map_r_to_t, reduce as reduce_shell
from .sl_core import RobinProblem1D, principal_eigenvalue
from .svgplot import line_chart
from .thresholds import Regime, beta_star, classify_shell
from .verifier import sweep_placements_1d, sweep_placements_radial
from .weights import BangBangWeight, IntervalDomain
from . import jsonio

# placeholder mean bound for commands that build a ShellProblem without one;
# it never influences eigenvalues and is not echoed in their output
_NEUTRAL_M0 = 0.5


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; the contract here is exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _write_manifest(out_dir: Path, command: str, args: argparse.Namespace, outputs: list[str]) -> None:
    skip = {"func", "command"}
    params = {
        k: v for k, v in sorted(vars(args).items()) if k not in skip
    }
    manifest = {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "outputs": outputs,
    }
    jsonio.write_json(out_dir / "manifest.json", manifest)


def _interval_problem(args) -> RobinProblem1D:
    a, b = args.domain
    dom = IntervalDomain(a, b)
    seg = IntervalDomain(args.set[0], args.set[1])
    w = BangBangWeight(dom, args.kappa, (seg,))
    beta_right = args.beta if args.beta_right is None else args.beta_right
    return RobinProblem1D(dom, args.beta, beta_right, w)


def _shell_problem(args, segments) -> ShellProblem:
    n_raw, r1, r2 = args.shell
    n = int(n_raw)
    if n != n_raw:
        raise ValueError(f"shell dimension must be an integer, got {n_raw}")
    return ShellProblem.make(n, r1, r2, args.beta, args.kappa, _NEUTRAL_M0, segments)


def cmd_eigen(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.shell is not None:
        if args.beta_right is not None:
            print("usage error: --beta-right applies only to --domain problems", file=sys.stderr)
            return 1
        sp = _shell_problem(args, [tuple(args.set)])
        res = radial_principal_eigenvalue(sp)
        problem_doc = {
            "kind": "shell",
            "n": sp.n,
            "r1": sp.r1,
            "r2": sp.r2,
            "beta": sp.beta,
            "kappa": args.kappa,
            "set": list(args.set),
        }
        sample_header = ["r", "u"]
    else:
        problem = _interval_problem(args)
        res = principal_eigenvalue(problem)
        problem_doc = {
            "kind": "interval",
            "domain": list(args.domain),
            "beta_left": problem.beta_left,
            "beta_right": problem.beta_right,
            "kappa": args.kappa,
            "set": list(args.set),
        }
        sample_header = ["x", "u"]
    doc = {
        "problem": problem_doc,
        "lambda": res.lam,
        "zero_count": res.zero_count,
        "residual": res.residual,
    }
    jsonio.write_json(out_dir / "eigenvalue.json", doc)
    jsonio.write_csv(out_dir / "eigenfunction.csv", sample_header, res.samples_csv_rows())
    _write_manifest(out_dir, "eigen", args, ["eigenvalue.json", "eigenfunction.csv"])
    print(f"lambda = {res.lam:.17g}")
    return 0


def cmd_threshold(args) -> int:
    a, b = args.domain
    dom = IntervalDomain(a, b)
    bs = beta_star(args.c, args.kappa)
    doc = {
        "c": args.c,
        "kappa": args.kappa,
        "domain": [a, b],
        "beta_star": bs,
        "beta_star_scaled": bs / dom.length(),
    }
    print(jsonio.dumps(doc), end="")
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        jsonio.write_json(out_dir / "threshold.json", doc)
        _write_manifest(out_dir, "threshold", args, ["threshold.json"])
    return 0


def cmd_sweep(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.shell is not None:
        if args.beta_right is not None:
            print("usage error: --beta-right applies only to --domain problems", file=sys.stderr)
            return 1
        _, r1, r2 = args.shell
        span = r2 - r1
        placeholder = [(r1 + 0.25 * span, r1 + 0.35 * span)]
        sp = _shell_problem(args, placeholder)
        sweep = sweep_placements_radial(sp, args.c, args.grid)
        context = {"kind": "shell", "n": sp.n, "r1": r1, "r2": r2, "beta": args.beta}
    else:
        a, b = args.domain
        dom = IntervalDomain(a, b)
        beta_right = args.beta if args.beta_right is None else args.beta_right
        sweep = sweep_placements_1d(dom, args.beta, beta_right, args.c, args.kappa, args.grid)
        context = {
            "kind": "interval",
            "domain": [a, b],
            "beta_left": args.beta,
            "beta_right": beta_right,
        }
    context.update({"kappa": args.kappa, "c": args.c, "grid_points": args.grid})
    doc = {"problem": context}
    doc.update(sweep.to_json_dict())
    jsonio.write_json(out_dir / "sweep.json", doc)
    jsonio.write_csv(
        out_dir / "sweep.csv",
        [f"anchor_{sweep.anchor_variable}", "lambda"],
        sweep.csv_rows(),
    )
    _write_manifest(out_dir, "sweep", args, ["sweep.json", "sweep.csv"])
    print(
        f"argmin anchor ({sweep.anchor_variable}) = {sweep.argmin_anchor:.17g}, "
        f"lambda_min = {sweep.lambda_min:.17g}"
    )
    return 0


def cmd_shell(args) -> int:
    n_raw, r1, r2 = args.shell
    n = int(n_raw)
    if n != n_raw:
        raise ValueError(f"shell dimension must be an integer, got {n_raw}")
    span = r2 - r1
    placeholder = [(r1 + 0.25 * span, r1 + 0.35 * span)]
    sp = ShellProblem.make(n, r1, r2, args.beta, args.kappa, args.m0, placeholder)
    rp = reduce_shell(sp, q=args.q)
    report = classify_shell(sp, rp.c_prime)
    predict = predict_shell_2d if n == 2 else predict_shell_nd

    def predicted(beta: float):
        probe = ShellProblem.make(n, r1, r2, beta, args.kappa, args.m0, placeholder)
        return predict(probe, rp.c_prime)

    thr = report.beta_star_scaled
    sup = predicted(2.0 * thr)
    sub = predicted(0.5 * thr)
    crit = predicted(thr)
    doc = {
        "problem": {
            "n": n,
            "r1": r1,
            "r2": r2,
            "beta": args.beta,
            "kappa": args.kappa,
            "m0": args.m0,
        },
        "reduction": {
            "q": rp.q,
            "q_lower_bound": rp.q_bound,
            "m0_prime": rp.m0_prime,
            "c_prime": rp.c_prime,
            "lambda_factor": rp.lambda_factor,
            "t_domain": [rp.t_domain.a, rp.t_domain.b],
            "beta_left_reduced": rp.beta_left,
            "beta_right_reduced": rp.beta_right,
        },
        "threshold": report.to_json_dict(),
        "predictions": {
            Regime.SUPERCRITICAL.value: {"sets_r": [[s.a, s.b] for s in sup.sets]},
            Regime.SUBCRITICAL.value: {"sets_r": [[s.a, s.b] for s in sub.sets]},
            Regime.CRITICAL.value: {"family_t": crit.family.to_json_dict()},
        },
    }
    outputs = ["shell.json"]
    if args.check:
        sweep = sweep_placements_radial(sp, rp.c_prime, args.grid)
        cell = sweep.grid_cell()
        active = predicted(args.beta)
        if active.regime == Regime.CRITICAL:
            fam = active.family
            anchors_t = [fam.anchor_lo, fam.anchor_hi]
            inside = fam.anchor_lo - cell <= sweep.argmin_anchor <= fam.anchor_hi + cell
            offset = 0.0 if inside else min(
                abs(sweep.argmin_anchor - fam.anchor_lo),
                abs(sweep.argmin_anchor - fam.anchor_hi),
            )
        else:
            anchors_t = [map_r_to_t(n, s.a) for s in active.sets]
            offset = min(abs(sweep.argmin_anchor - t0) for t0 in anchors_t)
        doc["check"] = {
            "grid_points": args.grid,
            "argmin_anchor_t": sweep.argmin_anchor,
            "lambda_min": sweep.lambda_min,
            "lambda_range": sweep.lambda_range,
            "predicted_anchors_t": anchors_t,
            "offset_grid_cells": offset / cell,
            "agrees_within_one_cell": bool(offset <= cell + 1e-12),
        }
    print(jsonio.dumps(doc), end="")
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        jsonio.write_json(out_dir / "shell.json", doc)
        _write_manifest(out_dir, "shell", args, outputs)
    return 0


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    outcomes = run_suites(names)
    for oc in outcomes:
        print(oc.summary_line())
        for line in oc.detail.splitlines():
            print("  " + line)
    failed = [oc for oc in outcomes if not oc.passed]
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        doc = {
            "suites": [
                {"criterion": oc.criterion, "passed": oc.passed, "detail": oc.detail}
                for oc in outcomes
            ],
            "all_passed": not failed,
        }
        jsonio.write_json(out_dir / "verify.json", doc)
        _write_manifest(out_dir, "verify", args, ["verify.json"])
    if failed:
        print(f"{len(failed)} of {len(outcomes)} suites failed", file=sys.stderr)
        return 3
    print(f"all {len(outcomes)} suites passed")
    return 0


def cmd_plot(args) -> int:
    src = Path(args.infile)
    header, rows = jsonio.read_csv(src)
    if len(header) < 2 or not rows:
        raise ValueError(f"{src}: need a two-column CSV with at least one data row")
    xs = [float(r[0]) for r in rows]
    ys = [float(r[1]) for r in rows]
    title = "Placement sweep" if args.kind == "sweep" else "Principal eigenfunction"
    svg = line_chart(xs, ys, xlabel=header[0], ylabel=header[1], title=title)
    out = Path(args.out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    _write_manifest(out.parent, "plot", args, [out.name])
    print(f"wrote {out}")
    return 0


def _add_geometry_args(p: _Parser, *, with_set: bool) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--domain", nargs=2, type=float, metavar=("A", "B"),
                       help="interval endpoints")
    group.add_argument("--shell", nargs=3, type=float, metavar=("N", "R1", "R2"),
                       help="shell dimension and radii")
    p.add_argument("--kappa", type=float, required=True, help="favorable weight value")
    p.add_argument("--beta", type=float, required=True, help="Robin coefficient")
    p.add_argument("--beta-right", type=float, default=None,
                   help="right-end Robin coefficient (interval problems only)")
    if with_set:
        p.add_argument("--set", nargs=2, type=float, required=True, metavar=("S", "E"),
                       help="favorable interval endpoints")


def build_parser() -> _Parser:
    parser = _Parser(prog="shellopt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"shellopt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eigen = sub.add_parser("eigen", help="principal eigenvalue of one configuration")
    _add_geometry_args(p_eigen, with_set=True)
    p_eigen.add_argument("--out", required=True, help="output directory")
    p_eigen.set_defaults(func=cmd_eigen)

    p_thr = sub.add_parser("threshold", help="closed-form critical Robin coefficient")
    p_thr.add_argument("--c", type=float, required=True, help="favorable volume fraction")
    p_thr.add_argument("--kappa", type=float, required=True, help="favorable weight value")
    p_thr.add_argument("--domain", nargs=2, type=float, default=[0.0, 1.0],
                       metavar=("A", "B"), help="interval for the scaled threshold")
    p_thr.add_argument("--out", default=None, help="optional output directory")
    p_thr.set_defaults(func=cmd_threshold)

    p_sweep = sub.add_parser("sweep", help="lambda over all single-interval placements")
    _add_geometry_args(p_sweep, with_set=False)
    p_sweep.add_argument("--c", type=float, required=True,
                         help="favorable fraction (t-fraction for shells)")
    p_sweep.add_argument("--grid", type=int, required=True, help="number of placements")
    p_sweep.add_argument("--out", required=True, help="output directory")
    p_sweep.set_defaults(func=cmd_sweep)

    p_shell = sub.add_parser("shell", help="reduction, threshold, and predicted sets")
    p_shell.add_argument("--shell", nargs=3, type=float, required=True,
                         metavar=("N", "R1", "R2"), help="shell dimension and radii")
    p_shell.add_argument("--kappa", type=float, required=True)
    p_shell.add_argument("--m0", type=float, required=True, help="mean-weight bound")
    p_shell.add_argument("--beta", type=float, required=True)
    p_shell.add_argument("--q", type=float, default=None,
                         help="reduction parameter (default: deterministic choice)")
    p_shell.add_argument("--check", action="store_true",
                         help="run a radial sweep and compare with the prediction")
    p_shell.add_argument("--grid", type=int, default=41,
                         help="sweep resolution for --check")
    p_shell.add_argument("--out", default=None, help="optional output directory")
    p_shell.set_defaults(func=cmd_shell)

    p_verify = sub.add_parser("verify", help="run the acceptance suites")
    p_verify.add_argument("--suite", choices=sorted(SUITES), default=None,
                          help="run a single suite instead of all")
    p_verify.add_argument("--out", default=None, help="optional output directory")
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="render a CSV as a standalone SVG chart")
    p_plot.add_argument("--in", dest="infile", required=True, help="input CSV path")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.add_argument("--kind", choices=("sweep", "eigenfunction"), default="sweep")
    p_plot.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ShelloptError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
