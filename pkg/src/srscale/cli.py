"""Command-line interface.

Subcommands: ``factor`` (symplectic QR of a matrix file), ``scale``
(equal-norm block scaling report for one side), ``example`` (built-in
demonstration cases 6.1-6.4), ``ensemble`` (randomized near-optimality
certificate).

Exit codes: 0 success, 2 parse/structure error, 3 factorization
breakdown, 4 invalid argument or infeasible target.
"""

import argparse
import json
import sys

import numpy as np

from . import core, gallery, io
from .ensemble import run_ensemble
from .errors import (
    BreakdownError,
    DimensionError,
    InfeasibleTargetError,
    NonFactorizableError,
    ParseError,
    SrScaleError,
    StructureError,
)
from .factor import symplectic_qr
from .scaling import (
    equal_row_norm_scaling,
    scale_cols_inverse,
    scale_rows,
    scaling_report,
)
from .structure import symplectic_residual

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BREAKDOWN = 3
EXIT_INVALID = 4

_SIGN_MAP = {"minus": "minus", "plus": "plus", "min-abs": "min-abs"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _emit(doc, json_path):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if json_path:
        with open(json_path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    print(text)


def _report_doc(report, provenance):
    doc = report.to_dict()
    doc.update(provenance)
    return doc


def cmd_factor(args):
    g = io.read_matrix(args.input)
    factors = symplectic_qr(g)
    recon = float(np.linalg.norm(g[:, factors.col_perm] - factors.s @ factors.r))
    recon_rel = recon / max(float(np.linalg.norm(g)), 1e-300)
    struct_res = symplectic_residual(factors.s)
    if args.s_out:
        io.write_matrix(args.s_out, factors.s)
    if args.r_out:
        io.write_matrix(args.r_out, factors.r)
    if args.perm_out:
        io.write_matrix(args.perm_out, factors.col_perm.reshape(1, -1).astype(float))
    print(f"reconstruction residual |G P - S R|_F / |G|_F = {recon_rel:.6e}")
    print(f"structure residual |S^T J S - Jhat|_F = {struct_res:.6e}")
    return EXIT_OK


def cmd_scale(args):
    m = io.read_matrix(args.input)
    report = scaling_report(m, args.side, sign_rule=_SIGN_MAP[args.sign],
                            target=args.target)
    _emit(_report_doc(report, {
        "input": args.input,
        "sign_rule": args.sign,
        "target": args.target,
        "structural_tolerance": 1e-10 * core.frobenius_norm(m),
    }), args.json)
    return EXIT_OK


def _example_row_table(example_id, build, a_values, sign):
    columns = []
    for a in a_values:
        r = build(a)
        rep = scaling_report(r, "row", sign_rule=sign)
        columns.append({
            "a": a,
            "kappa_before": rep.kappa_before,
            "kappa_after": rep.kappa_after,
            "beta": rep.max_magnitude,
            "gamma": rep.min_magnitude,
            "alpha": rep.bound,
            "per_block_magnitudes": rep.per_block_magnitudes.tolist(),
            "scaling_c": rep.scaling.c.tolist(),
            "scaling_f": rep.scaling.f.tolist(),
        })
    return {"id": example_id, "side": "row", "sign_rule": sign, "columns": columns}


def _example_col_report(example_id, s, sign, extras):
    rep = scaling_report(s, "col", sign_rule=sign)
    doc = _report_doc(rep, {
        "id": example_id,
        "sign_rule": sign,
        "printed_precision_inputs": True,
        "delta": rep.max_magnitude,
        "mu": rep.min_magnitude,
    })
    doc.update(extras(rep))
    return doc


def cmd_example(args):
    sign = _SIGN_MAP[args.sign]
    if args.id in ("6.1", "6.2"):
        if args.a is not None and not 0.0 < args.a < 1.0:
            raise ValueError(f"parameter a must lie in (0, 1), got {args.a}")
        a_values = [args.a] if args.a is not None else list(gallery.DEFAULT_A_SWEEP)
        build = (gallery.triangular_wild_rows if args.id == "6.1"
                 else gallery.triangular_mixed_scales)
        doc = _example_row_table(args.id, build, a_values, sign)
    elif args.id == "6.3":
        def extras(rep):
            # the cross checks pair this S with the row scalers built at
            # the steepest sweep parameter, where the mismatch is largest
            a_cross = 0.01
            dr1, _ = equal_row_norm_scaling(gallery.triangular_wild_rows(a_cross),
                                            sign_rule=sign)
            dr2, _ = equal_row_norm_scaling(gallery.triangular_mixed_scales(a_cross),
                                            sign_rule=sign)
            dc = rep.scaling
            return {
                "cross_a": a_cross,
                "cross_kappa_s_rowscaler_61":
                    core.condition_number_inf(
                        scale_cols_inverse(gallery.S_EXTREME, dr1), precise=True),
                "cross_kappa_s_rowscaler_62":
                    core.condition_number_inf(
                        scale_cols_inverse(gallery.S_EXTREME, dr2), precise=True),
                "cross_kappa_colscaler_r_61":
                    core.condition_number_inf(
                        scale_rows(dc, gallery.triangular_wild_rows(a_cross)),
                        precise=True, dps=120),
                "cross_kappa_colscaler_r_62":
                    core.condition_number_inf(
                        scale_rows(dc, gallery.triangular_mixed_scales(a_cross)),
                        precise=True, dps=120),
                "embedded_s_symplectic_residual": symplectic_residual(gallery.S_EXTREME),
                "embedded_r_kappa": core.condition_number(gallery.R_EXTREME),
            }
        doc = _example_col_report(args.id, gallery.S_EXTREME, sign, extras)
    elif args.id == "6.4":
        def extras(rep):
            return {
                "embedded_s_symplectic_residual": symplectic_residual(gallery.S_MODERATE),
            }
        doc = _example_col_report(args.id, gallery.S_MODERATE, sign, extras)
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"unknown example id {args.id}")
    _emit(doc, args.json)
    return EXIT_OK


def cmd_ensemble(args):
    if args.trials < 1:
        raise ValueError("trials must be >= 1")
    if args.pairs < 1:
        raise ValueError("pairs must be >= 1")
    summary = run_ensemble(args.pairs, args.trials, args.seed,
                           samples=args.samples)
    _emit(summary, args.json)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="srscale",
                     description="Block-diagonal scalings for SR factorizations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="symplectic QR of a matrix file")
    p.add_argument("input")
    p.add_argument("--s-out")
    p.add_argument("--r-out")
    p.add_argument("--perm-out")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("scale", help="equal-norm block scaling report")
    p.add_argument("input")
    p.add_argument("--side", choices=["row", "col"], required=True)
    p.add_argument("--sign", choices=list(_SIGN_MAP), default="min-abs")
    p.add_argument("--target", type=float, default=None)
    p.add_argument("--json")
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("example", help="built-in demonstration cases")
    p.add_argument("--id", choices=list(gallery.EXAMPLE_IDS), required=True)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--sign", choices=list(_SIGN_MAP), default="plus")
    p.add_argument("--json")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("ensemble", help="randomized near-optimality certificate")
    p.add_argument("--pairs", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--json")
    p.set_defaults(func=cmd_ensemble)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, StructureError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BreakdownError, NonFactorizableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BREAKDOWN
    except (InfeasibleTargetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SrScaleError as exc:  # remaining library errors are input problems
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
