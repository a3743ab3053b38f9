"""Command-line frontend.

Subcommands: reps, chsh, sweep-eta, entropy, optimize, verify-op,
reproduce-paper.  Exit codes: 0 success, 1 input validation error, 2
internal consistency failure (two computation routes disagree, or a
reference row misses its tolerance).  Payloads go to stdout, diagnostics
to stderr; identical flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .chsh import (
    CLASSICAL_BOUND,
    VIOLATION_EPS,
    canonical_angles,
    chsh_squeezed_all_pairs,
    chsh_squeezed_single_pair,
    chsh_value,
    violation_window_single_pair,
)
from .entanglement import (
    entropy,
    entropy_closed_squeezed,
    purity,
    purity_closed_squeezed,
    reduced_density,
)
from .errors import ConsistencyError, ValidationError
from .operators import AngleSet, PairingSpec, build_operator, canonical_pairing, pseudospin_bell, verify_bell_operator
from .optimize import enumerate_representations, optimize_angles, optimize_eta
from .reference import reference_rows
from .states import SchmidtState, maximal_state, skewed_state, squeezed_state

DEFAULT_SEED = 20240809


class _Parser(argparse.ArgumentParser):
    # the exit-code contract reserves 2 for consistency failures
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _print_csv(header: list[str], rows: list[list]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(_fmt(x) for x in row))


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _add_format_flags(parser: argparse.ArgumentParser, default: str) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    parser.set_defaults(fmt=default)


def _parse_angles(text: str) -> AngleSet:
    if text == "canonical":
        return canonical_angles()
    parts = text.split(",")
    if len(parts) != 4:
        raise ValidationError(f"expected 'canonical' or four comma-separated radians, got {text!r}")
    try:
        return AngleSet(*(float(p) for p in parts))
    except ValueError as exc:
        raise ValidationError(f"bad angle list {text!r}: {exc}") from exc


def _parse_pair_list(text: str, dim: int) -> PairingSpec:
    pairs = []
    for chunk in text.split(","):
        if not chunk:
            continue
        halves = chunk.split(":")
        if len(halves) != 2:
            raise ValidationError(f"bad pair {chunk!r}, expected i:j")
        try:
            pairs.append((int(halves[0]), int(halves[1])))
        except ValueError as exc:
            raise ValidationError(f"bad pair {chunk!r}: {exc}") from exc
    return PairingSpec(dim=dim, pairs=tuple(pairs))


def _state_from_args(args) -> SchmidtState:
    if args.state == "maximal":
        if args.dim is None:
            raise ValidationError("--state maximal requires --dim")
        return maximal_state(args.dim)
    if args.state == "skewed":
        if args.r is None:
            raise ValidationError("--state skewed requires --r")
        return skewed_state(args.r)
    if args.eta is None:
        raise ValidationError("--state squeezed requires --eta")
    return squeezed_state(args.eta, args.cutoff)


def _pairing_from_args(args, dim: int) -> PairingSpec:
    if args.pair_list is not None:
        return _parse_pair_list(args.pair_list, dim)
    if args.pairs is None:
        raise ValidationError("specify --pairs <count|all> or --pair-list i:j,...")
    if args.pairs == "all":
        return canonical_pairing(dim, dim // 2)
    try:
        count = int(args.pairs)
    except ValueError as exc:
        raise ValidationError(f"--pairs must be an integer or 'all', got {args.pairs!r}") from exc
    return canonical_pairing(dim, count)


def _parse_eta_values(args) -> list[float]:
    if args.etas is not None:
        try:
            values = [float(v) for v in args.etas.split(",") if v]
        except ValueError as exc:
            raise ValidationError(f"bad --etas list: {exc}") from exc
    else:
        parts = args.grid.split(":")
        if len(parts) != 3:
            raise ValidationError(f"--grid expects start:stop:count, got {args.grid!r}")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ValidationError(f"bad --grid: {exc}") from exc
        if count < 1:
            raise ValidationError("--grid count must be >= 1")
        values = [float(v) for v in np.linspace(start, stop, count)]
    for v in values:
        if not 0.0 <= v < 1.0:
            raise ValidationError(f"eta {v} outside [0, 1)")
    return values


# ---------------------------------------------------------------- subcommands


def cmd_reps(args) -> int:
    summaries = enumerate_representations(args.dim)
    if args.fmt == "json":
        _print_json([s.to_json_dict() for s in summaries])
    else:
        _print_csv(
            ["dim", "p", "trace", "max_chsh"],
            [[s.dim, s.pair_count, s.trace, s.max_chsh] for s in summaries],
        )
    return 0


def cmd_chsh(args) -> int:
    state = _state_from_args(args)
    spec = _pairing_from_args(args, state.dim)
    angles = _parse_angles(args.angles)
    if args.method in ("oracle", "closed"):
        method = "closed_form" if args.method == "closed" else "oracle"
        report = chsh_value(state, spec, angles, method)
        _print_json(report.to_json_dict())
        return 0
    oracle = chsh_value(state, spec, angles, "oracle")
    closed = chsh_value(state, spec, angles, "closed_form")
    difference = abs(oracle.value - closed.value)
    tol = args.tol if args.tol is not None else 1e-8 + 4.0 * state.tail_mass
    _print_json(
        {
            "oracle": oracle.to_json_dict(),
            "closed_form": closed.to_json_dict(),
            "difference": difference,
            "tolerance": tol,
        }
    )
    if difference > tol:
        print(f"oracle/closed-form disagreement {difference} exceeds {tol}", file=sys.stderr)
        return 2
    return 0


def cmd_sweep_eta(args) -> int:
    etas = _parse_eta_values(args)
    window = violation_window_single_pair()
    print(f"violation window: ({window[0]:.12g}, {window[1]:.12g})", file=sys.stderr)
    closed_fn = chsh_squeezed_single_pair if args.mode == "single_pair" else chsh_squeezed_all_pairs
    rows = []
    worst = (0.0, 0.0)  # (excess over tolerance, eta)
    for eta in etas:
        state = squeezed_state(eta, args.cutoff)
        n_pairs = 1 if args.mode == "single_pair" else args.cutoff // 2
        spec = canonical_pairing(args.cutoff, n_pairs)
        oracle = chsh_value(state, spec, canonical_angles(), "oracle").value
        closed = closed_fn(eta)
        tol = args.tol if args.tol is not None else 1e-8 + 4.0 * state.tail_mass
        excess = abs(closed - oracle) - tol
        if excess > worst[0]:
            worst = (excess, eta)
        rows.append(
            {
                "eta": eta,
                "closed_value": closed,
                "oracle_value": oracle,
                "violated": closed > CLASSICAL_BOUND + VIOLATION_EPS,
                "in_window": window[0] < eta < window[1],
            }
        )
    if args.fmt == "json":
        _print_json(rows)
    else:
        _print_csv(
            ["eta", "closed_value", "oracle_value", "violated", "in_window"],
            [[r["eta"], r["closed_value"], r["oracle_value"], r["violated"], r["in_window"]] for r in rows],
        )
    if worst[0] > 0.0:
        print(f"oracle/closed-form disagreement at eta={worst[1]}", file=sys.stderr)
        return 2
    return 0


def cmd_entropy(args) -> int:
    if args.etas is not None:
        etas = _parse_eta_values(args)
    elif args.eta is not None:
        if not 0.0 <= args.eta < 1.0:
            raise ValidationError(f"eta {args.eta} outside [0, 1)")
        etas = [args.eta]
    else:
        raise ValidationError("specify --eta or --etas")
    rows = []
    for eta in etas:
        rho = reduced_density(squeezed_state(eta, args.cutoff))
        p_closed, p_num = purity_closed_squeezed(eta), purity(rho)
        s_closed, s_num = entropy_closed_squeezed(eta), entropy(rho)
        rows.append(
            {
                "eta": eta,
                "purity_closed": p_closed,
                "purity_numeric": p_num,
                "purity_residual": abs(p_num - p_closed),
                "entropy_closed": s_closed,
                "entropy_numeric": s_num,
                "entropy_residual": abs(s_num - s_closed),
                "cutoff": args.cutoff,
            }
        )
    if args.fmt == "csv":
        _print_csv(
            ["eta", "purity_closed", "purity_numeric", "entropy_closed", "entropy_numeric", "cutoff"],
            [
                [r["eta"], r["purity_closed"], r["purity_numeric"], r["entropy_closed"], r["entropy_numeric"], r["cutoff"]]
                for r in rows
            ],
        )
    else:
        _print_json(rows[0] if len(rows) == 1 else rows)
    return 0


def cmd_optimize(args) -> int:
    if args.target == "angles":
        state = _state_from_args(args)
        spec = _pairing_from_args(args, state.dim)
        _print_json(optimize_angles(state, spec).to_json_dict())
    else:
        _print_json(optimize_eta(args.mode).to_json_dict())
    return 0


def cmd_verify_op(args) -> int:
    if args.pseudospin:
        op = pseudospin_bell(args.angle, args.cutoff)
    else:
        if args.dim is None:
            raise ValidationError("--dim is required unless --pseudospin is given")
        op = build_operator(_pairing_from_args(args, args.dim), args.angle)
    payload = verify_bell_operator(op).to_json_dict()
    payload["dim"] = op.dim
    _print_json(payload)
    return 0


def cmd_reproduce_paper(args) -> int:
    rows = reference_rows(
        cutoff=args.cutoff,
        n_property_cases=args.property_cases,
        seed=args.seed,
        angle_perturbation=args.perturb_angles,
    )
    if args.fmt == "json":
        _print_json([r.to_json_dict() for r in rows])
    else:
        for row in rows:
            status = "PASS" if row.passed else "FAIL"
            diff = abs(row.computed - row.expected)
            print(
                f"{status} {row.name:<35} expected={_fmt(row.expected):<18} "
                f"computed={_fmt(row.computed):<18} |diff|={_fmt(diff)} tol={_fmt(row.tol)}"
            )
    failures = [r.name for r in rows if not r.passed]
    if failures:
        print(f"{len(failures)} reference row(s) failed, first: {failures[0]}", file=sys.stderr)
        return 2
    print(f"all {len(rows)} reference rows pass", file=sys.stderr)
    return 0


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bellpair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reps", help="enumerate pairing representations of one dimension")
    p.add_argument("--dim", type=int, required=True)
    _add_format_flags(p, default="csv")
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("chsh", help="CHSH value for a state, pairing, and angles")
    p.add_argument("--state", choices=("maximal", "skewed", "squeezed"), required=True)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--cutoff", type=int, default=64)
    p.add_argument("--pairs", default=None, help="pair count or 'all'")
    p.add_argument("--pair-list", default=None, help="explicit pairs i:j,k:l")
    p.add_argument("--angles", default="canonical", help="'canonical' or a1,a2,b1,b2 in radians")
    p.add_argument("--method", choices=("oracle", "closed", "both"), default="both")
    p.add_argument("--tol", type=float, default=None)
    _add_format_flags(p, default="json")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("sweep-eta", help="sweep the squeezing parameter")
    p.add_argument("--mode", choices=("single_pair", "all_pairs"), required=True)
    p.add_argument("--grid", default="0.05:0.95:19", help="start:stop:count (inclusive linspace)")
    p.add_argument("--etas", default=None, help="explicit comma-separated eta values")
    p.add_argument("--cutoff", type=int, default=64)
    p.add_argument("--tol", type=float, default=None)
    _add_format_flags(p, default="csv")
    p.set_defaults(func=cmd_sweep_eta)

    p = sub.add_parser("entropy", help="purity and entanglement entropy, closed vs numeric")
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--etas", default=None)
    p.add_argument("--cutoff", type=int, default=64)
    _add_format_flags(p, default="json")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("optimize", help="maximize the CHSH value")
    p.add_argument("target", choices=("angles", "eta"))
    p.add_argument("--state", choices=("maximal", "skewed", "squeezed"), default="maximal")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--cutoff", type=int, default=64)
    p.add_argument("--pairs", default=None)
    p.add_argument("--pair-list", default=None)
    p.add_argument("--mode", choices=("single_pair", "all_pairs"), default="single_pair")
    _add_format_flags(p, default="json")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify-op", help="Hermiticity/involution report for an operator")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--pairs", default=None)
    p.add_argument("--pair-list", default=None)
    p.add_argument("--angle", type=float, default=0.0)
    p.add_argument("--pseudospin", action="store_true", help="verify the fully paired pseudospin operator")
    p.add_argument("--cutoff", type=int, default=64)
    _add_format_flags(p, default="json")
    p.set_defaults(func=cmd_verify_op)

    p = sub.add_parser("reproduce-paper", help="re-derive every built-in reference value")
    p.add_argument("--cutoff", type=int, default=64)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--property-cases", type=int, default=1000)
    p.add_argument("--perturb-angles", type=float, default=0.0, help="negative-control angle shift")
    _add_format_flags(p, default="text")
    p.set_defaults(func=cmd_reproduce_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"bellpair: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"bellpair: internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
