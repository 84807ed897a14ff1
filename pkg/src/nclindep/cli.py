"""Command-line front end.

Data goes to stdout, diagnostics to stderr; identical arguments and seed
produce byte-identical output.  Exit codes: 0 dependent (or identity
evidence), 1 independent (or witness found), 2 usage error, 3 internal
decider disagreement.

Polynomials are written inline in the text grammar (or @file to read one
from a file); matrices are JSON files, either a single
{"d": ..., "entries": [[...]]} object or {"matrices": [...]} for a tuple.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from .freealg import NcPoly, global_dependence
from .locdep import (
    BoundReport,
    DecideOptions,
    DeciderDisagreementError,
    compute_bounds,
    decide_dependence,
    directional_dependence_sample,
    fock_certify,
    local_dependence_sample,
)
from .matexact import evaluate_poly, mat_tuple_from_json, matrix_to_json
from .parsing import PolyParseError, format_poly, parse_poly
from .scalars import FieldMismatchError, field_from_name
from .specialpoly import (
    capelli_poly,
    central_poly_2x2,
    commutator_embed,
    razmyslov_symbolic_dependence,
    standard_poly,
)
from .verdict import DEPENDENT, INDEPENDENT, NO_WITNESS_FOUND, DependenceVerdict

EXIT_DEPENDENT = 0
EXIT_INDEPENDENT = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3


class CliError(Exception):
    """User-facing error: reported on stderr with exit code 2."""


def _common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", default="rational", metavar="SPEC",
                        help="scalar field: 'rational' (default) or 'prime:P'")
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (default: $NCLINDEP_SEED or 0)")
    parser.add_argument("--trials", type=int, default=50,
                        help="sampler trial count (default 50)")
    parser.add_argument("--entry-bound", type=int, default=5,
                        help="random entries are drawn from [-B, B] (default 5)")
    parser.add_argument("--output", choices=["text", "json"], default="text",
                        help="output format (default text)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclindep",
        description="Linear dependence of polynomials in noncommuting variables: "
        "exact certificates and matrix-local sampling at prescribed sizes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="matrix-size bounds for a family")
    p.add_argument("polys", nargs="+", metavar="POLY")
    _common_options(p)

    p = sub.add_parser("depend", help="dependence verdict by a chosen decider")
    p.add_argument("mode", choices=["global", "fock", "razmyslov", "local", "directional"])
    p.add_argument("polys", nargs="+", metavar="POLY")
    p.add_argument("--size", type=int, default=None, metavar="D",
                   help="matrix size (required for local/directional)")
    _common_options(p)

    p = sub.add_parser("decide", help="full decision report with cross-checks")
    p.add_argument("polys", nargs="+", metavar="POLY")
    p.add_argument("--no-sample", action="store_true",
                   help="skip the local sampling demonstration")
    _common_options(p)

    p = sub.add_parser("eval", help="evaluate a polynomial at a matrix tuple")
    p.add_argument("--at", required=True, metavar="FILE",
                   help="JSON file with the matrix tuple")
    p.add_argument("poly", metavar="POLY")
    _common_options(p)

    p = sub.add_parser("gen", help="print a distinguished polynomial")
    p.add_argument("kind", choices=["st", "capelli", "central"])
    p.add_argument("n", type=int, nargs="?", default=None)
    _common_options(p)

    p = sub.add_parser("embed2", help="rewrite into X1, X2 via iterated commutators")
    p.add_argument("poly", metavar="POLY")
    _common_options(p)

    p = sub.add_parser("pi-check", help="evidence whether a polynomial vanishes on all d x d tuples")
    p.add_argument("--size", type=int, required=True, metavar="D")
    p.add_argument("poly", metavar="POLY")
    _common_options(p)

    return parser


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NCLINDEP_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise CliError(f"NCLINDEP_SEED must be an integer, got {env!r}") from None


def _parse_poly_arg(text: str, field) -> NcPoly:
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliError(f"cannot read polynomial file: {exc}") from None
    try:
        return parse_poly(text, field)
    except PolyParseError as exc:
        raise CliError(f"bad polynomial {text!r}: {exc}") from None


def _parse_family(args, field) -> List[NcPoly]:
    return [_parse_poly_arg(text, field) for text in args.polys]


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _bounds_text(bounds: BoundReport) -> str:
    lines = [
        f"m = {bounds.m}",
        "degs = " + " ".join(str(x) for x in bounds.degs),
        f"beta = {bounds.beta}",
        f"s_local_min = {bounds.s_local_min}",
        f"d_rank = {bounds.d_rank}",
        f"gamma = {bounds.gamma}",
        f"s_dir_min = {bounds.s_dir_min}",
        f"k_max = {bounds.k_max}",
        f"sigma = {bounds.sigma}",
    ]
    return "\n".join(lines)


def _verdict_text(verdict: DependenceVerdict) -> str:
    lines = [f"status: {verdict.status}"]
    if verdict.coefficients is not None:
        lines.append("coefficients: " + " ".join(str(c) for c in verdict.coefficients))
    if verdict.witness is not None:
        for i, mat in enumerate(verdict.witness.mats, start=1):
            rows = "; ".join(
                " ".join(str(x) for x in mat.row(r)) for r in range(mat.d)
            )
            lines.append(f"witness X{i} = [{rows}]")
    if verdict.direction is not None:
        lines.append("direction: " + " ".join(str(x) for x in verdict.direction))
    lines.append(f"trials_used: {verdict.trials_used}")
    if verdict.note:
        lines.append(f"note: {verdict.note}")
    return "\n".join(lines)


def _verdict_exit(verdict: DependenceVerdict) -> int:
    if verdict.status == INDEPENDENT:
        return EXIT_INDEPENDENT
    return EXIT_DEPENDENT  # dependent, or no-witness evidence


def _maybe_bounds(fs) -> Optional[BoundReport]:
    if any(f.is_zero for f in fs):
        return None
    return compute_bounds(fs)


def _cmd_bounds(args, field) -> int:
    fs = _parse_family(args, field)
    bounds = compute_bounds(fs)
    if args.output == "json":
        _emit_json(bounds.to_json())
    else:
        _emit(_bounds_text(bounds))
    return 0


def _cmd_depend(args, field) -> int:
    fs = _parse_family(args, field)
    seed = _resolve_seed(args)
    if args.mode in ("local", "directional"):
        if args.size is None:
            raise CliError(f"depend {args.mode} requires --size")
        sampler = (
            local_dependence_sample if args.mode == "local" else directional_dependence_sample
        )
        verdict = sampler(fs, dim=args.size, trials=args.trials,
                          bound=args.entry_bound, seed=seed)
    elif args.mode == "global":
        verdict = global_dependence(fs)
    elif args.mode == "fock":
        verdict = fock_certify(fs)
    else:
        verdict = razmyslov_symbolic_dependence(fs)
    bounds = _maybe_bounds(fs)
    if args.output == "json":
        _emit_json(verdict.to_json(bounds.to_json() if bounds else None))
    else:
        _emit(_verdict_text(verdict))
    return _verdict_exit(verdict)


def _cmd_decide(args, field) -> int:
    fs = _parse_family(args, field)
    opts = DecideOptions(
        trials=args.trials,
        entry_bound=args.entry_bound,
        seed=_resolve_seed(args),
        run_local_sample=not args.no_sample,
    )
    report = decide_dependence(fs, opts)
    if args.output == "json":
        _emit_json(report.to_json())
    else:
        _emit(_verdict_text(report.verdict))
        if report.bounds is not None:
            _emit(_bounds_text(report.bounds))
        for name in sorted(report.cross_checks):
            _emit(f"cross-check {name}: {report.cross_checks[name]}")
    return _verdict_exit(report.verdict)


def _cmd_eval(args, field) -> int:
    poly = _parse_poly_arg(args.poly, field)
    try:
        with open(args.at, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read matrix file {args.at}: {exc}") from None
    try:
        point = mat_tuple_from_json(obj, field)
        result = evaluate_poly(poly, point)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.output == "json":
        _emit_json(matrix_to_json(result))
    else:
        for i in range(result.d):
            _emit(" ".join(str(x) for x in result.row(i)))
    return 0


def _cmd_gen(args, field) -> int:
    if args.kind == "central":
        if args.n is not None:
            raise CliError("gen central takes no degree argument")
        poly = central_poly_2x2(field)
    else:
        if args.n is None:
            raise CliError(f"gen {args.kind} needs n")
        if args.n < 1:
            raise CliError("n must be >= 1")
        poly = standard_poly(args.n, field) if args.kind == "st" else capelli_poly(args.n, field)
    text = format_poly(poly)
    if args.output == "json":
        _emit_json({"poly": text})
    else:
        _emit(text)
    return 0


def _cmd_embed2(args, field) -> int:
    poly = _parse_poly_arg(args.poly, field)
    text = format_poly(commutator_embed(poly))
    if args.output == "json":
        _emit_json({"poly": text})
    else:
        _emit(text)
    return 0


def _cmd_pi_check(args, field) -> int:
    poly = _parse_poly_arg(args.poly, field)
    verdict = local_dependence_sample(
        [poly], dim=args.size, trials=args.trials,
        bound=args.entry_bound, seed=_resolve_seed(args),
    )
    if verdict.status == INDEPENDENT:
        verdict = DependenceVerdict(
            status=verdict.status,
            witness=verdict.witness,
            trials_used=verdict.trials_used,
            note=f"nonzero evaluation found: not an identity of {args.size}x{args.size} matrices",
        )
    else:
        verdict = DependenceVerdict(
            status=verdict.status,
            trials_used=verdict.trials_used,
            note=f"all {verdict.trials_used} sampled evaluations vanished: "
            f"evidence that the polynomial is an identity of {args.size}x{args.size} matrices",
        )
    if args.output == "json":
        _emit_json(verdict.to_json())
    else:
        _emit(_verdict_text(verdict))
    return _verdict_exit(verdict)


_COMMANDS = {
    "bounds": _cmd_bounds,
    "depend": _cmd_depend,
    "decide": _cmd_decide,
    "eval": _cmd_eval,
    "gen": _cmd_gen,
    "embed2": _cmd_embed2,
    "pi-check": _cmd_pi_check,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        field = field_from_name(args.field)
        return _COMMANDS[args.command](args, field)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FieldMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DeciderDisagreementError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
