"""Command line entry point: ``ftopa {tables,enumerate,verify,experiment,eval}``.

Exit status is 0 on success, 1 on a computation or domain error and 2 on
bad usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ftopa.algebra import AlgebraError, AlgebraSpec, make_algebra, parse_idempotents
from ftopa.expr import ExprError, evaluate
from ftopa.inference import KBParseError, load_kb
from ftopa.metrics import TSV_HEADER, format_row, metrics_report
from ftopa.oracle import MAX_SEARCH_N, exhaustive_search
from ftopa.ranges import DomainError, format_belief
from ftopa.report import experiment_text, experiment_tsv, render_tables, run_experiment

EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _spec_from_args(args) -> AlgebraSpec:
    try:
        if args.algebra:
            return AlgebraSpec.parse(args.algebra)
        if args.n is None or args.idempotents is None:
            raise UsageError("give --algebra or both --n and --idempotents")
        return AlgebraSpec(args.n, parse_idempotents(args.idempotents))
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None


def cmd_tables(args) -> int:
    spec = _spec_from_args(args)
    _emit(render_tables(make_algebra(spec)), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    lines = [TSV_HEADER]
    problems = []
    for spec, rec in metrics_report(args.n):
        lines.append(format_row(spec, rec))
        problems += [f"{spec.short}: {p}" for p in rec.check_identities(args.n)]
    lines.append("FAIL: " + "; ".join(problems) if problems else "OK")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_ERROR if problems else EXIT_OK


def cmd_verify(args) -> int:
    n = args.n
    if not 3 <= n <= MAX_SEARCH_N:
        raise UsageError(f"verify supports 3 <= n <= {MAX_SEARCH_N}; got {n}")
    from ftopa.algebra import enumerate_algebras

    found = set(exhaustive_search(n))
    built = {make_algebra(s).product_table for s in enumerate_algebras(n)}
    expected = 2 ** (n - 3)
    ok = found == built and len(found) == expected
    verdict = "PASS" if ok else "FAIL"
    print(f"n={n}: found {len(found)}, expected {expected}, {verdict}")
    if found != built:
        print(f"  searched-only: {len(found - built)}, constructed-only: {len(built - found)}")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_experiment(args) -> int:
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    try:
        kb = load_kb(args.kb)
    except OSError as exc:
        raise UsageError(f"cannot read knowledge base: {exc}") from None
    rep = run_experiment(args.n, kb)
    if args.out:
        Path(args.out).write_text(experiment_tsv(rep))
        sys.stdout.write(experiment_text(rep))
    else:
        sys.stdout.write(experiment_tsv(rep))
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        alg = make_algebra(AlgebraSpec.parse(args.algebra))
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    print(format_belief(evaluate(alg, args.expression)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftopa", description="Finite totally ordered probability algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="print product and solution tables")
    p.add_argument("--n", type=int)
    p.add_argument("--idempotents", help="comma-separated indices, e.g. 1,5,7,8")
    p.add_argument("--algebra", help="short form, e.g. '8:{1,5,7,8}'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("enumerate", help="metrics TSV for every algebra of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive search against the construction")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="smoke/alarm queries over every algebra of size n")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--kb", help="knowledge-base file (default: bundled entries)")
    p.add_argument("--out", help="write the TSV here and print the text view")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("eval", help="evaluate a belief expression")
    p.add_argument("--algebra", required=True, help="e.g. '8:{1,2,3,4,5,6,7,8}'")
    p.add_argument("expression")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ftopa {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KBParseError as exc:
        print(f"ftopa {args.command}: knowledge base {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ExprError, AlgebraError, ValueError) as exc:
        print(f"ftopa {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
