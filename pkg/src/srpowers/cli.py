"""Command-line front end: ``srpowers invariants|classify|verify|table``.

Exit status is 0 on success, 1 when a comparison finds a mismatch and 2 on
bad input. Reports go to stdout; the verify wall time goes to stderr so that
stdout is byte-identical across worker counts.
"""

from __future__ import annotations

import argparse
import sys

from .harness import (
    Method,
    VerifyConfig,
    _aligned,
    _csv,
    ai_rows,
    parse_graph,
    run_classify,
    run_invariants,
    run_verify,
)
from .values import InputError

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srpowers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariants", help="a_1, a_2, g-reg, reg of symbolic powers, CM flag")
    q.add_argument("--graph", required=True, help="JSON graph or edge-list file")
    q.add_argument("--n-max", type=_positive, default=3)
    q.add_argument("--method", choices=[m.value for m in Method], default="both")
    q.add_argument("--out", choices=["table", "csv"], default="table")
    q.add_argument("--corrected", action="store_true",
                   help="use the corrected C1 row and CM list")

    q = sub.add_parser("classify", help="graph profile, condition class and matroid tests")
    q.add_argument("--graph", required=True)

    q = sub.add_parser("verify", help="exhaustive formula-versus-oracle sweep")
    q.add_argument("--max-vertices", type=_positive, default=4)
    q.add_argument("--max-n", type=_positive, default=2)
    q.add_argument("--isolated", action="store_true", help="include graphs with isolated vertices")
    q.add_argument("--workers", type=_positive, default=1)
    q.add_argument("--dedupe", action="store_true", help="one graph per isomorphism class")
    q.add_argument("--corrected", action="store_true")
    q.add_argument("--out", choices=["csv", "json"], default="csv")

    q = sub.add_parser("table", help="oracle a_i of ordinary and symbolic powers")
    q.add_argument("--graph", required=True)
    q.add_argument("--n-max", type=_positive, default=3)
    q.add_argument("--out", choices=["table", "csv"], default="csv")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        if args.command == "invariants":
            table = run_invariants(parse_graph(args.graph), args.n_max, args.method, args.corrected)
            sys.stdout.write(table.render(args.out))
            return EXIT_MISMATCH if table.mismatches() else EXIT_OK
        if args.command == "classify":
            sys.stdout.write(run_classify(parse_graph(args.graph)).render())
            return EXIT_OK
        if args.command == "verify":
            config = VerifyConfig(args.max_vertices, args.max_n, args.isolated,
                                  args.workers, args.dedupe, args.corrected)
            report = run_verify(config)
            sys.stdout.write(report.render(args.out))
            print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
            return EXIT_MISMATCH if report.mismatches else EXIT_OK
        head, rows = ai_rows(parse_graph(args.graph), args.n_max)
        sys.stdout.write(_csv([head] + rows) if args.out == "csv" else _aligned([head] + rows))
        return EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
