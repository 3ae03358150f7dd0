"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 not positive definite,
3 unreadable or malformed input, 4 verification failed or counterexamples
found.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import classify
from .core import DynkinType, QuasiCartanMatrix, bigraph_to_matrix, matrix_to_bigraph
from .errors import InvalidRank, NotPositiveDefinite, ParseError, QuasiCartanError, TooLarge
from .flation import FlationWitness, apply_sequence
from .formats import format_witness, parse_input, parse_witness, serialize, to_dot
from .inflations import canonical_cartan, verify_witness
from .oracle import EnumerationSpec, WalkSpec, differential_test, random_walk

EXIT_OK, EXIT_INTERNAL, EXIT_NOT_PD, EXIT_INPUT, EXIT_FAILED = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> QuasiCartanMatrix:
    return parse_input(_read(path)).matrix()


def cmd_classify(args) -> int:
    result = classify(_load(args.file), structural=not args.inflations)
    for t, how in zip(result.types, result.methods):
        print(t)
        if args.verbose:
            print(f"{t}: {how}", file=sys.stderr)
    return EXIT_OK


def cmd_witness(args) -> int:
    result = classify(_load(args.file), structural=not args.inflations)
    sys.stdout.write(format_witness(result.witness, result.canonical))
    return EXIT_OK


def cmd_verify(args) -> int:
    a_in = _load(args.file)
    wf = parse_witness(_read(args.witness))
    if wf.canonical is None:
        raise InputError("witness file has no C section")
    try:
        _, replayed = apply_sequence(a_in, wf.steps)
    except QuasiCartanError as exc:
        print(f"verify: steps do not replay: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if wf.accumulated is not None and wf.accumulated != replayed.accumulated:
        print("verify: M does not match the product of the steps", file=sys.stderr)
        return EXIT_FAILED
    verdict = verify_witness(a_in, wf.canonical, FlationWitness(wf.steps, replayed.accumulated))
    if not verdict:
        print(f"verify: {verdict.reason}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        base = DynkinType.parse(args.type)
    except InvalidRank as exc:
        raise InputError(str(exc)) from None
    g, witness = random_walk(WalkSpec(base, args.steps, args.seed))
    sys.stdout.write(serialize(g))
    print(f"# witness from the standard {base} matrix")
    for line in format_witness(witness).splitlines():
        print(f"# {line}")
    if args.witness_out:
        Path(args.witness_out).write_text(format_witness(witness, bigraph_to_matrix(g)))
    if args.base_out:
        Path(args.base_out).write_text(serialize(canonical_cartan(base)))
    return EXIT_OK


def cmd_diff(args) -> int:
    spec = EnumerationSpec(args.n, "connected_only" if args.connected else "all")
    try:
        report = differential_test(spec)
    except TooLarge as exc:
        raise InputError(str(exc)) from None
    for line in report.lines():
        print(line)
    print(
        f"n={report.n} connected={report.checked} positive_definite={report.positive_definite} "
        f"disagreements={len(report.disagreements)} "
        + " ".join(f"{k}={v}" for k, v in sorted(report.types.items())),
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_export_dot(args) -> int:
    doc = parse_input(_read(args.file))
    g = doc.payload if doc.kind == "bigraph" else matrix_to_bigraph(doc.payload)
    sys.stdout.write(to_dot(g))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which would read as "not positive definite"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcartan", description="Dynkin types of positive definite quasi-Cartan matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the Dynkin type of each component")
    p.add_argument("file")
    p.add_argument("--inflations", action="store_true", help="skip the structural recognizers")
    p.add_argument("-v", "--verbose", action="store_true", help="report the method used on stderr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="print flation steps, accumulated matrix and canonical matrix")
    p.add_argument("file")
    p.add_argument("--inflations", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check a witness file against an input")
    p.add_argument("file")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="random flation walk from a standard diagram")
    p.add_argument("--type", required=True)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--witness-out", help="also write a witness file (standard matrix -> output)")
    p.add_argument("--base-out", help="also write the standard matrix the witness starts from")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("diff", help="differential test against the inflations method")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("export-dot", help="emit Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotPositiveDefinite as exc:
        print(f"NotPositiveDefinite: {exc}", file=sys.stderr)
        return EXIT_NOT_PD
    except (ParseError, InputError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # contract: 1 for anything unexpected
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
