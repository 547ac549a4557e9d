"""``pqsym`` command line: parkization, expression evaluation, enumeration and verification.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalan, expr, verify
from .errors import PQSymError
from .poset import covers
from .words import (
    enumerate_ndpf,
    enumerate_parking,
    enumerate_prime,
    format_word,
    parkize,
    parse_word,
    standardize,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

ENUMERATORS = {"pf": enumerate_parking, "ndpf": enumerate_ndpf, "prime": enumerate_prime}


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_park(args) -> int:
    trace = parkize(parse_word(args.word))
    payload = {"word": list(trace.word), "park": list(trace.result)}
    lines = [format_word(trace.result)]
    if args.trace:
        payload["trace"] = [{"pivot": d, "word": list(w)} for d, w in trace.rounds]
        lines = [format_word(trace.word)]
        lines += [f"  pivot {d}: {format_word(w)}" for d, w in trace.rounds]
        lines.append(f"= {format_word(trace.result)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_std(args) -> int:
    w = parse_word(args.word)
    s = standardize(w)
    _emit(args, {"word": list(w), "std": list(s)}, [format_word(s)])
    return EXIT_OK


def cmd_eval(args) -> int:
    node = expr.parse(args.expression)
    value = expr.evaluate(node)
    payload = {"expression": expr.to_source(node), "value": expr.value_to_dict(value)}
    lines = [expr.format_value(value)]
    if isinstance(node, expr.Call) and node.name == "project":
        sym = catalan.certify(value)
        payload["s_form"] = sym.s_form()
        payload["j_form"] = sym.j_form()
        lines += [f"S-form: {sym.s_form()}", f"J-form: {sym.j_form()}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    words = ENUMERATORS[args.family](args.n)
    _emit(
        args,
        {"family": args.family, "n": args.n, "count": len(words), "words": [list(w) for w in words]},
        [format_word(w) for w in words],
    )
    return EXIT_OK


def cmd_poset(args) -> int:
    pairs = covers(args.n)
    _emit(
        args,
        {"n": args.n, "covers": [[list(a), list(b)] for a, b in pairs]},
        [f"{format_word(a)} → {format_word(b)}" for a, b in pairs],
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, args.max_n)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name}  [{r.scope}]  {r.seconds:.2f}s"
        if r.counterexample:
            line += f"  counterexample: {r.counterexample}"
        lines.append(line)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(args, {"suite": args.suite, "max_n": args.max_n, "passed": ok, "checks": [r.to_dict() for r in results]}, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def _degree(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    # --json is accepted before or after the subcommand; SUPPRESS keeps the
    # subparser from resetting a flag given at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit structured JSON instead of text")

    parser = argparse.ArgumentParser(prog="pqsym", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit structured JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("park", parents=[common], help="parkize a word")
    p.add_argument("word", help="letters separated by commas, or compact digits")
    p.add_argument("--trace", action="store_true", help="show each decrementing round")
    p.set_defaults(func=cmd_park)

    p = sub.add_parser("std", parents=[common], help="standardize a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_std)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("enumerate", parents=[common], help="list parking functions")
    p.add_argument("family", choices=sorted(ENUMERATORS))
    p.add_argument("--n", type=_degree, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", parents=[common], help="cover relations of the successor order")
    p.add_argument("--n", type=_degree, required=True)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--max-n", type=_degree, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (PQSymError, ValueError) as exc:
        print(f"pqsym: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
