"""Command line interface: expand, apply, classify, cm, verify.

Exit codes: 0 ok, 1 verify suite failure, 2 parse error, 3 illegal input,
4 symbolic result disagrees with the decimation oracle.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import documents
from .errors import IllegalParameter, OracleMismatch, ParseError
from .hecke import apply_un
from .hypergeometric import HypSeries, canonicalize, expand
from .multiplicative import classify_cm
from .scalar import parse_scalar
from .series import u_n_numeric
from .spectral import classify_eigen
from .verify import SUITES, run_suite

EXIT_OK, EXIT_SUITE, EXIT_PARSE, EXIT_ILLEGAL, EXIT_ORACLE = 0, 1, 2, 3, 4


def _read_hyp(path: str) -> HypSeries:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
    return documents.loads(text, expect="hypseries")


def _param_list(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    return [parse_scalar(t) for t in text.split(",")]


def cmd_expand(args) -> int:
    h = _read_hyp(args.input)
    sys.stdout.write(documents.dumps(expand(h, args.order)))
    return EXIT_OK


def _decimated(h: HypSeries, n: int, order: int):
    return u_n_numeric(expand(h, n * order + n), n).truncate(order)


def cmd_apply(args) -> int:
    h = _read_hyp(args.input)
    n, K = args.n, args.order
    if args.mode == "numeric":
        sys.stdout.write(documents.dumps(_decimated(h, n, K)))
        return EXIT_OK
    image = apply_un(h, n)
    match = expand(image, K) == _decimated(h, n, K)
    doc = {
        "kind": "apply-result",
        "n": n,
        "mode": "symbolic",
        "result": documents.to_doc(image),
        "canonical": documents.to_doc(canonicalize(image)),
        "verification": {"order": K, "match": match},
    }
    sys.stdout.write(documents.dumps(doc))
    if not match:
        print(f"error: symbolic U_{n} disagrees with coefficient decimation", file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


def cmd_classify(args) -> int:
    h = _read_hyp(args.input)
    sys.stdout.write(documents.dumps(classify_eigen(h)))
    return EXIT_OK


def cmd_cm(args) -> int:
    report = classify_cm(_param_list(args.upper), _param_list(args.lower), args.order)
    sys.stdout.write(documents.dumps(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = EXIT_OK
    for name in names:
        result = run_suite(name, args.seed)
        if result.passed:
            print(f"PASS {name} seed={args.seed} cases={result.cases}")
        else:
            print(f"FAIL {name} seed={args.seed} case={result.cases}: {result.counterexample}")
            status = EXIT_SUITE
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckehyp", description="Hecke operators on exact power series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a hypseries document to a truncated series")
    p.add_argument("input", nargs="?", default="-", help="document path, or - for stdin")
    p.add_argument("--order", type=int, default=10, metavar="K")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("apply", help="apply U_n symbolically or by decimation")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--order", type=int, default=40, metavar="K")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("classify", help="decide whether a hypseries is a U_n eigenfunction")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cm", help="complete multiplicativity of prod (a)_{n-1} / prod (b)_{n-1}")
    p.add_argument("--upper", default="", help="comma separated, e.g. --upper=1,1,1")
    p.add_argument("--lower", default="", help="comma separated, k! is not implied")
    p.add_argument("--order", type=int, default=60, metavar="N", help="number of terms for the pair test")
    p.set_defaults(func=cmd_cm)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("order", "n"):
        value = getattr(args, flag, None)
        if value is not None and value < (1 if flag == "n" else 0):
            print(f"error: --{flag} out of range: {value}", file=sys.stderr)
            return EXIT_ILLEGAL
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IllegalParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ILLEGAL
    except OracleMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
