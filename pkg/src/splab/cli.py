"""Command line surface.

Exit codes: 0 success, 1 a verification suite found a counterexample,
2 malformed input, 3 unknown verification suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .shapes import SkewShape, strict_partitions
from .tableaux import (
    ParseError,
    ShiftedTableau,
    enumerate_tableaux,
    parse_tableau,
    print_tableau,
    standardize,
)
from .insertion import mixed_insert_word
from .mixed_jdt import mixed_rectify
from .saganworley import (
    rectification_counter,
    skew_plactic_schur_p,
    sw_rectify,
)
from .symfunc import shifted_lr_coeffs
from .verify import SUITE_NAMES, run_suite


class InputError(ValueError):
    pass


def _parse_word(tokens: list[str]) -> tuple[int, ...]:
    flat = []
    for token in tokens:
        flat.extend(t for t in token.replace(",", " ").split() if t)
    try:
        word = tuple(int(t) for t in flat)
    except ValueError as exc:
        raise InputError(f"bad word: {exc}") from None
    if any(x < 1 for x in word):
        raise InputError("word letters must be positive")
    return word


def _parse_shape(text: str) -> SkewShape:
    try:
        return SkewShape.from_text(text)
    except ValueError as exc:
        raise InputError(f"bad shape {text!r}: {exc}") from None


def _read_tableau(path: str) -> ShiftedTableau:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse_tableau(text)


def _emit_tableau(tableau: ShiftedTableau, as_json: bool) -> None:
    if as_json:
        print(json.dumps(print_tableau(tableau).splitlines(), sort_keys=True))
    else:
        text = print_tableau(tableau)
        if text:
            print(text)


def _inline(tableau: ShiftedTableau) -> str:
    return " / ".join(print_tableau(tableau).splitlines())


def _fmt_coeff(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    k = value.denominator.bit_length() - 1
    return f"{value.numerator}/2^{k}"


def cmd_insert(args) -> int:
    word = _parse_word(args.letters)
    _emit_tableau(mixed_insert_word(word), args.json)
    return 0


def cmd_enumerate(args) -> int:
    shape = _parse_shape(args.shape)
    tableaux = list(enumerate_tableaux(shape, args.n, args.mode))
    if args.json:
        print(
            json.dumps(
                [print_tableau(t).splitlines() for t in tableaux], sort_keys=True
            )
        )
    else:
        for k, tableau in enumerate(tableaux):
            if k:
                print()
            print(print_tableau(tableau))
    return 0


def cmd_standardize(args) -> int:
    _emit_tableau(standardize(_read_tableau(args.file)), args.json)
    return 0


def cmd_rectify_mixed(args) -> int:
    trace: list = []
    result = mixed_rectify(_read_tableau(args.file), trace=trace)
    if args.trace:
        for event in trace:
            print(event)
    _emit_tableau(result, args.json)
    return 0


def cmd_rectify_sw(args) -> int:
    _emit_tableau(sw_rectify(_read_tableau(args.file)), args.json)
    return 0


def cmd_expand_skew(args) -> int:
    shape = _parse_shape(args.shape)
    coeffs = shifted_lr_coeffs(shape.outer, shape.inner)
    ordered = sorted(coeffs.items(), reverse=True)
    if args.json:
        payload = [
            {"shape": list(lam), "coeff": c} for lam, c in ordered
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        for lam, coeff in ordered:
            print(f"{','.join(map(str, lam))}\t{coeff}")
    if args.check_sw:
        failures = 0
        counter = rectification_counter(shape, args.n)
        for lam in strict_partitions(shape.size):
            expected = coeffs.get(lam, 0)
            ok = all(
                counter.get(t, 0) == expected
                for t in enumerate_tableaux(SkewShape(lam), args.n, "qtableau")
            )
            failures += 0 if ok else 1
            print(f"{','.join(map(str, lam)) or '-'}\t{'PASS' if ok else 'FAIL'}")
        return 1 if failures else 0
    return 0


def cmd_plactic_skew(args) -> int:
    shape = _parse_shape(args.shape)
    total = skew_plactic_schur_p(shape, args.n)
    ordered = sorted(total.items(), key=lambda kv: print_tableau(kv[0]))
    if args.json:
        payload = [
            {
                "tableau": print_tableau(t).splitlines(),
                "coeff": {"num": c.numerator, "den": c.denominator},
            }
            for t, c in ordered
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        for tableau, coeff in ordered:
            print(f"{_inline(tableau)}\t{_fmt_coeff(coeff)}")
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITE_NAMES:
        print(f"unknown suite {args.suite!r}; choices: {', '.join(SUITE_NAMES)}",
              file=sys.stderr)
        return 3
    for name in ("n", "len", "max_size", "jobs"):
        value = getattr(args, name)
        if value is not None and value < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")
    result = run_suite(
        args.suite,
        n=args.n,
        max_len=args.len,
        max_size=args.max_size,
        jobs=args.jobs,
    )
    if args.json:
        print(json.dumps(result.to_dict(), sort_keys=True))
    else:
        print(f"tested {result.tested}, failed {result.failed}")
        if result.counterexample is not None:
            print(result.counterexample)
    return 0 if result.failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splab",
        description="Shifted tableaux: insertion, jeu de taquin, and P-function expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="mixed insertion of a word")
    p.add_argument("letters", nargs="*")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("enumerate", help="stream tableaux of a shape")
    p.add_argument("shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("semistandard", "qtableau"),
                   default="semistandard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("standardize", help="standardize a tableau file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("rectify-mixed", help="mixed jeu de taquin rectification")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rectify_mixed)

    p = sub.add_parser("rectify-sw", help="Sagan-Worley rectification")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rectify_sw)

    p = sub.add_parser("expand-skew", help="skew P polynomial in the P basis")
    p.add_argument("shape")
    p.add_argument("--check-sw", action="store_true",
                   help="cross check against rectification counts")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand_skew)

    p = sub.add_parser("plactic-skew", help="skew plactic P-function classes")
    p.add_argument("shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plactic_skew)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite")
    p.add_argument("--n", type=int)
    p.add_argument("--len", type=int)
    p.add_argument("--max-size", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
