"""Command-line interface: ``hyperoct <command> ...``.

Exit status is 0 on success, 1 on usage errors, 2 on domain errors (bad digit,
rank out of range, malformed window word) and 3 when ``selftest`` finds a
disagreement.
"""

import argparse
import re
import sys

from . import numeral, oracle, rankcodec, sigperm
from .errors import HyperoctError, RankOutOfRangeError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _decimal(text: str) -> int:
    s = text.strip()
    if not s.isascii() or not s.isdigit():
        raise HyperoctError(f"not a non-negative decimal integer: {text!r}")
    return int(s)


def cmd_convert(args, out):
    if args.to_hyper:
        h = numeral.from_integer(_decimal(args.value))
        style = numeral.COMPACT if args.compact else numeral.COLON
        print(numeral.format_numeral(h, style), file=out)
    else:
        print(numeral.to_integer(numeral.parse(args.value)), file=out)


def cmd_code(args, out):
    p = sigperm.parse_window(args.window)
    print(numeral.format_numeral(rankcodec.code_numeral(p)), file=out)


def cmd_rank(args, out):
    print(rankcodec.rank(sigperm.parse_window(args.window)), file=out)


def cmd_unrank(args, out):
    p = rankcodec.unrank(_decimal(args.k), args.n)
    print(sigperm.format_window(p), file=out)


def format_row(k, p) -> str:
    """One line of the enumeration table: rank, window word, code."""
    code = numeral.format_numeral(rankcodec.code_numeral(p))
    return f"{k}  {sigperm.format_window(p)}  {code}"


def cmd_enumerate(args, out):
    top = rankcodec.order(args.n)
    lo = 1 if args.lo is None else args.lo
    hi = top if args.hi is None else args.hi
    for k in (lo, hi):
        if not 1 <= k <= top:
            raise RankOutOfRangeError(k, top)
    digits = numeral.from_integer(lo - 1, width=args.n)
    for k in range(lo, hi + 1):
        p = rankcodec.unrank_numeral(digits).result
        print(format_row(k, p), file=out)
        digits = numeral.successor(digits)


def selftest_checks(max_n: int):
    """Yield ``(label, ok)`` for every oracle-agreement check up to degree ``max_n``."""
    for n in range(max_n + 1):
        group = oracle.sorted_group(n)
        yield (
            f"n={n} rank agrees with brute-force order ({len(group)} elements)",
            all(rankcodec.rank(p) == oracle.reference_rank(p) for p in group),
        )
        yield (
            f"n={n} unrank reproduces sorted enumeration",
            all(rankcodec.unrank(k, n) == p for k, p in enumerate(group, start=1)),
        )
        yield (
            f"n={n} counting and root-system inversions agree",
            all(sigperm.code(p) == sigperm.code_by_roots(p) for p in group),
        )
        yield (
            f"n={n} numeral round trip on 0..{len(group) - 1}",
            all(numeral.to_integer(numeral.from_integer(v)) == v for v in range(len(group))),
        )


def cmd_selftest(args, out):
    if args.n < 0 or args.n > oracle.DEFAULT_GUARD:
        raise HyperoctError(f"selftest degree must lie in 0..{oracle.DEFAULT_GUARD}, got {args.n}")
    failed = 0
    total = 0
    for label, ok in selftest_checks(args.n):
        total += 1
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {label}", file=out)
    print(f"{total - failed}/{total} checks passed", file=out)
    return EXIT_SELFTEST if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperoct", description="Hyperoctahedral numerals and signed permutation ranks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert between decimal and hyperoctahedral numerals")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to-hyper", action="store_true", help="decimal -> numeral")
    mode.add_argument("--to-dec", action="store_true", help="numeral -> decimal")
    p.add_argument("--compact", action="store_true", help="print digits without colons (all digits <= 9)")
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("code", help="print inv_1:...:inv_n of a window word")
    p.add_argument("window")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("rank", help="rank of a window word in B_n")
    p.add_argument("window")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="window word of rank k in B_n")
    p.add_argument("k")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("enumerate", help="list rank, window word and code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", help="check ranking against brute-force enumeration")
    p.add_argument("--n", type=int, default=4, help="largest degree to check (default 4)")
    p.set_defaults(func=cmd_selftest)
    return parser


# "-1,-2,-3" would otherwise be taken for an option
_WINDOW_LIKE = re.compile(r"-[0-9]+(?:[\s,]+[+-]?[0-9]+)+")


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    argv = [" " + a if _WINDOW_LIKE.fullmatch(a) else a for a in argv]
    args = build_parser().parse_args(argv)
    if getattr(args, "n", 0) < 0 and args.command in ("unrank", "enumerate"):
        print(f"hyperoct: error: degree must be non-negative, got {args.n}", file=err)
        return EXIT_DOMAIN
    try:
        status = args.func(args, out)
    except HyperoctError as exc:
        print(f"hyperoct: error: {exc}", file=err)
        return EXIT_DOMAIN
    return EXIT_OK if status is None else status


def main():
    try:
        sys.exit(run())
    except BrokenPipeError:
        sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
