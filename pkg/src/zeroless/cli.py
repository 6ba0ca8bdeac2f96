"""Command line front end: ranks, arithmetic, conversion, tables, DNA.

Every subcommand is a thin shell over the library; results go to stdout
with one final newline. Exit codes: 0 on success, 2 on usage errors,
1 on domain errors (message on stderr).
"""

from __future__ import annotations

import argparse
import os
import sys

from zeroless import arithmetic, conversion, core, genome, tables


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal number") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def _generator_list(text: str) -> tuple:
    try:
        return tuple(int(part, 10) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of digits"
        ) from None


def _alphabet_for(args):
    """Resolve (base, alphabet) from --base/--alphabet and the environment."""
    choice = args.alphabet or os.environ.get("ZEROLESS_ALPHABET")
    base = args.base
    if choice:
        if choice in core.NAMED_ALPHABETS:
            alpha = core.Alphabet.named(choice, base)
            if alpha is None:  # bracket notation carries no symbols
                if base is None:
                    raise ValueError("alphabet 'bracket' needs an explicit --base")
                return base, None
            return alpha.base, alpha
        alpha = core.Alphabet.from_string(choice)
        if base is not None and base != alpha.base:
            raise ValueError(f"--base {base} disagrees with an alphabet of {alpha.base} symbols")
        return alpha.base, alpha
    if base is None:
        base = 10
    return base, core.default_alphabet(base)


def _parse(text, base, alpha):
    return core.parse_lex(text, base, alpha)


def _cmd_encode(args) -> int:
    base, alpha = _alphabet_for(args)
    print(core.format_lex(core.sigma(base, args.value), alpha))
    return 0


def _cmd_decode(args) -> int:
    base, alpha = _alphabet_for(args)
    print(core.omega(_parse(args.numeral, base, alpha)))
    return 0


def _cmd_succ(args) -> int:
    base, alpha = _alphabet_for(args)
    print(core.format_lex(core.successor(_parse(args.numeral, base, alpha)), alpha))
    return 0


def _cmd_pred(args) -> int:
    base, alpha = _alphabet_for(args)
    print(core.format_lex(core.predecessor(_parse(args.numeral, base, alpha)), alpha))
    return 0


def _cmd_add(args) -> int:
    base, alpha = _alphabet_for(args)
    total = arithmetic.add(_parse(args.x, base, alpha), _parse(args.y, base, alpha))
    print(core.format_lex(total, alpha))
    return 0


def _print_trace(trace):
    for step in trace.steps:
        print(step)
    print(f"with-zero: {core.format_zero(trace.intermediate)}")


def _cmd_mul(args) -> int:
    base, alpha = _alphabet_for(args)
    x = _parse(args.x, base, alpha)
    y = _parse(args.y, base, alpha)
    if args.lattice or args.generators is not None or args.trace:
        if args.trace:
            product, trace = arithmetic.lattice_multiply(x, y, args.generators, trace=True)
            _print_trace(trace)
        else:
            product = arithmetic.lattice_multiply(x, y, args.generators)
    else:
        product = arithmetic.multiply(x, y)
    print(core.format_lex(product, alpha))
    return 0


def _cmd_convert(args) -> int:
    base, alpha = _alphabet_for(args)
    if args.to == "zero":
        z = conversion.theta_lex_to_zero(_parse(args.numeral, base, alpha))
        print(core.format_zero(z))
    else:
        z = core.parse_zero(args.numeral, base)
        print(core.format_lex(conversion.theta_zero_to_lex(z), alpha))
    return 0


def _cmd_table(args) -> int:
    base, alpha = _alphabet_for(args)
    if args.op == "add":
        table = tables.build_addition_table(base)
    else:
        table = tables.build_multiplication_table(base)
    if args.machine:
        for line in tables.table_entries(table, alpha):
            print(line)
    else:
        print(tables.render_table(table, alpha))
    return 0


def _cmd_enumerate(args) -> int:
    base, alpha = _alphabet_for(args)
    for n in range(1, args.count + 1):
        print(core.format_lex(core.sigma(base, n), alpha))
    return 0


def _cmd_rank(args) -> int:
    if args.fasta == "-":
        records = genome.read_fasta(sys.stdin, policy=args.policy)
    else:
        records = genome.read_fasta(args.fasta, policy=args.policy)
    for rec in records:
        print(f"{rec.id}\t{genome.rank_sequence(rec.sequence)}")
    return 0


def _cmd_unrank(args) -> int:
    print(genome.unrank_sequence(args.rank))
    return 0


def _add_numeral_options(sub):
    sub.add_argument("--base", "-b", type=int, default=None, help="numeral base k")
    sub.add_argument(
        "--alphabet",
        "-a",
        default=None,
        help="digit symbols: a literal string, or one of "
        + ", ".join(core.NAMED_ALPHABETS)
        + " (default: 1..9,X up to base 10, brackets above; env ZEROLESS_ALPHABET)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeroless",
        description="Zeroless positional numerals: rank, unrank, arithmetic, conversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="write a number as a zeroless numeral")
    _add_numeral_options(p)
    p.add_argument("value", type=_natural, help="decimal number of any size")
    p.set_defaults(run=_cmd_encode)

    p = sub.add_parser("decode", help="read a zeroless numeral back to a number")
    _add_numeral_options(p)
    p.add_argument("numeral")
    p.set_defaults(run=_cmd_decode)

    p = sub.add_parser("succ", help="successor of a zeroless numeral")
    _add_numeral_options(p)
    p.add_argument("numeral")
    p.set_defaults(run=_cmd_succ)

    p = sub.add_parser("pred", help="predecessor of a zeroless numeral")
    _add_numeral_options(p)
    p.add_argument("numeral")
    p.set_defaults(run=_cmd_pred)

    p = sub.add_parser("add", help="add two zeroless numerals")
    _add_numeral_options(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(run=_cmd_add)

    p = sub.add_parser("mul", help="multiply two zeroless numerals")
    _add_numeral_options(p)
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--lattice", action="store_true", help="use column-lattice multiplication")
    p.add_argument(
        "--generators",
        type=_generator_list,
        default=None,
        help="comma-separated digit values for splitting lattice cells (implies --lattice)",
    )
    p.add_argument(
        "--trace",
        action="store_true",
        help="show lattice cells and column sums (implies --lattice)",
    )
    p.set_defaults(run=_cmd_mul)

    p = sub.add_parser("convert", help="rewrite a numeral in the other notation, same value")
    _add_numeral_options(p)
    p.add_argument("--to", choices=("zero", "lex"), required=True, help="target notation")
    p.add_argument("numeral")
    p.set_defaults(run=_cmd_convert)

    p = sub.add_parser("table", help="print a single-digit operation table")
    _add_numeral_options(p)
    p.add_argument("op", choices=("add", "mul"))
    p.add_argument("--machine", action="store_true", help="one tab-separated a, b, result line per entry")
    p.set_defaults(run=_cmd_table)

    p = sub.add_parser("enumerate", help="list numerals in shortlex order, starting at 1")
    _add_numeral_options(p)
    p.add_argument("--count", type=_natural, required=True, help="how many numerals to print")
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("rank", help="rank DNA sequences from a FASTA file")
    p.add_argument("--fasta", default="-", help="FASTA file, or - for stdin (default)")
    p.add_argument(
        "--policy",
        choices=("reject", "skip"),
        default="reject",
        help="what to do with records holding letters outside ACGT",
    )
    p.set_defaults(run=_cmd_rank)

    p = sub.add_parser("unrank", help="DNA sequence of a given rank")
    p.add_argument("rank", type=_natural, help="decimal rank of any size")
    p.set_defaults(run=_cmd_unrank)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
