"""Single-digit operation tables for zeroless arithmetic.

The tables are not computed by ranking. Each one is obtained from the
classical with-zero table by rewriting every entry with the value-
preserving borrow sweep (so trailing zeros disappear into the digit k)
and then extending it with a row and column for the digit k itself,
which classical tables do not have. Tests check the result against the
rank maps independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from zeroless._backend import zero_to_lex_digits
from zeroless.core import Alphabet, LexNumeral, default_alphabet, format_lex

_OP_SYMBOL = {"addition": "+", "multiplication": "*"}


@dataclass(frozen=True, slots=True)
class OpTable:
    """Zeroless digit-pair results for one operation in one base."""

    kind: str
    base: int
    entries: dict[tuple[int, int], tuple[int, ...]]

    def __post_init__(self):
        if self.kind not in _OP_SYMBOL:
            raise ValueError(f"unknown table kind {self.kind!r}")

    def entry(self, a: int, b: int) -> tuple[int, ...]:
        """Result digits for the pair (a, b), most significant first."""
        try:
            return self.entries[(a, b)]
        except KeyError:
            raise ValueError(f"digit pair ({a}, {b}) outside base {self.base}") from None

    def result(self, a: int, b: int) -> LexNumeral:
        return LexNumeral(self.base, self.entry(a, b))

    @property
    def symbol(self) -> str:
        return _OP_SYMBOL[self.kind]


def _classical_digits(value: int, k: int) -> list:
    """With-zero digits of value >= 0, most significant first."""
    if value == 0:
        return [0]
    out = []
    while value:
        out.append(value % k)
        value //= k
    out.reverse()
    return out


@lru_cache(maxsize=None)
def build_addition_table(k: int) -> OpTable:
    """Digit sums 1..k by 1..k as zeroless strings; cached per base."""
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    entries = {}
    for a in range(1, k):
        for b in range(1, k):
            zero_form = _classical_digits(a + b, k)
            entries[(a, b)] = tuple(zero_to_lex_digits(zero_form, k))
    for j in range(1, k + 1):
        # the digit k has no classical counterpart: j + k rolls over to [1][j]
        entries[(j, k)] = (1, j)
        entries[(k, j)] = (1, j)
    return OpTable("addition", k, entries)


@lru_cache(maxsize=None)
def build_multiplication_table(k: int) -> OpTable:
    """Digit products 1..k by 1..k as zeroless strings; cached per base."""
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    entries = {}
    for a in range(1, k):
        for b in range(1, k):
            zero_form = _classical_digits(a * b, k)
            entries[(a, b)] = tuple(zero_to_lex_digits(zero_form, k))
    for j in range(1, k + 1):
        # j * k = (j-1) shifted once, then the digit k; for j = 1 just [k]
        product = (j - 1, k) if j > 1 else (k,)
        entries[(j, k)] = product
        entries[(k, j)] = product
    return OpTable("multiplication", k, entries)


def render_table(table: OpTable, alphabet: Alphabet | None = None) -> str:
    """Human-readable operation grid, row digit first."""
    if alphabet is None:
        alphabet = default_alphabet(table.base)
    k = table.base

    def cell(digits):
        return format_lex(LexNumeral(k, tuple(digits)), alphabet)

    labels = [cell((d,)) for d in range(1, k + 1)]
    grid = [[cell(table.entries[(a, b)]) for b in range(1, k + 1)] for a in range(1, k + 1)]
    widths = [max(len(labels[j]), max(len(row[j]) for row in grid)) for j in range(k)]
    head_w = max(len(table.symbol), max(len(s) for s in labels))
    lines = []
    header = [table.symbol.rjust(head_w)] + [labels[j].rjust(widths[j]) for j in range(k)]
    lines.append("  ".join(header).rstrip())
    for i in range(k):
        row = [labels[i].rjust(head_w)] + [grid[i][j].rjust(widths[j]) for j in range(k)]
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)


def table_entries(table: OpTable, alphabet: Alphabet | None = None) -> list:
    """Machine-oriented tab-delimited lines "a<TAB>b<TAB>result", row-major."""
    if alphabet is None:
        alphabet = default_alphabet(table.base)
    k = table.base
    lines = []
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            left = format_lex(LexNumeral(k, (a,)), alphabet)
            right = format_lex(LexNumeral(k, (b,)), alphabet)
            res = format_lex(LexNumeral(k, table.entries[(a, b)]), alphabet)
            lines.append(f"{left}\t{right}\t{res}")
    return lines
