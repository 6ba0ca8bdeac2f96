"""Arithmetic on zeroless numerals, including lattice multiplication.

The plain operations work digit-wise on the zeroless strings themselves;
no value is ever converted to another notation on the way. Lattice
multiplication is the exception by design: its per-cell products are
collected in with-zero columns, summed with ordinary carries, and the
finished intermediate is rewritten as a zeroless string at the very end.
Cells whose digit products are inconvenient to know by heart can be
split over a set of generator digits; the partial products then land in
the same columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from zeroless import _backend
from zeroless.core import LexNumeral, ZeroNumeral


def _check_same_base(a, b):
    if a.base != b.base:
        raise ValueError(f"base mismatch: {a.base} != {b.base}")


def add(a: LexNumeral, b: LexNumeral) -> LexNumeral:
    """Sum of two zeroless numerals, computed digit-wise."""
    _check_same_base(a, b)
    return LexNumeral(a.base, tuple(_backend.add_digits(a.digits, b.digits, a.base)))


def scale(a: LexNumeral, d: int) -> LexNumeral:
    """Product of a zeroless numeral with a single digit d in [1, base]."""
    if not 1 <= d <= a.base:
        raise ValueError(f"digit {d} out of range [1, {a.base}]")
    if a.is_zero:
        return a
    return LexNumeral(a.base, tuple(_backend.scale_digits(a.digits, d, a.base)))


def multiply_by_base(a: LexNumeral) -> LexNumeral:
    """One-position shift: predecessor digits with the base digit appended."""
    return LexNumeral(a.base, tuple(_backend.multiply_by_base_digits(a.digits, a.base)))


def multiply(a: LexNumeral, b: LexNumeral) -> LexNumeral:
    """Schoolbook product of two zeroless numerals."""
    _check_same_base(a, b)
    return LexNumeral(a.base, tuple(_backend.multiply_digits(a.digits, b.digits, a.base)))


@dataclass(frozen=True, slots=True)
class LatticeTrace:
    """Everything the lattice wrote down before the final rewrite.

    ``columns`` lists the collected entries per column, most significant
    column first; ``steps`` narrates the run (entries placed, carries
    appended, columns summed), with columns numbered 1 upward from the
    least significant; ``intermediate`` is the canonical with-zero
    numeral left after the column sums.
    """

    columns: tuple[tuple[int, ...], ...]
    steps: tuple[str, ...]
    intermediate: ZeroNumeral


def _greedy_parts(value: int, generators: tuple) -> list | None:
    """Largest-first decomposition of value into a sum of generators."""
    parts = []
    rest = value
    for g in generators:
        while g <= rest:
            parts.append(g)
            rest -= g
    return parts if rest == 0 else None


def _cell_products(xd: int, yd: int, generators: tuple) -> tuple:
    """(left, right, product) triples a single cell contributes."""
    if not generators or xd in generators or yd in generators:
        return ((xd, yd, xd * yd),)
    parts = _greedy_parts(yd, generators)
    if parts is not None:
        return tuple((xd, g, xd * g) for g in parts)
    parts = _greedy_parts(xd, generators)
    if parts is not None:
        return tuple((g, yd, g * yd) for g in parts)
    raise ValueError(
        f"cell {xd} x {yd}: neither digit decomposes into generators {sorted(generators)}"
    )


def lattice_multiply(x: LexNumeral, y: LexNumeral, generators=None, trace: bool = False):
    """Product of two zeroless numerals via the lattice of digit products.

    Every cell (i, j) sends the low part of its product to column i + j
    and the overflow to column i + j + 1; the columns are summed right to
    left with ordinary carries and the resulting with-zero numeral is
    rewritten as a zeroless string. ``generators`` restricts which digit
    products the cells may use (None allows them all; an explicit empty
    set is an error). With ``trace=True`` the return value is a
    (result, LatticeTrace) pair instead of the bare result.
    """
    _check_same_base(x, y)
    k = x.base
    if k < 2:
        raise ValueError("lattice multiplication needs a base >= 2")
    if generators is None:
        gens = ()
    else:
        gens = tuple(sorted(set(generators), reverse=True))
        if not gens:
            raise ValueError("generator set must not be empty")
    for g in gens:
        if not 1 <= g <= k:
            raise ValueError(f"generator {g} out of range [1, {k}]")
    if x.is_zero or y.is_zero:
        result = LexNumeral.zero(k)
        if trace:
            return result, LatticeTrace((), (), ZeroNumeral.zero(k))
        return result
    m, n = len(x.digits), len(y.digits)
    columns = [[] for _ in range(m + n)]
    steps = []
    for i, xd in enumerate(x.digits):
        for j, yd in enumerate(y.digits):
            c = (m - 1 - i) + (n - 1 - j)
            for a, b, p in _cell_products(xd, yd, gens):
                columns[c].append(p % k)
                columns[c + 1].append(p // k)
                if trace:
                    steps.append(
                        f"cell ({i + 1},{j + 1}): {a}*{b} = {p}, "
                        f"digit {p % k} in column {c + 1}, carry {p // k} to column {c + 2}"
                    )
    digits = []
    carry = 0
    for c, col in enumerate(columns):
        total = sum(col) + carry
        previous = carry
        carry, d = divmod(total, k)
        digits.append(d)
        if trace:
            shown = "+".join(str(e) for e in col) if col else "0"
            steps.append(
                f"column {c + 1}: {shown} + carry {previous} = {total}"
                f" -> digit {d}, carry {carry}"
            )
    while carry:
        carry, d = divmod(carry, k)
        digits.append(d)
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    zero_msf = digits[::-1]
    result = LexNumeral(k, tuple(_backend.zero_to_lex_digits(zero_msf, k)))
    if not trace:
        return result
    full_trace = LatticeTrace(
        tuple(tuple(col) for col in reversed(columns)),
        tuple(steps),
        ZeroNumeral(k, tuple(zero_msf)),
    )
    return result, full_trace
