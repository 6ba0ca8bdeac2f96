"""Value-preserving conversion between zeroless and with-zero numerals.

The two directions are single digit sweeps. Going to with-zero, every
digit k becomes 0 with a carry into the next position; going to
zeroless, every 0 borrows from the next position and becomes k, and a
leading digit that empties out is dropped. Both directions preserve the
represented value exactly and are mutually inverse on canonical forms.
"""

from __future__ import annotations

from zeroless import _backend
from zeroless.core import LexNumeral, ZeroNumeral


def omega_zero(z: ZeroNumeral) -> int:
    """Value of a with-zero numeral (ordinary radix evaluation)."""
    return _backend.horner_value(z.digits, z.base)


def delta(k: int, n: int) -> ZeroNumeral:
    """Canonical with-zero numeral of a value n >= 0."""
    if n < 0:
        raise ValueError(f"value must be >= 0, got {n}")
    if k < 2:
        raise ValueError(f"with-zero base must be >= 2, got {k}")
    if n == 0:
        return ZeroNumeral.zero(k)
    digits = []
    while n:
        n, d = divmod(n, k)
        digits.append(d)
    return ZeroNumeral(k, tuple(reversed(digits)))


def theta_lex_to_zero(a: LexNumeral) -> ZeroNumeral:
    """With-zero numeral of the same value as a zeroless numeral."""
    if a.base < 2:
        raise ValueError("with-zero notation needs a base >= 2")
    return ZeroNumeral(a.base, tuple(_backend.lex_to_zero_digits(a.digits, a.base)))


def theta_zero_to_lex(z: ZeroNumeral) -> LexNumeral:
    """Zeroless numeral of the same value as a with-zero numeral."""
    return LexNumeral(z.base, tuple(_backend.zero_to_lex_digits(z.digits, z.base)))
