"""Zeroless numerals and their shortlex enumeration.

A zeroless numeral in base k is a string over the digits [1]..[k]; the
empty string denotes zero. Ordered by shortlex (shorter first, then
lexicographic), the nonempty strings enumerate 1, 2, 3, ... and every
natural number has exactly one representation. This module provides the
numeral types, the rank map ``omega`` (string -> position), its inverse
``sigma`` (position -> string), successor/predecessor, and text parsing
and formatting for both the zeroless and the classical with-zero kinds.

Ranks are plain Python ints, so genome-sized values need no special
handling.
"""

from __future__ import annotations

from dataclasses import dataclass

from zeroless import _backend

_DECIMAL_X = "123456789X"  # zeroless decimal ciphers, X = ten
_DECIMAL = "0123456789"
_ACGT = "ACGT"

#: Names accepted wherever an alphabet can be passed by name.
NAMED_ALPHABETS = ("acgt", "decimal-x", "bracket")


@dataclass(frozen=True, slots=True)
class Alphabet:
    """Ordered display symbols for zeroless digits: symbol i means digit i+1.

    An alphabet is only a view used for parsing and formatting; digits are
    stored as integers, so any base works without a symbol table.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be pairwise distinct")
        for s in self.symbols:
            if len(s) != 1 or not s.isprintable() or s.isspace():
                raise ValueError(f"alphabet symbol {s!r} is not a printable character")
            if s in "[]ε":
                raise ValueError(f"alphabet symbol {s!r} collides with numeral syntax")

    @property
    def base(self) -> int:
        return len(self.symbols)

    def value(self, symbol: str) -> int:
        """1-based digit value of a symbol."""
        try:
            return self.symbols.index(symbol) + 1
        except ValueError:
            raise ValueError(f"unknown symbol {symbol!r}") from None

    def symbol(self, value: int) -> str:
        if not 1 <= value <= self.base:
            raise ValueError(f"digit {value} out of range [1, {self.base}]")
        return self.symbols[value - 1]

    @classmethod
    def from_string(cls, symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    @classmethod
    def named(cls, name: str, base: int | None = None) -> "Alphabet | None":
        """Resolve a named alphabet; "bracket" resolves to None (no symbols)."""
        if name == "acgt":
            if base not in (None, 4):
                raise ValueError("alphabet 'acgt' is base 4")
            return cls.from_string(_ACGT)
        if name == "decimal-x":
            k = 10 if base is None else base
            if not 1 <= k <= 10:
                raise ValueError("alphabet 'decimal-x' covers bases 1..10")
            return cls.from_string(_DECIMAL_X[:k])
        if name == "bracket":
            return None
        raise ValueError(f"unknown alphabet name {name!r}")


def default_alphabet(base: int) -> Alphabet | None:
    """Default display symbols for a base: 1..9,X up to base 10, else brackets."""
    if 1 <= base <= 10:
        return Alphabet.from_string(_DECIMAL_X[:base])
    return None


@dataclass(frozen=True, slots=True)
class LexNumeral:
    """Zeroless digit string, most significant first; empty means zero."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 1:
            raise ValueError(f"base must be >= 1, got {self.base}")
        if self.digits and not (1 <= min(self.digits) and max(self.digits) <= self.base):
            raise ValueError(f"digits {self.digits} not all in [1, {self.base}]")

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def is_zero(self) -> bool:
        return not self.digits

    @classmethod
    def zero(cls, base: int) -> "LexNumeral":
        return cls(base, ())

    def __str__(self) -> str:
        return format_lex(self)


@dataclass(frozen=True, slots=True)
class ZeroNumeral:
    """Classical with-zero digit string in canonical form (no leading zero)."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"with-zero base must be >= 2, got {self.base}")
        if not self.digits:
            raise ValueError("with-zero numeral needs at least one digit; zero is (0,)")
        if not (0 <= min(self.digits) and max(self.digits) < self.base):
            raise ValueError(f"digits {self.digits} not all in [0, {self.base - 1}]")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("leading zero: with-zero numerals are canonical")

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)

    @classmethod
    def zero(cls, base: int) -> "ZeroNumeral":
        return cls(base, (0,))

    def __str__(self) -> str:
        return format_zero(self)


def _check_same_base(a, b):
    if a.base != b.base:
        raise ValueError(f"base mismatch: {a.base} != {b.base}")


def shortlex_compare(a: LexNumeral, b: LexNumeral) -> int:
    """-1, 0 or 1: shorter strings first, equal lengths digit-wise."""
    _check_same_base(a, b)
    if len(a.digits) != len(b.digits):
        return -1 if len(a.digits) < len(b.digits) else 1
    if a.digits == b.digits:
        return 0
    return -1 if a.digits < b.digits else 1


def omega(a: LexNumeral) -> int:
    """Shortlex rank of a numeral; the empty numeral ranks 0."""
    if a.base == 1:
        return len(a.digits)  # unary: every digit is 1
    return _backend.horner_value(a.digits, a.base)


def omega_recursive(x: int, a: LexNumeral) -> int:
    """Rank of the numeral x*a via the one-step recurrence x*k^|a| + rank(a).

    Kept as a separately testable form of the prepend rule; it must agree
    with ``omega`` applied to the prepended numeral.
    """
    if not 1 <= x <= a.base:
        raise ValueError(f"digit {x} out of range [1, {a.base}]")
    return x * a.base ** len(a.digits) + omega(a)


def maxlex(k: int, h: int) -> int:
    """Greatest rank representable by strings of length <= h: sum of k^1..k^h."""
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    if h < 0:
        raise ValueError(f"length must be >= 0, got {h}")
    total = 0
    p = 1
    for _ in range(h):
        p *= k
        total += p
    return total


def minlex(k: int, h: int) -> int:
    """Smallest rank with representation length h: sum of k^0..k^(h-1)."""
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    if h < 0:
        raise ValueError(f"length must be >= 0, got {h}")
    total = 0
    p = 1
    for _ in range(h):
        total += p
        p *= k
    return total


def rank_within_length(a: LexNumeral) -> int:
    """Position of a among the strings of its own length (1-based)."""
    if not a.digits:
        raise ValueError("empty numeral has no within-length rank")
    return omega(a) - maxlex(a.base, len(a.digits) - 1)


def lex_length(k: int, n: int) -> int:
    """Representation length of n >= 1: the h with minlex <= n <= maxlex.

    Found by exact integer accumulation of maxlex; boundary values such as
    n == maxlex(k, h) stay exact where a float logarithm would not.
    """
    h, _, _ = _lex_bounds(k, n)
    return h


def _lex_bounds(k, n):
    """(h, k**(h-1), minlex(k, h-1)) for n >= 1."""
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    if n < 1:
        raise ValueError("zero is the empty string; it has no length")
    h = 0
    mx = 0
    p = 1
    while mx < n:
        p *= k
        mx += p
        h += 1
    p //= k
    ml = h - 1 if k == 1 else (p - 1) // (k - 1)
    return h, p, ml


def sigma(k: int, n: int) -> LexNumeral:
    """Zeroless numeral of rank n: the inverse of ``omega``.

    Leading digits are chosen greedily: the digit at the current position
    is the largest m <= k leaving a remainder still representable in the
    remaining length (remainder >= minlex of that length). The scan starts
    at the quotient n // k**(h-1), above which the remainder would go
    negative, and never needs more than one step down because k**(h-1)
    >= minlex(k, h-1).
    """
    if n < 0:
        raise ValueError(f"rank must be >= 0, got {n}")
    if k == 1:
        return LexNumeral(1, (1,) * n)  # unary closed form
    if n == 0:
        return LexNumeral(k, ())
    if n <= k:
        return LexNumeral(k, (n,))
    h, p, ml = _lex_bounds(k, n)
    digits = []
    while h > 1:
        q, r = divmod(n, p)
        if q > k:
            q = k
            r = n - k * p
        while r < ml:
            q -= 1
            r += p
        digits.append(q)
        n = r
        p //= k
        ml -= p
        h -= 1
    digits.append(n)  # 1 <= n <= k at length 1
    return LexNumeral(k, tuple(digits))


def sigma_oracle(k: int, n: int) -> LexNumeral:
    """Independent unranking by modular extraction of the last digit.

    Peels digits right to left via d = (n-1) % k + 1, n <- (n-d) / k.
    Exists purely as a cross-check for ``sigma``; tests assert the two
    agree everywhere.
    """
    if k < 1:
        raise ValueError(f"base must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"rank must be >= 0, got {n}")
    if k == 1:
        return LexNumeral(1, (1,) * n)  # the extraction below degenerates to this
    digits = []
    while n:
        d = (n - 1) % k + 1
        digits.append(d)
        n = (n - d) // k
    digits.reverse()
    return LexNumeral(k, tuple(digits))


def successor(a: LexNumeral) -> LexNumeral:
    """Numeral of rank omega(a) + 1."""
    return LexNumeral(a.base, tuple(_backend.successor_digits(a.digits, a.base)))


def predecessor(a: LexNumeral) -> LexNumeral:
    """Numeral of rank omega(a) - 1; zero has no predecessor."""
    return LexNumeral(a.base, tuple(_backend.predecessor_digits(a.digits, a.base)))


# --- text grammar -----------------------------------------------------------
#
#   numeral := "ε" | cipher+
#   cipher  := alphabet-symbol | "[" decimal-integer "]"
#
# Bracket and symbol ciphers may not be mixed within one numeral.

ZERO_TOKEN = "ε"  # ε


def _scan_brackets(text):
    """Digit values of an all-bracket numeral like "[2][10][9]"."""
    values = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos] != "[":
            raise ValueError(
                f"unexpected character {text[pos]!r} at position {pos}: "
                "bracket and symbol ciphers cannot be mixed"
            )
        end = text.find("]", pos)
        if end < 0:
            raise ValueError(f"unterminated cipher bracket at position {pos}")
        body = text[pos + 1 : end]
        if not body.isdigit():
            raise ValueError(f"cipher bracket {text[pos:end + 1]!r} at position {pos} is not a decimal integer")
        values.append(int(body))
        pos = end + 1
    return values


def _parse_ciphers(text, base, alphabet, low):
    """Digit values of a numeral, each required to lie in [low, base+low-1]."""
    hi = base + low - 1
    if text.startswith("["):
        values = _scan_brackets(text)
        for v in values:
            if not low <= v <= hi:
                raise ValueError(f"cipher [{v}] out of range [{low}, {hi}]")
        return values
    if alphabet is None:
        raise ValueError(
            f"cannot read {text!r}: no alphabet given, so only bracket ciphers are understood"
        )
    index = {s: i + low for i, s in enumerate(alphabet)}
    values = []
    for pos, ch in enumerate(text):
        if ch == "[":
            raise ValueError(
                f"unexpected character '[' at position {pos}: "
                "bracket and symbol ciphers cannot be mixed"
            )
        try:
            values.append(index[ch])
        except KeyError:
            raise ValueError(f"unknown symbol {ch!r} at position {pos}") from None
    return values


def parse_lex(text: str, base: int | None = None, alphabet: Alphabet | None = None) -> LexNumeral:
    """Read a zeroless numeral; "ε" and "" denote zero.

    Without an alphabet only bracket ciphers are accepted, and the base
    must be given explicitly.
    """
    if alphabet is not None:
        if base is not None and base != alphabet.base:
            raise ValueError(f"base {base} disagrees with alphabet of size {alphabet.base}")
        base = alphabet.base
    if base is None:
        raise ValueError("parsing needs a base or an alphabet")
    if text == ZERO_TOKEN or text == "":
        return LexNumeral(base, ())
    symbols = alphabet.symbols if alphabet is not None else None
    return LexNumeral(base, tuple(_parse_ciphers(text, base, symbols, 1)))


def format_lex(a: LexNumeral, alphabet: Alphabet | None = None) -> str:
    """Render a zeroless numeral; zero renders as "ε"."""
    if not a.digits:
        return ZERO_TOKEN
    if alphabet is None:
        return "".join(f"[{d}]" for d in a.digits)
    if alphabet.base != a.base:
        raise ValueError(f"alphabet of size {alphabet.base} cannot render base {a.base}")
    return "".join(alphabet.symbols[d - 1] for d in a.digits)


def parse_zero(text: str, base: int | None = None, symbols: str | None = None) -> ZeroNumeral:
    """Read a canonical with-zero numeral.

    ``symbols`` maps digit value i to symbols[i]; bases up to 10 default
    to '0'..'9', larger bases to bracket ciphers.
    """
    if symbols is not None:
        if base is not None and base != len(symbols):
            raise ValueError(f"base {base} disagrees with symbol set of size {len(symbols)}")
        base = len(symbols)
    if base is None:
        raise ValueError("parsing needs a base or a symbol set")
    if symbols is None and base <= 10:
        symbols = _DECIMAL[:base]
    return ZeroNumeral(base, tuple(_parse_ciphers(text, base, symbols, 0)))


def format_zero(a: ZeroNumeral, symbols: str | None = None) -> str:
    """Render a with-zero numeral with digit symbols or bracket ciphers."""
    if symbols is None and a.base <= 10:
        symbols = _DECIMAL[: a.base]
    if symbols is None:
        return "".join(f"[{d}]" for d in a.digits)
    if len(symbols) != a.base:
        raise ValueError(f"symbol set of size {len(symbols)} cannot render base {a.base}")
    return "".join(symbols[d] for d in a.digits)
