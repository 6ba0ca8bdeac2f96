import itertools
import sys

import pytest

# genome-scale ranks have far more digits than the default int/str limit
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def shortlex_tuples(k, max_len):
    """Brute-force shortlex enumeration of digit tuples, starting at ()."""
    yield ()
    for length in range(1, max_len + 1):
        yield from itertools.product(range(1, k + 1), repeat=length)


@pytest.fixture
def acgt():
    from zeroless import Alphabet

    return Alphabet.named("acgt")


@pytest.fixture
def decimal_x():
    from zeroless import Alphabet

    return Alphabet.named("decimal-x")
