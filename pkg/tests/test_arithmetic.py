import pytest
from hypothesis import given, strategies as st

from zeroless import (
    LexNumeral,
    ZeroNumeral,
    add,
    build_addition_table,
    build_multiplication_table,
    lattice_multiply,
    multiply,
    multiply_by_base,
    omega,
    omega_zero,
    parse_lex,
    scale,
    sigma,
)
from zeroless.arithmetic import LatticeTrace
from zeroless.core import default_alphabet


def dx(text):
    """Parse a base-10 numeral over the 1..9, X alphabet."""
    return parse_lex(text, alphabet=default_alphabet(10))


@st.composite
def numeral(draw, min_base=1, max_base=60, max_len=12):
    k = draw(st.integers(min_base, max_base))
    digits = draw(st.lists(st.integers(1, k), max_size=max_len))
    return LexNumeral(k, tuple(digits))


@st.composite
def numeral_pair(draw, min_base=1, max_base=60, max_len=12):
    k = draw(st.integers(min_base, max_base))
    digits = st.lists(st.integers(1, k), max_size=max_len)
    a = LexNumeral(k, tuple(draw(digits)))
    b = LexNumeral(k, tuple(draw(digits)))
    return a, b


class TestAdd:
    def test_dna_sum(self, acgt):
        a = parse_lex("CAT", alphabet=acgt)
        b = parse_lex("GATT", alphabet=acgt)
        total = add(a, b)
        assert total == parse_lex("GTCT", alphabet=acgt)
        assert omega(total) == 268

    def test_zero_is_identity(self):
        x = dx("423")
        zero = LexNumeral.zero(10)
        assert add(x, zero) == x
        assert add(zero, x) == x
        assert add(zero, zero) == zero

    def test_binary_rollover(self):
        two = parse_lex("[2]", base=2)
        assert add(two, two).digits == (1, 2)

    def test_unary_concatenates(self):
        a = LexNumeral(1, (1, 1))
        b = LexNumeral(1, (1, 1, 1))
        assert add(a, b).digits == (1,) * 5

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            add(LexNumeral(2, (1,)), LexNumeral(3, (1,)))

    @given(numeral_pair())
    def test_value_morphism(self, pair):
        a, b = pair
        assert omega(add(a, b)) == omega(a) + omega(b)

    @given(numeral_pair(min_base=2))
    def test_carries_stay_small(self, pair):
        a, b = pair
        k = a.base
        ra, rb = a.digits[::-1], b.digits[::-1]
        carry = 0
        for i in range(max(len(ra), len(rb))):
            s = (ra[i] if i < len(ra) else 0) + (rb[i] if i < len(rb) else 0) + carry
            carry = (s - 1) // k
            assert 0 <= carry <= 2

    @pytest.mark.parametrize("k", [2, 4, 10])
    def test_single_digits_match_table(self, k):
        table = build_addition_table(k)
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                got = add(LexNumeral(k, (a,)), LexNumeral(k, (b,)))
                assert got.digits == table.entry(a, b)


class TestScale:
    def test_known_product(self, decimal_x):
        x = parse_lex("37", alphabet=decimal_x)
        assert scale(x, 10) == parse_lex("36X", alphabet=decimal_x)

    def test_digit_range(self):
        x = dx("37")
        with pytest.raises(ValueError):
            scale(x, 0)
        with pytest.raises(ValueError):
            scale(x, 11)

    def test_zero_operand(self):
        assert scale(LexNumeral.zero(7), 3).is_zero

    @given(numeral(), st.data())
    def test_value_morphism(self, x, data):
        d = data.draw(st.integers(1, x.base))
        assert omega(scale(x, d)) == omega(x) * d


class TestMultiplyByBase:
    def test_known_shift(self, decimal_x):
        x = parse_lex("423", alphabet=decimal_x)
        assert multiply_by_base(x) == parse_lex("422X", alphabet=decimal_x)

    def test_zero_stays_zero(self):
        assert multiply_by_base(LexNumeral.zero(10)).is_zero

    def test_single_unit(self):
        assert multiply_by_base(LexNumeral(4, (1,))).digits == (4,)

    @given(numeral())
    def test_matches_base_digit_product(self, x):
        k = x.base
        assert multiply_by_base(x) == multiply(x, LexNumeral(k, (k,)))
        assert omega(multiply_by_base(x)) == omega(x) * k


class TestMultiply:
    def test_known_products(self, decimal_x):
        x = parse_lex("37", alphabet=decimal_x)
        y = parse_lex("3X", alphabet=decimal_x)
        assert multiply(x, y) == parse_lex("147X", alphabet=decimal_x)
        a = parse_lex("423", alphabet=decimal_x)
        b = parse_lex("8X", alphabet=decimal_x)
        assert multiply(a, b) == parse_lex("37X6X", alphabet=decimal_x)

    def test_zero_annihilates(self):
        x = dx("423")
        zero = LexNumeral.zero(10)
        assert multiply(x, zero).is_zero
        assert multiply(zero, x).is_zero

    def test_unit_is_identity(self):
        x = dx("423")
        assert multiply(x, LexNumeral(10, (1,))) == x

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            multiply(LexNumeral(2, (1,)), LexNumeral(3, (1,)))

    @given(numeral_pair(max_len=8))
    def test_value_morphism(self, pair):
        a, b = pair
        assert omega(multiply(a, b)) == omega(a) * omega(b)

    @pytest.mark.parametrize("k", [2, 4, 10])
    def test_single_digits_match_table(self, k):
        table = build_multiplication_table(k)
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                got = multiply(LexNumeral(k, (a,)), LexNumeral(k, (b,)))
                assert got.digits == table.entry(a, b)


class TestLatticeMultiply:
    def test_known_product_with_generators(self, decimal_x):
        x = parse_lex("427", alphabet=decimal_x)
        y = parse_lex("35", alphabet=decimal_x)
        got = lattice_multiply(x, y, generators={2, 5})
        assert got.digits == (1, 4, 9, 4, 5)
        assert omega(got) == 14945

    def test_known_product_base60(self):
        x = parse_lex("[7][7]", base=60)
        y = parse_lex("[35]", base=60)
        got = lattice_multiply(x, y, generators={5, 10})
        assert got.digits == (4, 9, 5)
        assert omega(got) == 14945

    def test_unit_with_minimal_generators(self):
        x = dx("427")
        one = LexNumeral(10, (1,))
        assert lattice_multiply(x, one, generators={1}) == x

    def test_unrestricted_matches_multiply(self):
        x = dx("4231")
        y = dx("789")
        assert lattice_multiply(x, y) == multiply(x, y)

    def test_empty_generator_set(self):
        x = dx("42")
        with pytest.raises(ValueError):
            lattice_multiply(x, x, generators=set())

    def test_undecomposable_cell(self):
        three = LexNumeral(10, (3,))
        with pytest.raises(ValueError, match="cell"):
            lattice_multiply(three, three, generators={2})

    def test_generator_range(self):
        x = dx("42")
        with pytest.raises(ValueError):
            lattice_multiply(x, x, generators={0, 1})
        with pytest.raises(ValueError):
            lattice_multiply(x, x, generators={11})

    def test_needs_positional_base(self):
        x = LexNumeral(1, (1, 1))
        with pytest.raises(ValueError):
            lattice_multiply(x, x)

    def test_zero_operand(self):
        x = dx("42")
        zero = LexNumeral.zero(10)
        assert lattice_multiply(x, zero).is_zero
        assert lattice_multiply(zero, x).is_zero

    @given(numeral_pair(min_base=2, max_len=6), st.data())
    def test_agrees_with_multiply(self, pair, data):
        a, b = pair
        gens = data.draw(
            st.one_of(
                st.none(),
                st.sets(st.integers(1, a.base), max_size=4).map(lambda s: s | {1}),
            )
        )
        assert lattice_multiply(a, b, generators=gens) == multiply(a, b)


class TestLatticeTrace:
    def test_shape_and_intermediate(self, decimal_x):
        x = parse_lex("427", alphabet=decimal_x)
        y = parse_lex("35", alphabet=decimal_x)
        result, trace = lattice_multiply(x, y, generators={2, 5}, trace=True)
        assert result.digits == (1, 4, 9, 4, 5)
        assert isinstance(trace, LatticeTrace)
        assert len(trace.columns) == len(x.digits) + len(y.digits)
        assert omega_zero(trace.intermediate) == 14945
        cell_steps = [s for s in trace.steps if s.startswith("cell")]
        column_steps = [s for s in trace.steps if s.startswith("column")]
        assert len(column_steps) == len(trace.columns)
        assert len(cell_steps) == sum(len(col) for col in trace.columns) // 2
        assert trace.steps == tuple(cell_steps + column_steps)

    def test_columns_most_significant_first(self):
        x = parse_lex("[1][1]", base=10)
        one = LexNumeral(10, (1,))
        result, trace = lattice_multiply(x, one, trace=True)
        assert result == x
        assert trace.columns == ((0,), (1, 0), (1,))

    def test_zero_operand_trace(self):
        zero = LexNumeral.zero(10)
        result, trace = lattice_multiply(dx("42"), zero, trace=True)
        assert result.is_zero
        assert trace.columns == ()
        assert trace.steps == ()
        assert trace.intermediate == ZeroNumeral.zero(10)

    def test_trace_off_returns_bare_result(self):
        x = dx("42")
        assert isinstance(lattice_multiply(x, x), LexNumeral)

    @given(numeral_pair(min_base=2, max_len=5))
    def test_intermediate_preserves_value(self, pair):
        a, b = pair
        result, trace = lattice_multiply(a, b, trace=True)
        assert omega_zero(trace.intermediate) == omega(a) * omega(b)
        assert omega(result) == omega(a) * omega(b)
