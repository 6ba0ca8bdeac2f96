import io

import pytest
from hypothesis import given, strategies as st

from zeroless import (
    FastaRecord,
    rank_sequence,
    read_fasta,
    sequence_order,
    unrank_sequence,
)

sequences = st.text(alphabet="ACGT", max_size=40)


class TestRankSequence:
    def test_known_ranks(self):
        assert rank_sequence("A") == 1
        assert rank_sequence("TT") == 20
        assert rank_sequence("CAT") == 40
        assert rank_sequence("GATT") == 228
        assert rank_sequence("") == 0

    def test_lowercase_accepted(self):
        assert rank_sequence("cat") == 40

    def test_invalid_character(self):
        with pytest.raises(ValueError, match="'N'"):
            rank_sequence("CAN")


class TestUnrankSequence:
    def test_known_sequences(self):
        assert unrank_sequence(0) == ""
        assert unrank_sequence(1) == "A"
        assert unrank_sequence(21) == "AAA"
        assert unrank_sequence(40) == "CAT"
        assert unrank_sequence(228) == "GATT"

    def test_negative_rank(self):
        with pytest.raises(ValueError):
            unrank_sequence(-1)

    def test_first_ranks_sorted_shortlex(self):
        seqs = [unrank_sequence(n) for n in range(1, 85)]
        assert seqs[:8] == ["A", "C", "G", "T", "AA", "AC", "AG", "AT"]
        assert sorted(seqs, key=lambda s: (len(s), s)) == seqs

    @given(sequences)
    def test_round_trip(self, seq):
        assert unrank_sequence(rank_sequence(seq)) == seq


class TestSequenceOrder:
    def test_known_comparisons(self):
        assert sequence_order("CAT", "GATT") == -1
        assert sequence_order("ACG", "ACG") == 0
        assert sequence_order("T", "AA") == -1
        assert sequence_order("GATT", "CAT") == 1

    @given(sequences, sequences)
    def test_agrees_with_ranks(self, a, b):
        ra, rb = rank_sequence(a), rank_sequence(b)
        assert sequence_order(a, b) == (ra > rb) - (ra < rb)


class TestReadFasta:
    def test_minimal_file(self, tmp_path):
        path = tmp_path / "one.fa"
        path.write_text(">seq1\nACGT\n")
        assert list(read_fasta(str(path))) == [FastaRecord("seq1", "ACGT", 1)]

    def test_handle_source(self):
        records = list(read_fasta(io.StringIO(">s\nCA\nT\n")))
        assert records == [FastaRecord("s", "CAT", 1)]

    def test_wrapping_is_invisible(self):
        narrow = io.StringIO(">s\nGA\nTT\n")
        wide = io.StringIO(">s\nGATT\n")
        (a,) = read_fasta(narrow)
        (b,) = read_fasta(wide)
        assert a == b
        assert rank_sequence(a.sequence) == 228

    def test_multiple_records_and_comments(self):
        text = "; produced by hand\n>first one\nACG\n\n>second\nt\nt\n"
        records = list(read_fasta(io.StringIO(text)))
        assert [r.id for r in records] == ["first one", "second"]
        assert [r.sequence for r in records] == ["ACG", "TT"]
        assert [r.line for r in records] == [2, 5]

    def test_reject_names_line_and_column(self):
        source = io.StringIO(">s\nACGT\nAXGT\n")
        with pytest.raises(ValueError, match=r"line 3, column 2.*'X'.*'s'"):
            list(read_fasta(source))

    def test_skip_drops_whole_record(self):
        text = ">good\nACGT\n>bad\nAC\nGN\n>tail\nTT\n"
        records = list(read_fasta(io.StringIO(text), policy="skip"))
        assert [r.id for r in records] == ["good", "tail"]

    def test_skip_keeps_clean_records_only(self):
        text = ">bad\nNNNN\n"
        assert list(read_fasta(io.StringIO(text), policy="skip")) == []

    def test_data_before_header(self):
        with pytest.raises(ValueError, match="line 1"):
            list(read_fasta(io.StringIO("ACGT\n")))

    def test_empty_record(self):
        with pytest.raises(ValueError, match="'a'.*empty"):
            list(read_fasta(io.StringIO(">a\n>b\nACGT\n")))

    def test_unknown_policy(self):
        with pytest.raises(ValueError, match="policy"):
            list(read_fasta(io.StringIO(">s\nA\n"), policy="ignore"))

    def test_is_lazy_per_record(self):
        source = io.StringIO(">one\nA\n>two\nBAD!\n")
        stream = read_fasta(source)
        assert next(stream).id == "one"
        with pytest.raises(ValueError):
            next(stream)
