import logging

import numpy as np
import pytest

from isocompress.algebra.bit_string import BitString
from isocompress.errors import DigestTooWide, DimensionError, EmptyLanguage, EnumerationUnsupported, IngestError
from isocompress.language.dfa_slice import Automaton, DfaSlice
from isocompress.language.explicit_slice import ExplicitSlice
from isocompress.language.hamming_slice import HammingSlice
from isocompress.language.language_slice import LanguageSlice
from isocompress.language.random_slice import RandomSlice


class MultipleOfThree(LanguageSlice):
    """Strings whose packed value is divisible by three; no native enumerator."""

    def __init__(self, n: int, scan_cap: int = 24):
        super().__init__(n, f"mod3:{n}", scan_cap)

    def contains_value(self, value: int) -> bool:
        return value % 3 == 0


def texts(language: LanguageSlice) -> list[str]:
    return [x.to_text() for x in language.enumerate_members()]


class TestMembership:

    def test_hamming(self):
        language = HammingSlice(4, 1)
        assert language.get_weight() == 1
        assert language.member(BitString.from_text("0100"))
        assert not language.member(BitString.from_text("0110"))

    def test_explicit(self, explicit):
        language = explicit(["0011", "1100"])
        assert language.member(BitString.from_text("1100"))
        assert not language.member(BitString.from_text("1111"))

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            HammingSlice(4, 1).member(BitString.from_text("010"))

    def test_vectorised_mask_agrees_with_the_oracle(self, ends_in_one_path):
        values = np.arange(1 << 8, dtype=np.uint64)
        for language in (HammingSlice(8, 3), DfaSlice.load(ends_in_one_path, 8), RandomSlice(8, 20, 4)):
            mask = language.member_mask(values)
            assert list(mask) == [language.member(BitString(v, 8)) for v in range(1 << 8)]


class TestEnumeration:

    def test_hamming_is_lexicographic(self):
        assert texts(HammingSlice(3, 2)) == ["011", "101", "110"]

    def test_empty_explicit(self):
        language = ExplicitSlice([], 4)
        assert texts(language) == []
        assert language.cardinality() == 0

    def test_dfa_ending_in_one(self, ends_in_one_path):
        language = DfaSlice.load(ends_in_one_path, 4)
        members = texts(language)
        assert len(members) == 8
        assert all(text.endswith("1") for text in members)
        assert members == sorted(members)
        assert language.cardinality() == 8

    def test_scan_without_native_enumerator(self):
        language = MultipleOfThree(6)
        expected = sorted(BitString(v, 6).to_text() for v in range(64) if v % 3 == 0)
        assert texts(language) == expected
        assert not language.has_native_enumerator()

    def test_scan_cap(self):
        language = MultipleOfThree(10, scan_cap=8)
        assert not language.is_enumerable()
        with pytest.raises(EnumerationUnsupported):
            language.members_array()

    @pytest.mark.parametrize("n", [10, 12])
    def test_enumeration_agrees_with_membership(self, n, ends_in_one_path):
        for language in (HammingSlice(n, 3), DfaSlice.load(ends_in_one_path, n), MultipleOfThree(n)):
            enumerated = {x.get_value() for x in language.enumerate_members()}
            for value in range(1 << n):
                assert (value in enumerated) == language.member(BitString(value, n))
            assert language.cardinality() == len(enumerated)


class TestChooseK:

    def test_examples(self, explicit):
        assert RandomSlice(8, 8, 1).choose_k() == 3
        assert explicit(["0101"]).choose_k() == 0
        assert RandomSlice(8, 5, 2).choose_k() == 3

    def test_bracketing(self):
        for count in range(2, 40):
            k = RandomSlice(10, count, count).choose_k()
            assert 2 ** k >= count > 2 ** (k - 1)

    def test_empty_slice(self):
        with pytest.raises(EmptyLanguage):
            ExplicitSlice([], 4).choose_k()

    def test_digest_too_wide(self, explicit):
        with pytest.raises(DigestTooWide):
            explicit(["00", "01", "10", "11"]).choose_k()


class TestDensity:

    def test_sparse_slice_passes(self):
        assert HammingSlice(16, 1).check_density()

    def test_dense_slice_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            assert not HammingSlice(8, 4).check_density()
        assert "2^n / n^2" in caplog.text


class TestIngestion:

    def test_explicit_file(self, write_lines):
        path = write_lines(["0011", "", "1100"])
        language = ExplicitSlice.load(path)
        assert texts(language) == ["0011", "1100"]
        assert language.get_spec() == f"explicit:{path}"

    def test_duplicates(self, write_lines):
        with pytest.raises(IngestError):
            ExplicitSlice.load(write_lines(["0011", "0011"]))

    def test_not_binary(self, write_lines):
        with pytest.raises(IngestError):
            ExplicitSlice.load(write_lines(["0011", "0021"]))

    def test_mixed_lengths(self, write_lines):
        with pytest.raises(IngestError):
            ExplicitSlice.load(write_lines(["0011", "011"]))

    def test_empty_file_needs_a_length(self, write_lines):
        path = write_lines([])
        with pytest.raises(IngestError):
            ExplicitSlice.load(path)
        assert ExplicitSlice.load(path, 5).get_n() == 5

    def test_missing_file(self, tmp_path):
        with pytest.raises(IngestError):
            ExplicitSlice.load(str(tmp_path / "absent.txt"))

    def test_malformed_automaton(self, write_lines):
        with pytest.raises(IngestError):
            Automaton.load(write_lines(["states 2", "start 0", "0 1"], "bad.dfa"))
        with pytest.raises(IngestError):
            Automaton.load(write_lines(["states 2", "start 0", "0 1 1", "0 1 0"], "twice.dfa"))
        with pytest.raises(IngestError):
            Automaton.load(write_lines(["start 0"], "short.dfa"))

    def test_missing_transition_rejects(self, write_lines):
        automaton = Automaton.load(write_lines(["states 1", "start 0", "accept 0", "0 0 0"], "zeros.dfa"))
        assert texts(DfaSlice(automaton, 3)) == ["000"]


class TestRandomSlice:

    def test_deterministic_and_distinct(self):
        first = RandomSlice(16, 100, 9)
        second = RandomSlice(16, 100, 9)
        assert list(first.members_array()) == list(second.members_array())
        assert first.cardinality() == 100
        assert first.get_spec() == "random:16:100:9"

    def test_whole_cube(self):
        assert RandomSlice(3, 8, 0).cardinality() == 8
