import pytest

from isocompress.algebra.bit_string import BitString
from isocompress.errors import ConfigError, DimensionError


class TestBitString:

    def test_position_zero_is_the_leftmost_character(self):
        x = BitString.from_text("1011")
        assert x.get_length() == 4
        assert x.get_value() == 0b1101
        assert [x.get_bit(p) for p in range(4)] == [1, 0, 1, 1]
        assert x.to_text() == "1011"
        assert str(x) == "1011"

    def test_rejects_bad_arguments(self):
        with pytest.raises(ConfigError):
            BitString(0, 0)
        with pytest.raises(ConfigError):
            BitString(-1, 3)
        with pytest.raises(ConfigError):
            BitString(0b1000, 3)
        with pytest.raises(ConfigError):
            BitString.from_text("10a1")
        with pytest.raises(ConfigError):
            BitString.from_text("")

    def test_byte_image_is_lsb_first(self):
        assert BitString.from_text("10000000").to_bytes() == b"\x01"
        assert BitString.from_text("00000001").to_bytes() == b"\x80"
        assert BitString.from_text("100000001").to_bytes() == b"\x01\x01"
        assert BitString.from_bytes(b"\x01\x01", 9) == BitString.from_text("100000001")

    def test_from_bytes_checks_size_and_padding(self):
        with pytest.raises(DimensionError):
            BitString.from_bytes(b"\x01", 9)
        with pytest.raises(DimensionError):
            BitString.from_bytes(b"\x01\x02", 9)

    def test_lexicographic_rank(self):
        assert BitString.from_lexicographic_rank(1, 3).to_text() == "001"
        assert BitString.from_lexicographic_rank(6, 3).to_text() == "110"
        assert BitString.from_text("011").lexicographic_key() == 3

    def test_ordering_follows_the_written_form(self):
        written = ["110", "001", "100", "011"]
        ordered = sorted(BitString.from_text(text) for text in written)
        assert [x.to_text() for x in ordered] == sorted(written)

    def test_xor_and_equality(self):
        x = BitString.from_text("1100")
        y = BitString.from_text("1010")
        assert (x ^ y).to_text() == "0110"
        assert x == BitString.from_text("1100")
        assert x != y
        assert len({x, BitString.from_text("1100")}) == 1
        with pytest.raises(DimensionError):
            x.xor(BitString.from_text("101"))

    def test_equal_values_of_different_length_differ(self):
        assert BitString(1, 3) != BitString(1, 4)
