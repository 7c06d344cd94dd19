import pytest

from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.algebra.hash_tuple import HashTuple
from isocompress.errors import DimensionError


class TestHashTuple:

    def test_members_are_one_based(self):
        first = GF2Matrix.from_text(["10", "01"])
        second = GF2Matrix.zeros(2, 2)
        hashes = HashTuple([first, second])
        assert hashes.get_member(1) == first
        assert hashes.get_member(2) == second
        assert len(hashes) == 2
        assert hashes.get_digest_width() == 2
        assert hashes.get_length() == 2
        assert not hashes.all_full_rank()
        with pytest.raises(DimensionError):
            hashes.get_member(0)
        with pytest.raises(DimensionError):
            hashes.get_member(3)

    def test_count_must_equal_the_row_count(self):
        with pytest.raises(DimensionError):
            HashTuple([GF2Matrix.zeros(2, 3)])
        with pytest.raises(DimensionError):
            HashTuple([])

    def test_shapes_must_agree(self):
        with pytest.raises(DimensionError):
            HashTuple([GF2Matrix.zeros(2, 3), GF2Matrix.zeros(2, 4)])
