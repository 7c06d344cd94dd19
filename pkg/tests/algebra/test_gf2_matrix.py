from itertools import product

import numpy as np
import pytest

from isocompress.algebra.bit_string import BitString
from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.errors import ConfigError, DimensionError
from isocompress.seed.seed_expander import SeedExpander


def bits(text: str) -> BitString:
    return BitString.from_text(text)


def span_size(matrix: GF2Matrix) -> int:
    combinations = {0}
    for row in matrix.get_rows():
        combinations |= {value ^ row for value in combinations}

    return len(combinations)


class TestMatvec:

    def test_projection(self):
        assert GF2Matrix.from_text(["1000", "0100"]).matvec(bits("1011")) == bits("10")

    def test_zero_map(self):
        assert GF2Matrix.zeros(2, 4).matvec(bits("1111")) == bits("00")

    def test_parity_rows(self):
        assert GF2Matrix.from_text(["110", "011"]).matvec(bits("111")) == bits("00")

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            GF2Matrix.zeros(2, 4).matvec(bits("111"))

    def test_linearity(self):
        h = SeedExpander().expand(3, 8, 3).get_member(1)
        for a, b in product(range(0, 256, 37), range(0, 256, 23)):
            x, y = BitString(a, 8), BitString(b, 8)
            assert h.matvec(x ^ y) == h.matvec(x) ^ h.matvec(y)

    def test_batch_digests_match_matvec(self):
        h = SeedExpander().expand(11, 12, 4).get_member(2)
        values = np.arange(1 << 12, dtype=np.uint64)
        digests = h.digests(values)
        for value in range(0, 1 << 12, 17):
            assert int(digests[value]) == h.matvec(BitString(value, 12)).get_value()


class TestConstruction:

    def test_rejects_rows_outside_the_columns(self):
        with pytest.raises(ConfigError):
            GF2Matrix([0b1000], 3)
        with pytest.raises(ConfigError):
            GF2Matrix([], 3)

    def test_rows_must_share_a_length(self):
        with pytest.raises(DimensionError):
            GF2Matrix.from_text(["10", "011"])

    def test_packed_round_trip(self):
        h = GF2Matrix.from_text(["101", "011"])
        assert GF2Matrix.from_packed(h.to_packed(), 2, 3) == h
        assert h.get_entry(0, 0) == 1 and h.get_entry(0, 1) == 0 and h.get_entry(1, 2) == 1


class TestRank:

    def test_examples(self):
        assert GF2Matrix.zeros(2, 4).rank() == 0
        assert GF2Matrix.from_text(["1000", "0100"]).rank() == 2
        assert GF2Matrix.from_text(["110", "110"]).rank() == 1

    def test_agrees_with_span_counting(self):
        for packed in range(1 << 12):
            h = GF2Matrix.from_packed(packed, 3, 4)
            assert 2 ** h.rank() == span_size(h)
            assert h.has_full_rank() == (h.rank() == 3)


class TestSolveAffine:

    def test_free_coordinates_form_the_basis(self):
        solution = GF2Matrix.from_text(["1000", "0100"]).solve_affine(bits("10"))
        assert solution.particular == bits("1000")
        assert solution.basis == (bits("0010"), bits("0001"))
        assert solution.size() == 4

    def test_inconsistent_system(self):
        assert GF2Matrix.zeros(1, 3).solve_affine(bits("1")) is None
        assert GF2Matrix.zeros(1, 3).preimage_count(bits("1")) == 0

    def test_every_solution_maps_to_the_target(self):
        h = GF2Matrix.from_text(["110", "011"])
        preimages = list(h.enumerate_preimages(bits("01")))
        assert len(preimages) == 2
        assert all(h.matvec(x) == bits("01") for x in preimages)
        assert set(preimages) == {BitString(v, 3) for v in range(8) if h.matvec(BitString(v, 3)) == bits("01")}

    def test_digest_length_checked(self):
        with pytest.raises(DimensionError):
            GF2Matrix.zeros(2, 4).solve_affine(bits("1"))


class TestEnumeratePreimages:

    def test_canonical_order(self):
        h = GF2Matrix.from_text(["1000", "0100"])
        assert [x.to_text() for x in h.enumerate_preimages(bits("10"))] == ["1000", "1001", "1010", "1011"]

    def test_zero_map(self):
        h = GF2Matrix.zeros(2, 4)
        assert len(set(h.enumerate_preimages(bits("00")))) == 16
        assert list(h.enumerate_preimages(bits("01"))) == []

    def test_blocks_follow_the_same_order(self):
        h = SeedExpander().expand(5, 20, 1).get_member(1)
        y = h.matvec(BitString(12345, 20))
        blocks = list(h.preimage_blocks(y))
        assert len(blocks) > 1
        flat = [int(value) for block in blocks for value in block]
        assert flat == [x.get_value() for x in h.enumerate_preimages(y)]

    def test_full_rank_preimages_partition_the_cube(self):
        expander = SeedExpander()
        n, k = 10, 3
        full_rank = [h for seed in range(8) for h in expander.expand(seed, n, k) if h.has_full_rank()]
        assert full_rank
        for h in full_rank[:3]:
            seen = set()
            for y in range(1 << (k + 1)):
                preimages = {x.get_value() for x in h.enumerate_preimages(BitString(y, k + 1))}
                assert len(preimages) == 2 ** (n - k - 1)
                assert not preimages & seen
                seen |= preimages
            assert len(seen) == 2 ** n
