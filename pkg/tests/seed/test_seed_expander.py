import pytest

from isocompress import constants
from isocompress.errors import ConfigError, DigestTooWide
from isocompress.seed.seed import Seed
from isocompress.seed.seed_expander import SeedExpander, check_digest_width
from isocompress.seed.splitmix import SplitMix64, mix64


class TestSplitMix64:

    def test_first_word_from_state_zero(self):
        assert SplitMix64(0).next_word() == 0xE220A8397B1DCDAF

    def test_output_function(self):
        assert mix64(constants.GOLDEN_GAMMA) == 0xE220A8397B1DCDAF

    def test_state_advances_by_the_golden_gamma(self):
        words = SplitMix64(constants.WORD_MASK)
        assert words.get_state() == constants.WORD_MASK
        words.next_word()
        assert words.get_state() == (constants.WORD_MASK + constants.GOLDEN_GAMMA) & constants.WORD_MASK

    def test_bits_are_read_lsb_first_across_words(self):
        words = SplitMix64(42)
        first, second = words.next_word(), words.next_word()
        bits = SplitMix64(42)
        low = bits.take_bits(4)
        middle = bits.take_bits(70)
        assert low == first & 0xF
        assert middle == (first >> 4) | ((second & 0x3FF) << 60)


class TestSeed:

    def test_seed_space_is_a_power_of_two(self):
        assert Seed(3, 4).get_value() == 3
        with pytest.raises(ConfigError):
            Seed(4, 4)
        with pytest.raises(ConfigError):
            SeedExpander(3)
        with pytest.raises(ConfigError):
            SeedExpander(2 ** 33)

    def test_make_seed(self):
        assert SeedExpander(16).make_seed(5) == Seed(5, 16)


class TestExpand:

    def test_initial_state_mixes_length_and_width(self):
        assert SeedExpander.initial_state(0, 16, 3) == (16 << 32) ^ 3
        assert SeedExpander.initial_state(1, 0, 0) == constants.GOLDEN_GAMMA

    def test_deterministic(self):
        expander = SeedExpander()
        assert expander.expand(77, 16, 4) == expander.expand(Seed(77), 16, 4)

    def test_shape_and_bit_consumption(self):
        hashes = SeedExpander().expand(9, 3, 1)
        assert len(hashes) == 2
        assert all(h.get_shape() == (2, 3) for h in hashes)

        stream = SplitMix64(SeedExpander.initial_state(9, 3, 1))
        packed = stream.take_bits(12)
        rows = [row for h in hashes for row in h.get_rows()]
        assert rows == [(packed >> (3 * j)) & 0b111 for j in range(4)]

    def test_digest_too_wide(self):
        with pytest.raises(DigestTooWide):
            SeedExpander().expand(0, 3, 3)
        with pytest.raises(DigestTooWide):
            check_digest_width(4, 4)
        with pytest.raises(ConfigError):
            check_digest_width(4, -1)

    def test_seed_outside_the_space(self):
        with pytest.raises(ConfigError):
            SeedExpander(16).expand(16, 8, 1)

    def test_distinct_seeds_give_distinct_tuples(self):
        expander = SeedExpander()
        assert len({expander.expand(seed, 16, 4) for seed in range(1 << 12)}) == 1 << 12

    def test_entries_are_balanced(self):
        expander = SeedExpander()
        seeds = 1 << 12
        ones = [0] * 32
        for seed in range(seeds):
            rows = [row for h in expander.expand(seed, 8, 1) for row in h.get_rows()]
            for position in range(32):
                ones[position] += (rows[position // 8] >> (position % 8)) & 1
        assert all(abs(count / seeds - 0.5) <= 0.05 for count in ones)

    def test_substreams_are_independent_of_order(self):
        later = SeedExpander.substream(5, 10, 8, 2)
        assert SeedExpander.substream(5, 10, 8, 2) == later
        assert SeedExpander.substream(5, 9, 8, 2) != later
