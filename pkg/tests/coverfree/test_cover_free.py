import logging
from itertools import combinations

import numpy as np
import pytest

from isocompress.coverfree.cover_free import (
    CoverViolation, check_family_against_bound, dr_lower_bound, find_cover_violation, is_k_cover_free,
    minimal_dr_constant
)
from isocompress.coverfree.set_family import SetFamily, load_family, random_family
from isocompress.errors import ConfigError, IngestError


def singletons(size: int) -> SetFamily:
    return SetFamily(size, [{element} for element in range(1, size + 1)])


def first_violation_by_brute_force(family: SetFamily, k: int) -> CoverViolation | None:
    masks = family.get_masks()
    for covered, mask in enumerate(masks):
        others = [index for index in range(len(masks)) if index != covered]
        for coverers in combinations(others, k):
            union = 0
            for index in coverers:
                union |= masks[index]
            if mask & ~union == 0:
                return CoverViolation(covered, coverers)

    return None


class TestCoverFree:

    def test_disjoint_singletons(self):
        family = singletons(64)
        assert is_k_cover_free(family, 4)
        assert find_cover_violation(family, 4) is None

    def test_pair_covered_by_its_halves(self):
        family = SetFamily(2, [{1, 2}, {1}, {2}])
        assert not is_k_cover_free(family, 2)
        assert is_k_cover_free(family, 1)
        assert find_cover_violation(family, 2) == CoverViolation(0, (1, 2))

    def test_all_pairs(self):
        family = SetFamily(5, [set(pair) for pair in combinations(range(1, 6), 2)])
        assert not is_k_cover_free(family, 2)
        violation = find_cover_violation(family, 2)
        assert violation == first_violation_by_brute_force(family, 2)

    def test_empty_member_is_covered_by_anything(self):
        family = SetFamily(3, [set(), {1}, {2}])
        assert find_cover_violation(family, 1) == CoverViolation(0, (1,))

    def test_k_range(self):
        with pytest.raises(ConfigError):
            is_k_cover_free(singletons(4), 0)
        with pytest.raises(ConfigError):
            find_cover_violation(singletons(4), 4)

    def test_agrees_with_brute_force(self):
        rng = np.random.default_rng(2024)
        for trial in range(500):
            size = int(rng.integers(2, 17))
            ground_size = int(rng.integers(5, 25))
            k = int(rng.integers(1, min(3, size - 1) + 1))
            family = random_family(size, ground_size, float(rng.uniform(0.1, 0.6)), trial)
            expected = first_violation_by_brute_force(family, k)
            assert is_k_cover_free(family, k) == (expected is None)
            assert find_cover_violation(family, k) == expected

    def test_antitone_in_k(self):
        for seed in range(40):
            family = random_family(10, 16, 0.25, seed)
            verdicts = [is_k_cover_free(family, k) for k in range(1, 10)]
            assert all(later <= earlier for earlier, later in zip(verdicts, verdicts[1:]))

    def test_independent_of_jobs(self):
        family = SetFamily(5, [set(pair) for pair in combinations(range(1, 6), 2)])
        assert find_cover_violation(family, 2, jobs=1) == find_cover_violation(family, 2, jobs=2)


class TestBound:

    def test_values(self):
        assert dr_lower_bound(64, 4, 1) == pytest.approx(19.2)
        assert dr_lower_bound(16, 2, 2) == pytest.approx(4.0)

    def test_monotone_in_size(self):
        values = [dr_lower_bound(size, 3, 1) for size in (27, 64, 256, 4096)]
        assert values == sorted(values)

    def test_warns_outside_the_hypothesis(self, caplog):
        with caplog.at_level(logging.WARNING):
            dr_lower_bound(16, 4, 1)
        assert "hypothesis" in caplog.text

    def test_bad_arguments(self):
        with pytest.raises(ConfigError):
            dr_lower_bound(1, 2, 1)
        with pytest.raises(ConfigError):
            dr_lower_bound(64, 1, 1)
        with pytest.raises(ConfigError):
            dr_lower_bound(64, 4, 0)

    def test_family_report(self):
        report = check_family_against_bound(singletons(64), 4, 1)
        assert report.cover_free and report.hypothesis_holds
        assert report.bound == pytest.approx(19.2)
        assert report.margin == pytest.approx(44.8)
        assert report.is_consistent()

    def test_report_for_a_covered_family(self):
        report = check_family_against_bound(SetFamily(2, [{1, 2}, {1}, {2}]), 2, 1)
        assert not report.cover_free
        assert report.bound is None and report.margin is None
        assert report.is_consistent()

    def test_minimal_constant(self):
        assert minimal_dr_constant(64, 4, 16) == pytest.approx(2.0)
        assert minimal_dr_constant(64, 4, 100) == 0.0


class TestSetFamily:

    def test_text_round_trip(self, write_lines):
        family = SetFamily(4, [{1, 3}, {2}, set(), {4}])
        path = write_lines(family.to_text().splitlines(), "family.txt")
        assert load_family(path) == family
        assert family.to_text() == "4 4\n1 3\n2\n\n4\n"

    def test_members(self):
        family = SetFamily(4, [{3, 1}, {2}])
        assert family.get_member(0) == frozenset({1, 3})
        assert family.get_masks() == (0b101, 0b10)
        assert len(family) == 2

    def test_rejects_bad_members(self):
        with pytest.raises(ConfigError):
            SetFamily(3, [{4}])
        with pytest.raises(ConfigError):
            SetFamily(3, [{1}, {1}])

    def test_malformed_files(self, write_lines):
        with pytest.raises(IngestError):
            load_family(write_lines(["2 3", "1 2", "1"], "short.txt"))
        with pytest.raises(IngestError):
            load_family(write_lines(["2 x"], "header.txt"))
        with pytest.raises(IngestError):
            load_family(write_lines(["2 1", "3"], "range.txt"))
        with pytest.raises(IngestError):
            load_family(write_lines([], "empty.txt"))

    def test_random_family(self):
        first = random_family(20, 12, 0.3, 5)
        assert first == random_family(20, 12, 0.3, 5)
        assert first.get_size() == 20
        with pytest.raises(ConfigError):
            random_family(5, 2, 0.5, 0)
        with pytest.raises(ConfigError):
            random_family(2, 4, 1.0, 0)
