import logging
import math
from dataclasses import dataclass

from isocompress import constants, parallel, validation
from isocompress.coverfree.set_family import SetFamily
from isocompress.errors import ConfigError

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverViolation:
    """
    A member contained in the union of k other members.

    Attributes
    ----------
    covered : int
        0-based index of the covered member F_0.
    coverers : tuple[int, ...]
        0-based indices of F_1 .. F_k, increasing.
    """

    covered: int
    coverers: tuple[int, ...]


@dataclass(frozen=True)
class BoundReport:
    """
    A family checked against the Dyachkov-Rykov lower bound.

    Attributes
    ----------
    cover_free : bool
        Whether the family is k-cover-free.
    hypothesis_holds : bool
        Whether k^3 <= N.
    ground_size : int
        M.
    bound : float | None
        k^2 log2 N / (2 log2 k + c); None when the family is not cover-free.
    margin : float | None
        M - bound; None when the family is not cover-free.
    """

    cover_free: bool
    hypothesis_holds: bool
    ground_size: int
    bound: float | None
    margin: float | None

    def is_consistent(self) -> bool:
        """Returns False only for a cover-free family within the hypothesis whose M is below the bound."""
        return not (self.cover_free and self.hypothesis_holds and self.margin < 0)


def is_k_cover_free(family: SetFamily, k: int) -> bool:
    """
    Decides whether no member is contained in the union of k other members.

    For each member the search always extends a partial cover with a set
    holding the smallest element still uncovered, so at most k levels of
    candidates are tried.

    Parameters
    ----------
    family : SetFamily
        The family.
    k : int
        In [1, N-1].

    Returns
    -------
    bool
        True iff the family is k-cover-free.

    Raises
    ------
    ConfigError
        If k is outside [1, N-1].
    """
    _check_k(family, k)
    masks = family.get_masks()
    return not any(_coverable(masks, covered, masks[covered], frozenset(), k) for covered in range(len(masks)))


def find_cover_violation(family: SetFamily, k: int, jobs: int = constants.DEFAULT_JOBS) -> CoverViolation | None:
    """
    Returns the lexicographically first violation (covered, coverers), or None.

    Covered indices are tried in increasing order; for each, coverer tuples
    are walked in increasing lexicographic order, pruned by the union of the
    members still available.

    Parameters
    ----------
    family : SetFamily
        The family.
    k : int
        In [1, N-1].
    jobs : int, optional
        Worker processes over the covered index (default is constants.DEFAULT_JOBS).

    Returns
    -------
    CoverViolation | None
        The first witness, None iff the family is k-cover-free.

    Raises
    ------
    ConfigError
        If k is outside [1, N-1].
    """
    _check_k(family, k)
    masks = family.get_masks()
    chunks = [(masks, covered, k) for covered in range(len(masks))]
    with parallel.ChunkRunner(jobs) as runner:
        for first in range(0, len(chunks), runner.get_jobs()):
            for found in runner.map(_first_coverers, chunks[first:first + runner.get_jobs()]):
                if found is not None:
                    return found

    return None


def dr_lower_bound(size: int, k: int, c: float) -> float:
    """
    Evaluates k^2 log2 N / (2 log2 k + c).

    Parameters
    ----------
    size : int
        N, at least 2.
    k : int
        At least 2.
    c : float
        The unspecified constant of the theorem, positive.

    Returns
    -------
    float
        The lower bound on M for a k-cover-free family of N subsets of [M].

    Raises
    ------
    ConfigError
        If N < 2, k < 2 or c <= 0.
    """
    validation.is_in_range(size, 2, math.inf, "'N' cannot be less than 2!")
    validation.is_in_range(k, 2, math.inf, "'k' cannot be less than 2!")
    if not c > 0:
        raise ConfigError("'c' must be positive!")
    if k ** 3 > size:
        _logger.warning("k = %d exceeds N^(1/3) for N = %d; the bound's hypothesis does not hold.", k, size)

    return k * k * math.log2(size) / (2 * math.log2(k) + c)


def check_family_against_bound(family: SetFamily, k: int, c: float) -> BoundReport:
    """
    Checks a family against the Dyachkov-Rykov bound.

    Parameters
    ----------
    family : SetFamily
        The family.
    k : int
        In [2, N-1].
    c : float
        The constant, positive.

    Returns
    -------
    BoundReport
        cover_free False short-circuits; otherwise the bound and M - bound.

    Raises
    ------
    ConfigError
        If k is outside [2, N-1] or c <= 0.
    """
    validation.is_in_range(k, 2, math.inf, "'k' cannot be less than 2!")
    if not c > 0:
        raise ConfigError("'c' must be positive!")
    _check_k(family, k)
    size = family.get_size()
    hypothesis_holds = k ** 3 <= size
    if not is_k_cover_free(family, k):
        return BoundReport(False, hypothesis_holds, family.get_ground_size(), None, None)

    bound = dr_lower_bound(size, k, c)
    return BoundReport(True, hypothesis_holds, family.get_ground_size(), bound, family.get_ground_size() - bound)


def minimal_dr_constant(size: int, k: int, ground_size: int) -> float:
    """
    Returns the smallest c >= 0 with M >= k^2 log2 N / (2 log2 k + c).

    Parameters
    ----------
    size : int
        N, at least 2.
    k : int
        At least 2.
    ground_size : int
        M, at least 1.

    Returns
    -------
    float
        max(0, k^2 log2 N / M - 2 log2 k).
    """
    validation.is_in_range(size, 2, math.inf, "'N' cannot be less than 2!")
    validation.is_in_range(k, 2, math.inf, "'k' cannot be less than 2!")
    validation.is_positive(ground_size, "'M' cannot be less than 1!")
    return max(0.0, k * k * math.log2(size) / ground_size - 2 * math.log2(k))


def _check_k(family: SetFamily, k: int) -> None:
    validation.is_in_range(k, 1, family.get_size() - 1, f"'k' must lie in [1, N-1] for N = {family.get_size()}!")


def _coverable(masks: tuple[int, ...], covered: int, uncovered: int, used: frozenset[int], depth: int) -> bool:
    if uncovered == 0:
        return True
    if depth == 0:
        return False

    lowest = uncovered & -uncovered
    return any(
        _coverable(masks, covered, uncovered & ~mask, used | {index}, depth - 1)
        for index, mask in enumerate(masks)
        if index != covered and index not in used and mask & lowest
    )


def _first_coverers(masks: tuple[int, ...], covered: int, k: int) -> CoverViolation | None:
    others = [index for index in range(len(masks)) if index != covered]
    suffix_unions = [0] * (len(others) + 1)
    for position in range(len(others) - 1, -1, -1):
        suffix_unions[position] = suffix_unions[position + 1] | masks[others[position]]

    def extend(start: int, chosen: list[int], uncovered: int) -> tuple[int, ...] | None:
        remaining = k - len(chosen)
        if uncovered == 0:
            # Pad with the smallest indices left for the lexicographically first tuple.
            return tuple(chosen + others[start:start + remaining])
        if remaining == 0 or uncovered & ~suffix_unions[start]:
            return None

        for position in range(start, len(others) - remaining + 1):
            found = extend(position + 1, chosen + [others[position]], uncovered & ~masks[others[position]])
            if found is not None:
                return found

        return None

    coverers = extend(0, [], masks[covered])
    return None if coverers is None else CoverViolation(covered, coverers)
