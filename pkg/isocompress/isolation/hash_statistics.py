from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from isocompress import util, validation
from isocompress.algebra.bit_string import BitString
from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.errors import DimensionError
from isocompress.seed.seed_expander import SeedExpander, check_digest_width
from isocompress.seed.splitmix import SplitMix64

EXHAUSTIVE_MATRIX_BITS = 20
"""Largest (k+1) * n for which all matrices of a shape are enumerated.
"""


@dataclass(frozen=True)
class FractionEstimate:
    """
    A sampled proportion.

    Attributes
    ----------
    successes : int
        Number of hits.
    trials : int
        Number of samples.
    estimate : float
        successes / trials.
    stderr : float
        Binomial standard error.
    """

    successes: int
    trials: int
    estimate: float
    stderr: float


def all_matrices(n: int, k: int):
    """
    Yields every (k+1) x n matrix over GF(2), in increasing packed order.

    Raises
    ------
    DigestTooWide
        If k+1 > n.
    ConfigError
        If (k+1) * n exceeds EXHAUSTIVE_MATRIX_BITS.
    """
    check_digest_width(n, k)
    bits = (k + 1) * n
    validation.is_in_range(bits, 1, EXHAUSTIVE_MATRIX_BITS, "Too many matrices to enumerate!")
    for packed in range(1 << bits):
        yield GF2Matrix.from_packed(packed, k + 1, n)


def exact_collision_fraction(n: int, k: int, x: BitString, y: BitString) -> Fraction:
    """
    Fraction of all (k+1) x n matrices H with Hx = Hy, by enumeration.

    Parameters
    ----------
    n : int
        The string length.
    k : int
        The digest parameter.
    x : BitString
        A string of length n.
    y : BitString
        A string of length n.

    Returns
    -------
    Fraction
        Exactly 1 / 2^(k+1) when x != y.
    """
    if x.get_length() != n or y.get_length() != n:
        raise DimensionError(f"Both strings must have length {n}.")

    total = 0
    collisions = 0
    for h in all_matrices(n, k):
        total += 1
        collisions += h.matvec(x) == h.matvec(y)

    return Fraction(collisions, total)


def collision_fractions(n: int, k: int) -> dict[tuple[BitString, BitString], Fraction]:
    """Returns exact_collision_fraction for every unordered pair of distinct strings of length n."""
    strings = [BitString(value, n) for value in range(1 << n)]
    matrices = list(all_matrices(n, k))
    fractions = {}
    for x, y in combinations(strings, 2):
        collisions = sum(h.matvec(x) == h.matvec(y) for h in matrices)
        fractions[(x, y)] = Fraction(collisions, len(matrices))

    return fractions


def full_rank_count(n: int, k: int) -> int:
    """Counts the (k+1) x n matrices of rank k+1 by enumeration."""
    return sum(h.has_full_rank() for h in all_matrices(n, k))


def expected_full_rank_count(n: int, k: int) -> int:
    """Returns the product over j = 0..k of (2^n - 2^j)."""
    check_digest_width(n, k)
    count = 1
    for j in range(k + 1):
        count *= 2 ** n - 2 ** j

    return count


def full_rank_probability(n: int, k: int) -> float:
    """Returns the product over j = 0..k of (1 - 2^(j - n))."""
    check_digest_width(n, k)
    probability = 1.0
    for j in range(k + 1):
        probability *= 1.0 - 2.0 ** (j - n)

    return probability


def estimate_full_rank_fraction(n: int, k: int, trials: int, mc_seed: int) -> FractionEstimate:
    """
    Monte Carlo fraction of random (k+1) x n matrices with rank k+1.

    Matrices are read consecutively from the splitmix stream of the initial
    state of (mc_seed, n, k).

    Parameters
    ----------
    n : int
        The string length.
    k : int
        The digest parameter.
    trials : int
        Number of matrices.
    mc_seed : int
        The experiment seed.

    Returns
    -------
    FractionEstimate
        The fraction with its binomial standard error.
    """
    check_digest_width(n, k)
    validation.is_positive(trials, "'trials' cannot be less than 1!")
    validation.is_non_negative(mc_seed, "'mc_seed' cannot be negative!")

    stream = SplitMix64(SeedExpander.initial_state(mc_seed, n, k))
    successes = 0
    for _ in range(trials):
        rows = [stream.take_bits(n) for _ in range(k + 1)]
        successes += GF2Matrix(rows, n).has_full_rank()

    return FractionEstimate(successes, trials, successes / trials, util.binomial_stderr(successes, trials))


def rank_loss_bound(n: int, k: int) -> float:
    """Returns 2^(k+1-n), an upper bound on the probability that a random (k+1) x n matrix is rank deficient."""
    check_digest_width(n, k)
    return 2.0 ** (k + 1 - n)
