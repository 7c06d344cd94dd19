from isocompress import constants, validation
from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.algebra.hash_tuple import HashTuple
from isocompress.errors import DigestTooWide
from isocompress.seed.seed import Seed, check_seed_space
from isocompress.seed.splitmix import SplitMix64, mix64


class SeedExpander:
    """
    Deterministic expansion of a short seed into a HashTuple.

    The seed, the string length n and the digest parameter k are folded into
    the initial splitmix state (s * golden gamma) ^ (n << 32) ^ k; the stream
    then fills the k+1 matrices of shape (k+1) x n row-major, matrix by
    matrix, taking bits least significant first.

    Attributes
    ----------
    __seed_space : int
        The number of seeds searches may use.
    """

    def __init__(self, seed_space: int = constants.DEFAULT_SEED_SPACE):
        """
        Initialize the SeedExpander.

        Parameters
        ----------
        seed_space : int, optional
            The number of seeds (default is constants.DEFAULT_SEED_SPACE).

        Raises
        ------
        ConfigError
            If 'seed_space' is not a power of two in [1, 2^32].
        """
        self.__seed_space = check_seed_space(seed_space)

    def get_seed_space(self) -> int:
        """Returns the number of seeds."""
        return self.__seed_space

    def make_seed(self, value: int) -> Seed:
        """Returns Seed(value) in this expander's seed space."""
        return Seed(value, self.__seed_space)

    def expand(self, seed: Seed | int, n: int, k: int) -> HashTuple:
        """
        Expands a seed into k+1 matrices of shape (k+1) x n.

        Parameters
        ----------
        seed : Seed | int
            The seed or its value.
        n : int
            The string length.
        k : int
            The digest parameter; digests have k+1 bits.

        Returns
        -------
        HashTuple
            The tuple, a pure function of (seed, n, k).

        Raises
        ------
        DigestTooWide
            If k+1 > n.
        ConfigError
            If the seed lies outside the seed space or k is negative.
        """
        value = seed.get_value() if isinstance(seed, Seed) else self.make_seed(seed).get_value()
        return SeedExpander.expand_state(SeedExpander.initial_state(value, n, k), n, k)

    @staticmethod
    def initial_state(seed_value: int, n: int, k: int) -> int:
        """Returns (seed_value * golden gamma) ^ (n << 32) ^ k modulo 2^64."""
        return ((seed_value * constants.GOLDEN_GAMMA) ^ (n << constants.LENGTH_SHIFT) ^ k) & constants.WORD_MASK

    @staticmethod
    def expand_state(state: int, n: int, k: int) -> HashTuple:
        """
        Fills a tuple from the splitmix stream started at a raw state.

        Parameters
        ----------
        state : int
            The raw initial state.
        n : int
            The string length.
        k : int
            The digest parameter.

        Returns
        -------
        HashTuple
            k+1 matrices of shape (k+1) x n.

        Raises
        ------
        DigestTooWide
            If k+1 > n.
        """
        check_digest_width(n, k)
        stream = SplitMix64(state)
        width = k + 1
        members = []
        for _ in range(width):
            rows = [stream.take_bits(n) for _ in range(width)]
            members.append(GF2Matrix(rows, n))

        return HashTuple(members)

    @staticmethod
    def substream(mc_seed: int, trial: int, n: int, k: int) -> HashTuple:
        """
        The tuple of one Monte Carlo trial.

        Each trial owns a sub-stream whose state is the initial state of
        (mc_seed, n, k) XOR the splitmix output function of trial + 1, so a
        trial's tuple does not depend on which worker draws it.

        Parameters
        ----------
        mc_seed : int
            The experiment seed.
        trial : int
            The trial index.
        n : int
            The string length.
        k : int
            The digest parameter.

        Returns
        -------
        HashTuple
            k+1 matrices of shape (k+1) x n.
        """
        validation.is_non_negative(mc_seed, "'mc_seed' cannot be negative!")
        validation.is_non_negative(trial, "'trial' cannot be negative!")
        state = SeedExpander.initial_state(mc_seed, n, k) ^ mix64(trial + 1)
        return SeedExpander.expand_state(state, n, k)


def check_digest_width(n: int, k: int) -> int:
    """
    Checks that digests of k+1 bits fit strings of length n.

    Parameters
    ----------
    n : int
        The string length.
    k : int
        The digest parameter.

    Returns
    -------
    k : int
        If 0 <= k and k+1 <= n.

    Raises
    ------
    ConfigError
        If k is negative or n is less than 1.
    DigestTooWide
        If k+1 > n.
    """
    validation.is_positive(n, "'n' cannot be less than 1!")
    validation.is_non_negative(k, "'k' cannot be negative!")
    if k + 1 > n:
        raise DigestTooWide(f"Digests of k+1 = {k + 1} bits do not fit strings of length n = {n}.")

    return k
