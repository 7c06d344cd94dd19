from isocompress import constants, validation
from isocompress.algebra.bit_string import BitString
from isocompress.language.explicit_slice import ExplicitSlice
from isocompress.seed.splitmix import SplitMix64


class RandomSlice(ExplicitSlice):
    """
    'count' distinct strings of length n drawn from the splitmix stream of a seed.

    Strings are read n bits at a time from the stream started at 'seed';
    repeats are skipped until 'count' distinct strings are collected.
    """

    def __init__(self, n: int, count: int, seed: int, scan_cap: int = constants.DEFAULT_SCAN_CAP):
        """
        Initialize the RandomSlice.

        Parameters
        ----------
        n : int
            The string length.
        count : int
            The number of members, in [0, 2^n].
        seed : int
            The stream seed.
        scan_cap : int, optional
            The scan cap (default is constants.DEFAULT_SCAN_CAP).

        Raises
        ------
        ConfigError
            If 'count' exceeds 2^n or 'seed' is negative.
        """
        validation.is_in_range(n, 1, constants.MAX_STRING_LENGTH, f"'n' must lie in [1, {constants.MAX_STRING_LENGTH}]!")
        validation.is_in_range(count, 0, 2 ** n, "'count' must lie in [0, 2^n]!")
        validation.is_non_negative(seed, "'seed' cannot be negative!")

        stream = SplitMix64(seed)
        chosen = {}
        while len(chosen) < count:
            value = stream.take_bits(n)
            chosen.setdefault(value, BitString(value, n))

        super().__init__(list(chosen.values()), n, f"random:{n}:{count}:{seed}", scan_cap)
