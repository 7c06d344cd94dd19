import math
from itertools import combinations

import numpy as np

from isocompress import constants, util, validation
from isocompress.language.language_slice import LanguageSlice, sort_lexicographic


class HammingSlice(LanguageSlice):
    """
    The strings of length n with exactly w ones.

    Attributes
    ----------
    __weight : int
        The Hamming weight w.
    """

    def __init__(self, n: int, weight: int, scan_cap: int = constants.DEFAULT_SCAN_CAP):
        """
        Initialize the HammingSlice.

        Parameters
        ----------
        n : int
            The string length.
        weight : int
            The number of ones, in [0, n].
        scan_cap : int, optional
            The scan cap (default is constants.DEFAULT_SCAN_CAP).

        Raises
        ------
        ConfigError
            If 'weight' is outside [0, n].
        """
        super().__init__(n, f"hamming:{n}:{weight}", scan_cap)
        self.__weight = validation.is_in_range(weight, 0, n, "'weight' must lie in [0, n]!")

    def get_weight(self) -> int:
        """Returns the weight w."""
        return self.__weight

    def contains_value(self, value: int) -> bool:
        return value.bit_count() == self.__weight

    def member_mask(self, values: np.ndarray) -> np.ndarray:
        return util.popcount64(values) == self.__weight

    def native_members(self) -> np.ndarray:
        packed = [sum(1 << position for position in chosen) for chosen in combinations(range(self.get_n()), self.__weight)]
        return sort_lexicographic(np.array(packed, dtype=np.uint64), self.get_n())

    def has_native_enumerator(self) -> bool:
        return True

    def native_cardinality(self) -> int:
        return math.comb(self.get_n(), self.__weight)
