import logging
from abc import ABC, abstractmethod
from typing import Iterator

import numpy as np

from isocompress import constants, util, validation
from isocompress.algebra.bit_string import BitString
from isocompress.errors import DimensionError, EmptyLanguage, EnumerationUnsupported
from isocompress.seed.seed_expander import check_digest_width

_logger = logging.getLogger(__name__)


class LanguageSlice(ABC):
    """
    Abstract representation of a slice A^{=n}: the members of A of length n.

    Subclasses decide membership; enumeration falls back to a lexicographic
    scan of {0,1}^n when a subclass has no native enumerator and n is within
    the scan cap.

    Attributes
    ----------
    __n : int
        The string length.
    __spec : str
        The predicate identifier and parameters, e.g. 'hamming:8:1'.
    __scan_cap : int
        The largest n for which a full scan of {0,1}^n is allowed.
    __members : np.ndarray | None
        Packed members in lexicographic order, computed on first request.
    __cardinality : int | None
        |A^{=n}|, computed on first request.
    """

    SCAN_BLOCK_BITS = 16
    """log2 of the number of strings tested per block of a full scan.
    """

    def __init__(self, n: int, spec: str, scan_cap: int = constants.DEFAULT_SCAN_CAP):
        """
        Initialize the LanguageSlice.

        Parameters
        ----------
        n : int
            The string length, in [1, constants.MAX_STRING_LENGTH].
        spec : str
            The predicate identifier and parameters.
        scan_cap : int, optional
            The largest n for which a full scan is allowed (default is constants.DEFAULT_SCAN_CAP).

        Raises
        ------
        ConfigError
            If 'n' is out of range, 'spec' is empty or 'scan_cap' is negative.
        """
        self.__n = validation.is_in_range(
            n, 1, constants.MAX_STRING_LENGTH, f"'n' must lie in [1, {constants.MAX_STRING_LENGTH}]!"
        )
        self.__spec = validation.is_empty(spec, "'spec' cannot be empty!")
        self.__scan_cap = validation.is_non_negative(scan_cap, "'scan_cap' cannot be negative!")
        self.__members = None
        self.__cardinality = None

    @abstractmethod
    def contains_value(self, value: int) -> bool:
        """
        Decides membership of a packed string of length n.

        Parameters
        ----------
        value : int
            The packed string.

        Returns
        -------
        bool
            True iff the string is in A^{=n}.
        """
        pass

    def native_members(self) -> np.ndarray | None:
        """
        Returns the packed members in lexicographic order, or None when the
        slice has no enumerator of its own.
        """
        return None

    def native_cardinality(self) -> int | None:
        """Returns |A^{=n}| when the slice can count without enumerating, else None."""
        return None

    def member(self, x: BitString) -> bool:
        """
        Membership oracle.

        Parameters
        ----------
        x : BitString
            A string of length n.

        Returns
        -------
        bool
            True iff x is in A^{=n}.

        Raises
        ------
        DimensionError
            If the length of 'x' differs from n.
        """
        if x.get_length() != self.__n:
            raise DimensionError(f"Slice has length {self.__n} but the string has length {x.get_length()}.")

        return self.contains_value(x.get_value())

    def member_mask(self, values: np.ndarray) -> np.ndarray:
        """
        Membership of many packed strings at once.

        Parameters
        ----------
        values : np.ndarray
            uint64 array of packed strings of length n.

        Returns
        -------
        np.ndarray
            Boolean array, True where the string is a member.
        """
        values = np.asarray(values, dtype=np.uint64)
        return np.fromiter((self.contains_value(int(value)) for value in values), dtype=bool, count=values.size)

    def is_enumerable(self) -> bool:
        """Returns True when the slice has a native enumerator or n is within the scan cap."""
        return self.__members is not None or self.has_native_enumerator() or self.__n <= self.__scan_cap

    def has_native_enumerator(self) -> bool:
        """Returns True when the subclass enumerates without a full scan."""
        return False

    def members_array(self) -> np.ndarray:
        """
        Returns the packed members in lexicographic order.

        Returns
        -------
        np.ndarray
            uint64 array; do not modify.

        Raises
        ------
        EnumerationUnsupported
            If the slice has no native enumerator and n exceeds the scan cap.
        """
        if self.__members is None:
            members = self.native_members()
            if members is None:
                members = self.__scan()
            members = np.asarray(members, dtype=np.uint64)
            members.setflags(write=False)
            self.__members = members

        return self.__members

    def enumerate_members(self) -> Iterator[BitString]:
        """
        Yields A^{=n} in lexicographic order.

        Yields
        ------
        BitString
            The members.

        Raises
        ------
        EnumerationUnsupported
            If the slice has no native enumerator and n exceeds the scan cap.
        """
        for value in self.members_array():
            yield BitString(int(value), self.__n)

    def cardinality(self) -> int:
        """
        Returns |A^{=n}|, cached after the first call.

        Raises
        ------
        EnumerationUnsupported
            If the slice can neither count nor enumerate.
        """
        if self.__cardinality is None:
            counted = self.native_cardinality()
            self.__cardinality = counted if counted is not None else int(self.members_array().size)

        return self.__cardinality

    def choose_k(self) -> int:
        """
        Returns k = ceil(log2 |A^{=n}|), 0 for a single member.

        Returns
        -------
        k : int
            The digest parameter; digests have k+1 bits.

        Raises
        ------
        EmptyLanguage
            If the slice has no members.
        DigestTooWide
            If k+1 > n.
        """
        size = self.cardinality()
        if size == 0:
            raise EmptyLanguage(f"The slice {self.__spec} has no members.")

        return check_digest_width(self.__n, util.ceil_log2(size))

    def check_density(self) -> bool:
        """
        Checks the sparsity hypothesis |A^{=n}| <= 2^n / n^2 and logs a warning when it fails.

        Returns
        -------
        bool
            True when the hypothesis holds.
        """
        holds = self.cardinality() * self.__n * self.__n <= 2 ** self.__n
        if not holds:
            _logger.warning(
                "Slice %s has %d members, above 2^n / n^2; round trips still hold, the time bound does not.",
                self.__spec, self.cardinality()
            )

        return holds

    def get_n(self) -> int:
        """Returns the string length."""
        return self.__n

    def get_spec(self) -> str:
        """Returns the predicate identifier and parameters."""
        return self.__spec

    def get_scan_cap(self) -> int:
        """Returns the largest n allowed for a full scan."""
        return self.__scan_cap

    def __scan(self) -> np.ndarray:
        if self.__n > self.__scan_cap:
            raise EnumerationUnsupported(
                f"Slice {self.__spec} has no enumerator and n = {self.__n} exceeds the scan cap {self.__scan_cap}."
            )

        _logger.debug("Scanning all 2^%d strings of %s", self.__n, self.__spec)
        block_bits = min(self.__n, LanguageSlice.SCAN_BLOCK_BITS)
        found = []
        for start in range(0, 1 << self.__n, 1 << block_bits):
            ranks = np.arange(start, start + (1 << block_bits), dtype=np.uint64)
            values = reverse_bits(ranks, self.__n)
            found.append(values[self.member_mask(values)])

        return np.concatenate(found)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.__spec}')"


def reverse_bits(values: np.ndarray, length: int) -> np.ndarray:
    """
    Reverses the lowest 'length' bits of every element.

    Maps lexicographic ranks to packed strings and back.

    Parameters
    ----------
    values : np.ndarray
        uint64 array.
    length : int
        The number of bits.

    Returns
    -------
    np.ndarray
        uint64 array.
    """
    values = np.asarray(values, dtype=np.uint64)
    result = np.zeros(values.shape, dtype=np.uint64)
    one = np.uint64(1)
    for position in range(length):
        bit = (values >> np.uint64(length - 1 - position)) & one
        result |= bit << np.uint64(position)

    return result


def sort_lexicographic(values: np.ndarray, length: int) -> np.ndarray:
    """Returns packed strings sorted in the lexicographic order of their written form."""
    values = np.asarray(values, dtype=np.uint64)
    return values[np.argsort(reverse_bits(values, length), kind="stable")]
