from isocompress import constants, validation
from isocompress.algebra.bit_string import BitString
from isocompress.errors import DimensionError
from isocompress.seed.seed_expander import check_digest_width


class CompressedRecord:
    """
    The payload (k, n, s, i, h_i(x)): a compressed string and a distinguishing descriptor.

    Attributes
    ----------
    __n : int
        The string length.
    __k : int
        The digest parameter; the digest has k+1 bits.
    __seed : int
        The expander seed (stored in a 64-bit field).
    __index : int
        The 1-based tuple position i in [1, k+1] (stored in a 16-bit field).
    __digest : BitString
        h_i(x), of length k+1.
    """

    def __init__(self, n: int, k: int, seed: int, index: int, digest: BitString):
        """
        Initialize a CompressedRecord.

        Parameters
        ----------
        n : int
            The string length.
        k : int
            The digest parameter.
        seed : int
            The seed, in [0, 2^64).
        index : int
            The tuple position, in [1, k+1].
        digest : BitString
            The digest, of length k+1.

        Raises
        ------
        ConfigError
            If the seed or the index is out of range.
        DigestTooWide
            If k+1 > n.
        DimensionError
            If the digest length is not k+1.
        """
        self.__n = n
        self.__k = check_digest_width(n, k)
        self.__seed = validation.is_in_range(seed, 0, constants.WORD_MASK, "'seed' must fit 64 bits!")
        self.__index = validation.is_in_range(index, 1, k + 1, "'index' must lie in [1, k+1]!")
        if digest.get_length() != k + 1:
            raise DimensionError(f"Digest has length {digest.get_length()}, expected k+1 = {k + 1}.")
        self.__digest = digest

    def get_n(self) -> int:
        """Returns the string length."""
        return self.__n

    def get_k(self) -> int:
        """Returns the digest parameter."""
        return self.__k

    def get_seed(self) -> int:
        """Returns the seed value."""
        return self.__seed

    def get_index(self) -> int:
        """Returns the 1-based tuple position."""
        return self.__index

    def get_digest(self) -> BitString:
        """Returns the digest h_i(x)."""
        return self.__digest

    def with_digest(self, digest: BitString) -> "CompressedRecord":
        """Returns a copy carrying another digest."""
        return CompressedRecord(self.__n, self.__k, self.__seed, self.__index, digest)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompressedRecord):
            return NotImplemented

        return (
            self.__n == other.get_n()
            and self.__k == other.get_k()
            and self.__seed == other.get_seed()
            and self.__index == other.get_index()
            and self.__digest == other.get_digest()
        )

    def __hash__(self) -> int:
        return hash((self.__n, self.__k, self.__seed, self.__index, self.__digest))

    def __repr__(self) -> str:
        return (
            f"CompressedRecord(n={self.__n}, k={self.__k}, seed={self.__seed}, "
            f"index={self.__index}, digest='{self.__digest}')"
        )


def compressed_bits(record: CompressedRecord) -> int:
    """
    Payload size of a record in bits: (k+1) + 64 + 16 = k + 81.

    The fixed 80 bits of seed and index fields stand in for the O(log n)
    term; n and k are carried once per archive, not per record.

    Parameters
    ----------
    record : CompressedRecord
        The record.

    Returns
    -------
    int
        k + 81.
    """
    return record.get_k() + 1 + constants.RECORD_OVERHEAD_BITS
