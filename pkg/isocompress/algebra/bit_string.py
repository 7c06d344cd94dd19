from isocompress import validation, constants
from isocompress.errors import ConfigError, DimensionError


class BitString:
    """
    A fixed-length binary string.

    Position 0 is the leftmost character of the written string. The bits are
    packed into a Python integer with position p stored at bit p, so the
    byte image puts position p into byte p // 8, bit p % 8 (bit 0 = least
    significant).

    Attributes
    ----------
    __length : int
        The number of positions.
    __value : int
        The packed bits; no bit at or beyond '__length' is set.
    """

    def __init__(self, value: int, length: int):
        """
        Initialize a BitString from its packed value.

        Parameters
        ----------
        value : int
            The packed bits (position p at bit p).
        length : int
            The number of positions.

        Raises
        ------
        ConfigError
            If 'length' is less than 1, or 'value' is negative or has bits beyond 'length'.
        """
        self.__length = validation.is_positive(length, "'length' cannot be less than 1!")
        validation.is_non_negative(value, "'value' cannot be negative!")
        if value >> length:
            raise ConfigError("'value' has bits beyond 'length'!")
        self.__value = value

    @staticmethod
    def from_text(text: str) -> "BitString":
        """
        Parses a written string such as '1011'.

        Parameters
        ----------
        text : str
            Characters '0' and '1', leftmost = position 0.

        Returns
        -------
        BitString
            The parsed string.

        Raises
        ------
        ConfigError
            If the text is empty or not binary.
        """
        validation.is_bit_text(text, "'text' must be a non-empty string of 0 and 1!")
        return BitString(int(text[::-1], 2), len(text))

    @staticmethod
    def from_bytes(data: bytes, length: int) -> "BitString":
        """
        Unpacks a byte image produced by 'to_bytes'.

        Parameters
        ----------
        data : bytes
            Exactly ceil(length / 8) bytes.
        length : int
            The number of positions.

        Returns
        -------
        BitString
            The unpacked string.

        Raises
        ------
        DimensionError
            If the number of bytes is wrong or padding bits are set.
        """
        if len(data) != BitString.byte_count(length):
            raise DimensionError(
                f"Expected {BitString.byte_count(length)} bytes for {length} bits, got {len(data)}."
            )
        value = int.from_bytes(data, "little")
        if value >> length:
            raise DimensionError("Padding bits beyond the string length are set.")

        return BitString(value, length)

    @staticmethod
    def from_lexicographic_rank(rank: int, length: int) -> "BitString":
        """
        Returns the string at 'rank' in the lexicographic order of {0,1}^length.

        Parameters
        ----------
        rank : int
            Value in [0, 2^length).
        length : int
            The number of positions.

        Returns
        -------
        BitString
            The string whose written form is 'rank' in binary, zero-padded.
        """
        return BitString.from_text(format(rank, f"0{length}b"))

    @staticmethod
    def byte_count(length: int) -> int:
        """Returns the number of bytes needed for 'length' packed bits."""
        return (length + constants.BITS_PER_BYTE - 1) // constants.BITS_PER_BYTE

    def get_length(self) -> int:
        """
        Returns the number of positions.

        Returns
        -------
        length : int
            The length.
        """
        return self.__length

    def get_value(self) -> int:
        """
        Returns the packed bits.

        Returns
        -------
        value : int
            Position p at bit p.
        """
        return self.__value

    def get_bit(self, position: int) -> int:
        """
        Returns the bit at a position.

        Parameters
        ----------
        position : int
            Value in [0, length).

        Returns
        -------
        int
            0 or 1.
        """
        validation.is_in_range(position, 0, self.__length - 1, "'position' out of range!")
        return (self.__value >> position) & 1

    def to_text(self) -> str:
        """Returns the written form, position 0 first."""
        return format(self.__value, f"0{self.__length}b")[::-1]

    def to_bytes(self) -> bytes:
        """Returns the packed byte image (position p in byte p // 8, bit p % 8)."""
        return self.__value.to_bytes(BitString.byte_count(self.__length), "little")

    def lexicographic_key(self) -> int:
        """Returns the rank of the string in the lexicographic order of its length."""
        return int(self.to_text(), 2)

    def xor(self, other: "BitString") -> "BitString":
        """
        Bitwise exclusive or.

        Parameters
        ----------
        other : BitString
            A string of the same length.

        Returns
        -------
        BitString
            The sum over GF(2).

        Raises
        ------
        DimensionError
            If the lengths differ.
        """
        if other.get_length() != self.__length:
            raise DimensionError(f"Cannot xor lengths {self.__length} and {other.get_length()}.")

        return BitString(self.__value ^ other.get_value(), self.__length)

    def __xor__(self, other: "BitString") -> "BitString":
        return self.xor(other)

    def __len__(self) -> int:
        return self.__length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented

        return self.__length == other.get_length() and self.__value == other.get_value()

    def __lt__(self, other: "BitString") -> bool:
        return (self.__length, self.lexicographic_key()) < (other.get_length(), other.lexicographic_key())

    def __hash__(self) -> int:
        return hash((self.__length, self.__value))

    def __repr__(self) -> str:
        return f"BitString('{self.to_text()}')"

    def __str__(self) -> str:
        return self.to_text()
