from typing import Iterator

from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.errors import DimensionError


class HashTuple:
    """
    An ordered tuple (h_1, ..., h_{k+1}) of hash matrices of one shape.

    Attributes
    ----------
    __members : tuple[GF2Matrix, ...]
        The matrices; their number equals their row count k+1.
    """

    def __init__(self, members: list[GF2Matrix] | tuple[GF2Matrix, ...]):
        """
        Initialize a HashTuple.

        Parameters
        ----------
        members : list[GF2Matrix] | tuple[GF2Matrix, ...]
            Exactly k+1 matrices, each with k+1 rows and the same column count.

        Raises
        ------
        DimensionError
            If the tuple is empty, the shapes differ, or the count differs from the row count.
        """
        if not members:
            raise DimensionError("A hash tuple needs at least one matrix.")
        shape = members[0].get_shape()
        if any(member.get_shape() != shape for member in members):
            raise DimensionError("All matrices of a hash tuple must have the same shape.")
        if len(members) != shape[0]:
            raise DimensionError(f"A tuple of {shape[0]}-row matrices must have {shape[0]} members, got {len(members)}.")
        self.__members = tuple(members)

    def get_member(self, index: int) -> GF2Matrix:
        """
        Returns h_index.

        Parameters
        ----------
        index : int
            1-based position in [1, k+1].

        Returns
        -------
        GF2Matrix
            The matrix.

        Raises
        ------
        DimensionError
            If the index is out of range.
        """
        if not 1 <= index <= len(self.__members):
            raise DimensionError(f"Tuple index {index} outside [1, {len(self.__members)}].")

        return self.__members[index - 1]

    def get_members(self) -> tuple[GF2Matrix, ...]:
        """Returns the matrices in order."""
        return self.__members

    def get_digest_width(self) -> int:
        """Returns k+1."""
        return len(self.__members)

    def get_length(self) -> int:
        """Returns the string length n the matrices hash."""
        return self.__members[0].get_column_count()

    def all_full_rank(self) -> bool:
        """Returns True when every member has rank k+1."""
        return all(member.has_full_rank() for member in self.__members)

    def __iter__(self) -> Iterator[GF2Matrix]:
        return iter(self.__members)

    def __len__(self) -> int:
        return len(self.__members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HashTuple):
            return NotImplemented

        return self.__members == other.get_members()

    def __hash__(self) -> int:
        return hash(self.__members)
