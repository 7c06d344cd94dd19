from dataclasses import dataclass
from typing import Iterator

import numpy as np

from isocompress import constants, util, validation
from isocompress.algebra.bit_string import BitString
from isocompress.errors import ConfigError, DimensionError


@dataclass(frozen=True)
class AffineSolution:
    """
    Solution set of Hx = y: 'particular' XOR any combination of 'basis'.

    Attributes
    ----------
    particular : BitString
        The solution with every free coordinate set to zero.
    basis : tuple[BitString, ...]
        A basis of ker(H), one vector per free column, in increasing column order.
    """

    particular: BitString
    basis: tuple[BitString, ...]

    def size(self) -> int:
        """Returns the number of solutions, 2^len(basis)."""
        return 1 << len(self.basis)


class GF2Matrix:
    """
    An immutable matrix over GF(2), one linear hash h(x) = Hx.

    Each row is packed into an integer with column i at bit i, the same
    convention BitString uses for positions, so H[j, i] AND x[i] summed over
    i is the parity of (row_j & x).

    Attributes
    ----------
    __rows : tuple[int, ...]
        The packed rows.
    __column_count : int
        The number of columns (the string length n).
    __rank : int | None
        The rank, computed on first request.
    """

    def __init__(self, rows: tuple[int, ...] | list[int], column_count: int):
        """
        Initialize a GF2Matrix from packed rows.

        Parameters
        ----------
        rows : tuple[int, ...] | list[int]
            The packed rows; there must be at least one.
        column_count : int
            The number of columns.

        Raises
        ------
        ConfigError
            If there are no rows, 'column_count' is less than 1, or a row has bits beyond 'column_count'.
        """
        self.__column_count = validation.is_positive(column_count, "'column_count' cannot be less than 1!")
        validation.is_positive(len(rows), "A matrix needs at least one row!")
        for row in rows:
            if row < 0 or row >> column_count:
                raise ConfigError("A row has bits outside the matrix columns!")
        self.__rows = tuple(rows)
        self.__rank = None

    @staticmethod
    def from_text(rows: list[str]) -> "GF2Matrix":
        """
        Builds a matrix from written rows such as ['1000', '0100'].

        Parameters
        ----------
        rows : list[str]
            One bit string per row, all the same length.

        Returns
        -------
        GF2Matrix
            The matrix.

        Raises
        ------
        DimensionError
            If the rows have different lengths.
        """
        parsed = [BitString.from_text(row) for row in rows]
        column_count = parsed[0].get_length()
        if any(row.get_length() != column_count for row in parsed):
            raise DimensionError("All rows of a matrix must have the same length.")

        return GF2Matrix([row.get_value() for row in parsed], column_count)

    @staticmethod
    def zeros(row_count: int, column_count: int) -> "GF2Matrix":
        """Returns the all-zeros matrix of the given shape."""
        validation.is_positive(row_count, "'row_count' cannot be less than 1!")
        return GF2Matrix([0] * row_count, column_count)

    @staticmethod
    def from_packed(value: int, row_count: int, column_count: int) -> "GF2Matrix":
        """
        Builds a matrix from a (row_count * column_count)-bit integer, row-major.

        Parameters
        ----------
        value : int
            Row j occupies bits [j * column_count, (j + 1) * column_count).
        row_count : int
            The number of rows.
        column_count : int
            The number of columns.

        Returns
        -------
        GF2Matrix
            The matrix.
        """
        mask = (1 << column_count) - 1
        rows = [(value >> (j * column_count)) & mask for j in range(row_count)]
        return GF2Matrix(rows, column_count)

    def to_packed(self) -> int:
        """Returns the row-major packed integer accepted by 'from_packed'."""
        value = 0
        for j, row in enumerate(self.__rows):
            value |= row << (j * self.__column_count)

        return value

    def get_rows(self) -> tuple[int, ...]:
        """
        Returns the packed rows.

        Returns
        -------
        rows : tuple[int, ...]
            Column i of row j at bit i of rows[j].
        """
        return self.__rows

    def get_row_count(self) -> int:
        """Returns the number of rows (the digest width k+1)."""
        return len(self.__rows)

    def get_column_count(self) -> int:
        """Returns the number of columns (the string length n)."""
        return self.__column_count

    def get_shape(self) -> tuple[int, int]:
        """Returns (rows, columns)."""
        return len(self.__rows), self.__column_count

    def get_entry(self, row: int, column: int) -> int:
        """Returns H[row, column] as 0 or 1."""
        return (self.__rows[row] >> column) & 1

    def matvec(self, x: BitString) -> BitString:
        """
        Applies the hash: returns Hx.

        Parameters
        ----------
        x : BitString
            A string of length equal to the number of columns.

        Returns
        -------
        BitString
            The digest; bit j is the parity of row j AND x.

        Raises
        ------
        DimensionError
            If the length of 'x' differs from the number of columns.
        """
        if x.get_length() != self.__column_count:
            raise DimensionError(
                f"Matrix has {self.__column_count} columns but the string has length {x.get_length()}."
            )

        value = x.get_value()
        digest = 0
        for j, row in enumerate(self.__rows):
            digest |= ((row & value).bit_count() & 1) << j

        return BitString(digest, len(self.__rows))

    def digests(self, values: np.ndarray) -> np.ndarray:
        """
        Applies the hash to many packed strings at once.

        Parameters
        ----------
        values : np.ndarray
            uint64 array of packed strings of length equal to the number of columns (at most 64).

        Returns
        -------
        np.ndarray
            uint64 array of packed digests.
        """
        values = np.asarray(values, dtype=np.uint64)
        result = np.zeros(values.shape, dtype=np.uint64)
        for j, row in enumerate(self.__rows):
            result |= util.parity64(values & np.uint64(row)) << np.uint64(j)

        return result

    def rank(self) -> int:
        """
        Returns the dimension of the row space over GF(2).

        Returns
        -------
        rank : int
            Value in [0, min(rows, columns)].
        """
        if self.__rank is None:
            _, pivots = self.__reduce(0)
            self.__rank = len(pivots)

        return self.__rank

    def has_full_rank(self) -> bool:
        """Returns True when the rank equals the number of rows."""
        return self.rank() == len(self.__rows)

    def solve_affine(self, y: BitString) -> AffineSolution | None:
        """
        Solves Hx = y.

        Parameters
        ----------
        y : BitString
            A string of length equal to the number of rows.

        Returns
        -------
        AffineSolution | None
            The reduced particular solution and a kernel basis of (columns - rank)
            vectors, or None if the system is inconsistent.

        Raises
        ------
        DimensionError
            If the length of 'y' differs from the number of rows.
        """
        self.__check_digest(y)
        reduced, pivots = self.__reduce(y.get_value())
        for row, rhs in reduced[len(pivots):]:
            if rhs:
                return None

        particular = 0
        for (row, rhs), pivot in zip(reduced, pivots):
            if rhs:
                particular |= 1 << pivot

        pivot_set = set(pivots)
        basis = []
        for free in range(self.__column_count):
            if free in pivot_set:
                continue
            vector = 1 << free
            for (row, _), pivot in zip(reduced, pivots):
                if (row >> free) & 1:
                    vector |= 1 << pivot
            basis.append(BitString(vector, self.__column_count))

        return AffineSolution(BitString(particular, self.__column_count), tuple(basis))

    def preimage_count(self, y: BitString) -> int:
        """Returns |h^{-1}(y)|: 2^(columns - rank) if solvable, else 0."""
        solution = self.solve_affine(y)
        return 0 if solution is None else solution.size()

    def enumerate_preimages(self, y: BitString) -> Iterator[BitString]:
        """
        Yields every solution of Hx = y exactly once.

        The order is the increasing integer value of the coefficient vector
        over the kernel basis, the coefficient of basis[0] being the most
        significant bit; each candidate is the particular solution XOR the
        selected basis vectors.

        Parameters
        ----------
        y : BitString
            A string of length equal to the number of rows.

        Yields
        ------
        BitString
            The preimages of 'y'.

        Raises
        ------
        DimensionError
            If the length of 'y' differs from the number of rows.
        """
        solution = self.solve_affine(y)
        if solution is None:
            return

        particular = solution.particular.get_value()
        basis = [vector.get_value() for vector in solution.basis]
        dimension = len(basis)
        for coefficients in range(1 << dimension):
            candidate = particular
            for j in range(dimension):
                if (coefficients >> (dimension - 1 - j)) & 1:
                    candidate ^= basis[j]
            yield BitString(candidate, self.__column_count)

    def preimage_blocks(self, y: BitString) -> Iterator[np.ndarray]:
        """
        Yields the preimages of 'y' as packed uint64 blocks, in the order of 'enumerate_preimages'.

        Parameters
        ----------
        y : BitString
            A string of length equal to the number of rows.

        Yields
        ------
        np.ndarray
            uint64 arrays of at most 2^constants.PREIMAGE_BLOCK_BITS packed candidates.

        Raises
        ------
        DimensionError
            If the length of 'y' differs from the number of rows, or the matrix has more than 64 columns.
        """
        if self.__column_count > constants.MAX_STRING_LENGTH:
            raise DimensionError("Packed preimage blocks need at most 64 columns.")
        solution = self.solve_affine(y)
        if solution is None:
            return

        basis = [vector.get_value() for vector in solution.basis]
        dimension = len(basis)
        low_bits = min(dimension, constants.PREIMAGE_BLOCK_BITS)
        high_bits = dimension - low_bits

        table = np.zeros(1, dtype=np.uint64)
        for j in range(dimension - 1, high_bits - 1, -1):
            table = np.concatenate([table, table ^ np.uint64(basis[j])])

        for high in range(1 << high_bits):
            offset = solution.particular.get_value()
            for j in range(high_bits):
                if (high >> (high_bits - 1 - j)) & 1:
                    offset ^= basis[j]
            yield table ^ np.uint64(offset)

    def __reduce(self, rhs: int) -> tuple[list[tuple[int, int]], list[int]]:
        # Reduced row echelon form with leftmost-first pivots; rhs bit j rides along row j.
        reduced = [(row, (rhs >> j) & 1) for j, row in enumerate(self.__rows)]
        pivots = []
        for column in range(self.__column_count):
            bit = 1 << column
            top = len(pivots)
            pivot_row = next((r for r in range(top, len(reduced)) if reduced[r][0] & bit), None)
            if pivot_row is None:
                continue
            reduced[top], reduced[pivot_row] = reduced[pivot_row], reduced[top]
            pivot_mask, pivot_rhs = reduced[top]
            for r in range(len(reduced)):
                if r != top and reduced[r][0] & bit:
                    reduced[r] = (reduced[r][0] ^ pivot_mask, reduced[r][1] ^ pivot_rhs)
            pivots.append(column)
            if len(pivots) == len(reduced):
                break

        return reduced, pivots

    def __check_digest(self, y: BitString) -> None:
        if y.get_length() != len(self.__rows):
            raise DimensionError(f"Matrix has {len(self.__rows)} rows but the digest has length {y.get_length()}.")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented

        return self.__column_count == other.get_column_count() and self.__rows == other.get_rows()

    def __hash__(self) -> int:
        return hash((self.__column_count, self.__rows))

    def __repr__(self) -> str:
        written = [BitString(row, self.__column_count).to_text() for row in self.__rows]
        return f"GF2Matrix({written})"
