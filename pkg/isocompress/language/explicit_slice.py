import logging

import numpy as np

from isocompress import constants, util
from isocompress.algebra.bit_string import BitString
from isocompress.errors import ConfigError, DimensionError, IngestError
from isocompress.language.language_slice import LanguageSlice, sort_lexicographic

_logger = logging.getLogger(__name__)


class ExplicitSlice(LanguageSlice):
    """
    A slice given by the list of its members.

    Attributes
    ----------
    __values : np.ndarray
        Packed members in lexicographic order.
    __lookup : frozenset[int]
        The packed members, for single-string membership.
    """

    def __init__(
            self,
            members: list[BitString],
            n: int,
            spec: str | None = None,
            scan_cap: int = constants.DEFAULT_SCAN_CAP
    ):
        """
        Initialize the ExplicitSlice.

        Parameters
        ----------
        members : list[BitString]
            The distinct members, all of length n (may be empty).
        n : int
            The string length.
        spec : str | None, optional
            The spec text (default is 'explicit:<inline>').
        scan_cap : int, optional
            The scan cap (default is constants.DEFAULT_SCAN_CAP).

        Raises
        ------
        DimensionError
            If a member has a length other than n.
        IngestError
            If a member occurs twice.
        """
        super().__init__(n, spec or "explicit:<inline>", scan_cap)
        for member in members:
            if member.get_length() != n:
                raise DimensionError(f"Member {member} does not have length {n}.")
        lookup = frozenset(member.get_value() for member in members)
        if len(lookup) != len(members):
            raise IngestError("Explicit member list contains duplicates.")
        self.__lookup = lookup
        self.__values = sort_lexicographic(np.fromiter(lookup, dtype=np.uint64, count=len(lookup)), n)

    @staticmethod
    def load(path: str, n: int | None = None, scan_cap: int = constants.DEFAULT_SCAN_CAP) -> "ExplicitSlice":
        """
        Reads a member file: UTF-8 text, one {0,1}-string per line.

        Parameters
        ----------
        path : str
            The file path.
        n : int | None, optional
            The string length; required when the file has no members (default is None).
        scan_cap : int, optional
            The scan cap (default is constants.DEFAULT_SCAN_CAP).

        Returns
        -------
        ExplicitSlice
            The slice.

        Raises
        ------
        IngestError
            If the file is missing, a line is not binary, lengths differ, a
            string repeats, or the file is empty and no n is given.
        """
        lines = [line.strip() for line in util.read_txt(path)]
        lines = [line for line in lines if line]
        members = []
        for number, line in enumerate(lines, start=1):
            try:
                members.append(BitString.from_text(line))
            except ConfigError as error:
                raise IngestError(f"{path}:{number}: not a binary string.") from error

        lengths = {member.get_length() for member in members}
        if n is not None:
            lengths.add(n)
        if len(lengths) != 1:
            if not lengths:
                raise IngestError(f"{path}: empty member file needs an explicit length.")
            raise IngestError(f"{path}: members have different lengths {sorted(lengths)}.")

        spec = f"explicit:{path}" if n is None else f"explicit:{path}:{n}"
        try:
            language = ExplicitSlice(members, lengths.pop(), spec, scan_cap)
        except DimensionError as error:
            raise IngestError(str(error)) from error

        _logger.info("Loaded %d members of length %d from %s", len(members), language.get_n(), path)
        return language

    def contains_value(self, value: int) -> bool:
        return value in self.__lookup

    def member_mask(self, values: np.ndarray) -> np.ndarray:
        return np.isin(np.asarray(values, dtype=np.uint64), self.__values)

    def native_members(self) -> np.ndarray:
        return self.__values

    def has_native_enumerator(self) -> bool:
        return True

    def native_cardinality(self) -> int:
        return int(self.__values.size)
