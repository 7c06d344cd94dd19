import logging
from dataclasses import dataclass

import numpy as np

from isocompress import constants, parallel
from isocompress.algebra.bit_string import BitString
from isocompress.codec.compressed_record import CompressedRecord
from isocompress.errors import AmbiguousRecord, CorruptRecord, DimensionError, NotInLanguage, SeedSpaceExhausted
from isocompress.isolation.predicates import isolated_mask, isolates_by_preimage_scan
from isocompress.language.language_slice import LanguageSlice
from isocompress.seed.seed_expander import SeedExpander, check_digest_width

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecodeOutcome:
    """
    A decoded string with the number of preimage candidates examined.

    Attributes
    ----------
    value : BitString
        The unique member matching the record.
    candidates_examined : int
        Preimage candidates passed through the membership oracle.
    """

    value: BitString
    candidates_examined: int


class Codec:
    """
    Compresses members of a slice to records of k + 81 bits and back.

    Each string gets its own seed: the smallest seed whose tuple holds a
    full-rank matrix isolating the string, and within it the smallest such
    position.

    Attributes
    ----------
    __expander : SeedExpander
        The expander; its seed space bounds the search.
    __jobs : int
        Worker processes for encode_all.
    """

    def __init__(self, expander: SeedExpander | None = None, jobs: int = constants.DEFAULT_JOBS):
        """
        Initialize the Codec.

        Parameters
        ----------
        expander : SeedExpander | None, optional
            The expander (default is SeedExpander()).
        jobs : int, optional
            Worker processes (default is constants.DEFAULT_JOBS).
        """
        self.__expander = expander or SeedExpander()
        self.__jobs = jobs

    def get_expander(self) -> SeedExpander:
        """Returns the expander."""
        return self.__expander

    def encode(self, x: BitString, language: LanguageSlice, k: int | None = None) -> CompressedRecord:
        """
        Compresses one member of the slice.

        Parameters
        ----------
        x : BitString
            A member of the slice.
        language : LanguageSlice
            The slice.
        k : int | None, optional
            The digest parameter (default is language.choose_k()).

        Returns
        -------
        CompressedRecord
            (n, k, s, i, h_i(x)) with the smallest qualifying seed s and position i.

        Raises
        ------
        NotInLanguage
            If x is not a member.
        SeedSpaceExhausted
            If no seed in the space qualifies.
        DigestTooWide
            If k+1 > n.
        """
        return self.encode_all([x], language, k)[0]

    def encode_all(self, strings: list[BitString], language: LanguageSlice, k: int | None = None) -> list[CompressedRecord]:
        """
        Compresses many members with one shared scan of the seed space.

        For every seed the isolation masks of its full-rank matrices are
        computed once and handed to all strings still unresolved. The records
        equal those of encoding each string on its own, whatever 'jobs' is.

        Parameters
        ----------
        strings : list[BitString]
            Members of the slice.
        language : LanguageSlice
            The slice.
        k : int | None, optional
            The digest parameter (default is language.choose_k()).

        Returns
        -------
        list[CompressedRecord]
            One record per string, in input order.

        Raises
        ------
        NotInLanguage
            If a string is not a member.
        SeedSpaceExhausted
            If some string has no qualifying seed.
        """
        n = language.get_n()
        k = language.choose_k() if k is None else k
        check_digest_width(n, k)
        for x in strings:
            if x.get_length() != n:
                raise DimensionError(f"{x} has length {x.get_length()}, expected {n}.")
            if not language.member(x):
                raise NotInLanguage(f"{x} is not a member of {language.get_spec()}.")
        if not strings:
            return []

        values = [x.get_value() for x in strings]
        if language.is_enumerable():
            language.members_array()
            language.check_density()
        seed_space = self.__expander.get_seed_space()
        size = -(-len(values) // max(self.__jobs, 1))
        chunks = [(language, k, seed_space, values[start:stop]) for start, stop in parallel.split_range(0, len(values), size)]

        found = []
        for chunk_result in parallel.map_chunks(_search_chunk, chunks, self.__jobs):
            found.extend(chunk_result)

        records = []
        for x, hit in zip(strings, found):
            if hit is None:
                raise SeedSpaceExhausted(
                    f"No seed below {seed_space} isolates {x} in {language.get_spec()} with a full-rank hash (k = {k})."
                )
            seed, index = hit
            h = self.__expander.expand(seed, n, k).get_member(index)
            records.append(CompressedRecord(n, k, seed, index, h.matvec(x)))

        _logger.info("Encoded %d strings of %s with k = %d", len(records), language.get_spec(), k)
        return records

    def decode(self, record: CompressedRecord, language: LanguageSlice) -> BitString:
        """
        Recovers the string of a record.

        Parameters
        ----------
        record : CompressedRecord
            The record.
        language : LanguageSlice
            The slice the record was encoded against.

        Returns
        -------
        BitString
            The unique member of h_i^{-1}(digest).

        Raises
        ------
        DimensionError
            If the record's n differs from the slice's.
        CorruptRecord
            If no member matches.
        AmbiguousRecord
            If several members match.
        """
        return self.decode_counted(record, language).value

    def decode_counted(self, record: CompressedRecord, language: LanguageSlice) -> DecodeOutcome:
        """
        Decodes a record and reports how many preimage candidates were examined.

        The tuple is recomputed from the record's seed without consulting the
        configured seed space, so records from a larger space still decode.

        Parameters
        ----------
        record : CompressedRecord
            The record.
        language : LanguageSlice
            The slice.

        Returns
        -------
        DecodeOutcome
            The member and the candidate count, at most 2^(n-k-1) for a full-rank h_i.

        Raises
        ------
        DimensionError
            If the record's n differs from the slice's.
        CorruptRecord
            If no member matches.
        AmbiguousRecord
            If several members match.
        """
        n = record.get_n()
        if n != language.get_n():
            raise DimensionError(f"Record has n = {n} but {language.get_spec()} has n = {language.get_n()}.")

        k = record.get_k()
        state = SeedExpander.initial_state(record.get_seed(), n, k)
        h = SeedExpander.expand_state(state, n, k).get_member(record.get_index())

        examined = 0
        survivors = []
        for block in h.preimage_blocks(record.get_digest()):
            examined += int(block.size)
            survivors.extend(int(value) for value in block[language.member_mask(block)])
            if len(survivors) > 1:
                raise AmbiguousRecord(f"{record} matches several members of {language.get_spec()}.")

        if not survivors:
            raise CorruptRecord(f"{record} matches no member of {language.get_spec()}.")

        return DecodeOutcome(BitString(survivors[0], n), examined)


def _search_chunk(language: LanguageSlice, k: int, seed_space: int, values: list[int]) -> list[tuple[int, int] | None]:
    if language.is_enumerable():
        return _shared_scan(language, k, seed_space, values)

    return [_single_scan(language, k, seed_space, value) for value in values]


def _shared_scan(language: LanguageSlice, k: int, seed_space: int, values: list[int]) -> list[tuple[int, int] | None]:
    expander = SeedExpander(seed_space)
    n = language.get_n()
    members = language.members_array()
    position = {int(member): index for index, member in enumerate(members)}
    targets = np.array([position[value] for value in values], dtype=np.int64)

    hits: list[tuple[int, int] | None] = [None] * len(values)
    unresolved = np.ones(len(values), dtype=bool)
    for seed in range(seed_space):
        for index, h in enumerate(expander.expand(seed, n, k), start=1):
            if not h.has_full_rank():
                continue
            newly = unresolved & isolated_mask(h, members)[targets]
            for slot in np.flatnonzero(newly):
                hits[slot] = (seed, index)
            unresolved &= ~newly
        if not unresolved.any():
            break

    return hits


def _single_scan(language: LanguageSlice, k: int, seed_space: int, value: int) -> tuple[int, int] | None:
    expander = SeedExpander(seed_space)
    n = language.get_n()
    x = BitString(value, n)
    for seed in range(seed_space):
        for index, h in enumerate(expander.expand(seed, n, k), start=1):
            if h.has_full_rank() and isolates_by_preimage_scan(h, x, language):
                return seed, index

    return None
