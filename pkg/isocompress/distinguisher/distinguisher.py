import logging
import threading
from dataclasses import dataclass

import numpy as np

from isocompress import constants, util
from isocompress.algebra.bit_string import BitString
from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.codec.compressed_record import CompressedRecord, compressed_bits
from isocompress.enuns.predicate_variant import PredicateVariant
from isocompress.enuns.verdict import Verdict
from isocompress.errors import DimensionError, EmptyLanguage, EnumerationUnsupported, NotInLanguage
from isocompress.isolation.predicates import smallest_isolating_index
from isocompress.isolation.seed_search import CoveringSeed, find_covering_seed
from isocompress.language.language_slice import LanguageSlice
from isocompress.seed.seed_expander import SeedExpander, check_digest_width

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescriptorReport:
    """
    Description-length accounting of one descriptor.

    Attributes
    ----------
    bits : int
        Payload size, k + 81.
    log_size : int
        ceil(log2 |A^{=n}|).
    overhead : int
        bits - log_size.
    """

    bits: int
    log_size: int
    overhead: int


class Distinguisher:
    """
    Builds and runs distinguishing descriptors p = (k, s, i, h_i(x)).

    One covering tuple (predicate T) serves every member of a slice, so all
    descriptors of one (slice, k) share their seed. The tuple is searched once
    per (spec, n, k, seed space) and cached; concurrent callers see the value
    of the first completed search.

    A descriptor accepts a candidate v iff v is a member of the slice and
    h_i(v) equals the stored digest.

    Attributes
    ----------
    __expander : SeedExpander
        The expander; its seed space bounds the tuple search.
    __jobs : int
        Worker processes for the tuple search.
    __cache : dict[tuple[str, int, int, int], CoveringSeed]
        Covering tuples by (spec, n, k, seed space).
    __key_locks : dict[tuple[str, int, int, int], threading.Lock]
        One lock per cache key; the search for a key runs at most once.
    __lock : threading.Lock
        Guards '__key_locks'.
    """

    def __init__(self, expander: SeedExpander | None = None, jobs: int = constants.DEFAULT_JOBS):
        """
        Initialize the Distinguisher.

        Parameters
        ----------
        expander : SeedExpander | None, optional
            The expander (default is SeedExpander()).
        jobs : int, optional
            Worker processes (default is constants.DEFAULT_JOBS).
        """
        self.__expander = expander or SeedExpander()
        self.__jobs = jobs
        self.__cache = {}
        self.__key_locks = {}
        self.__lock = threading.Lock()

    def covering_tuple(self, language: LanguageSlice, k: int) -> CoveringSeed:
        """
        Returns the cached smallest seed whose tuple satisfies T for the slice.

        Raises
        ------
        SeedSpaceExhausted
            If no seed in the space qualifies.
        """
        key = (language.get_spec(), language.get_n(), k, self.__expander.get_seed_space())
        with self.__lock:
            key_lock = self.__key_locks.setdefault(key, threading.Lock())

        with key_lock:
            if key not in self.__cache:
                self.__cache[key] = find_covering_seed(
                    language, k, PredicateVariant.T, self.__expander, self.__jobs
                )
                _logger.debug("Cached covering seed %s for %s", self.__cache[key].seed, key)

            return self.__cache[key]

    def build_descriptor(self, x: BitString, language: LanguageSlice, k: int | None = None) -> CompressedRecord:
        """
        Builds the descriptor of a member.

        Parameters
        ----------
        x : BitString
            A member of the slice.
        language : LanguageSlice
            An enumerable slice.
        k : int | None, optional
            The digest parameter (default is language.choose_k()).

        Returns
        -------
        CompressedRecord
            (k, s, i, h_i(x)) with s the slice's covering seed and i the
            smallest position isolating x.

        Raises
        ------
        NotInLanguage
            If x is not a member.
        SeedSpaceExhausted
            If no covering seed exists in the space.
        """
        n = language.get_n()
        if x.get_length() != n:
            raise DimensionError(f"{x} has length {x.get_length()}, expected {n}.")
        if not language.member(x):
            raise NotInLanguage(f"{x} is not a member of {language.get_spec()}.")

        k = language.choose_k() if k is None else check_digest_width(n, k)
        covering = self.covering_tuple(language, k)
        index = smallest_isolating_index(covering.hashes, x, language)
        digest = covering.hashes.get_member(index).matvec(x)

        return CompressedRecord(n, k, covering.seed.get_value(), index, digest)

    def run_descriptor(self, descriptor: CompressedRecord, v: BitString, language: LanguageSlice) -> Verdict:
        """
        Runs a descriptor on a candidate.

        Parameters
        ----------
        descriptor : CompressedRecord
            The descriptor.
        v : BitString
            The candidate, of length n.
        language : LanguageSlice
            The slice, used as membership oracle.

        Returns
        -------
        Verdict
            ACCEPT iff v is a member and h_i(v) equals the digest.

        Raises
        ------
        DimensionError
            If the lengths do not match.
        """
        if v.get_length() != descriptor.get_n():
            raise DimensionError(f"Candidate has length {v.get_length()}, descriptor has n = {descriptor.get_n()}.")

        h = _descriptor_hash(descriptor)
        if language.member(v) and h.matvec(v) == descriptor.get_digest():
            return Verdict.ACCEPT

        return Verdict.REJECT

    def verify_unique(self, descriptor: CompressedRecord, language: LanguageSlice, full_sweep: bool = False) -> bool:
        """
        Checks that exactly one string is accepted.

        Parameters
        ----------
        descriptor : CompressedRecord
            The descriptor.
        language : LanguageSlice
            The slice.
        full_sweep : bool, optional
            Run over all of {0,1}^n instead of the members (default is False).

        Returns
        -------
        bool
            True iff exactly one candidate is accepted.

        Raises
        ------
        EnumerationUnsupported
            If the members cannot be enumerated, or a full sweep is asked
            for n above constants.FULL_SWEEP_CAP.
        DimensionError
            If the descriptor's n differs from the slice's.
        """
        n = descriptor.get_n()
        if n != language.get_n():
            raise DimensionError(f"Descriptor has n = {n} but {language.get_spec()} has n = {language.get_n()}.")

        h = _descriptor_hash(descriptor)
        target = np.uint64(descriptor.get_digest().get_value())
        if full_sweep:
            if n > constants.FULL_SWEEP_CAP:
                raise EnumerationUnsupported(f"A full sweep needs n <= {constants.FULL_SWEEP_CAP}, got {n}.")
            candidates = np.arange(1 << n, dtype=np.uint64)
            accepted = language.member_mask(candidates) & (h.digests(candidates) == target)
        else:
            members = language.members_array()
            accepted = h.digests(members) == target

        return int(np.count_nonzero(accepted)) == 1

    def describe(self, descriptor: CompressedRecord, language: LanguageSlice) -> DescriptorReport:
        """
        Reports the payload against ceil(log2 |A^{=n}|).

        Raises
        ------
        EmptyLanguage
            If the slice has no members.
        """
        bits = descriptor_bits(descriptor)
        size = language.cardinality()
        if size == 0:
            raise EmptyLanguage(f"The slice {language.get_spec()} has no members.")

        log_size = util.ceil_log2(size)
        return DescriptorReport(bits, log_size, bits - log_size)


def descriptor_bits(descriptor: CompressedRecord) -> int:
    """Returns the descriptor's payload in bits, k + 81."""
    return compressed_bits(descriptor)


def _descriptor_hash(descriptor: CompressedRecord) -> GF2Matrix:
    n, k = descriptor.get_n(), descriptor.get_k()
    hashes = SeedExpander.expand_state(SeedExpander.initial_state(descriptor.get_seed(), n, k), n, k)
    return hashes.get_member(descriptor.get_index())
