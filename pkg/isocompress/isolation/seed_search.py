import logging
from dataclasses import dataclass

from isocompress import constants, parallel
from isocompress.algebra.hash_tuple import HashTuple
from isocompress.enuns.predicate_variant import PredicateVariant
from isocompress.errors import SeedSpaceExhausted
from isocompress.isolation.predicates import satisfies
from isocompress.language.language_slice import LanguageSlice
from isocompress.seed.seed import Seed
from isocompress.seed.seed_expander import SeedExpander, check_digest_width

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoveringSeed:
    """
    The smallest seed whose tuple satisfies a predicate, with that tuple.

    Attributes
    ----------
    seed : Seed
        The seed.
    hashes : HashTuple
        expand(seed, n, k).
    """

    seed: Seed
    hashes: HashTuple


def find_covering_seed(
        language: LanguageSlice,
        k: int,
        variant: PredicateVariant,
        expander: SeedExpander | None = None,
        jobs: int = constants.DEFAULT_JOBS
) -> CoveringSeed:
    """
    Searches the seed space in increasing order for a tuple satisfying the predicate.

    The space is cut into chunks; each window of 'jobs' chunks is searched
    in parallel and the first chunk (in seed order) with a hit wins, so the
    returned seed is the minimum qualifying value whatever 'jobs' is.

    Parameters
    ----------
    language : LanguageSlice
        An enumerable slice.
    k : int
        The digest parameter.
    variant : PredicateVariant
        T or T-tilde.
    expander : SeedExpander | None, optional
        The expander and its seed space (default is SeedExpander()).
    jobs : int, optional
        Worker processes (default is constants.DEFAULT_JOBS).

    Returns
    -------
    CoveringSeed
        The smallest qualifying seed and its tuple.

    Raises
    ------
    SeedSpaceExhausted
        If no seed in the space qualifies.
    DigestTooWide
        If k+1 > n.
    """
    expander = expander or SeedExpander()
    seed_space = expander.get_seed_space()
    n = language.get_n()
    check_digest_width(n, k)
    # Materialise the members once, before the slice is shipped to workers.
    language.members_array()

    with parallel.ChunkRunner(jobs) as runner:
        window = runner.get_jobs() * constants.SEARCH_CHUNK_SIZE
        for first in range(0, seed_space, window):
            ranges = parallel.split_range(first, min(first + window, seed_space), constants.SEARCH_CHUNK_SIZE)
            batch = [(language, k, variant, seed_space, start, stop) for start, stop in ranges]
            for found in runner.map(_first_satisfying_seed, batch):
                if found is not None:
                    _logger.debug("Seed %d satisfies %s for %s", found, variant.value, language.get_spec())
                    return CoveringSeed(expander.make_seed(found), expander.expand(found, n, k))

    raise SeedSpaceExhausted(
        f"No seed below {seed_space} yields a tuple satisfying {variant.value} for {language.get_spec()} with k = {k}."
    )


def _first_satisfying_seed(
        language: LanguageSlice, k: int, variant: PredicateVariant, seed_space: int, start: int, stop: int
) -> int | None:
    expander = SeedExpander(seed_space)
    n = language.get_n()
    for seed in range(start, stop):
        if satisfies(variant, expander.expand(seed, n, k), language):
            return seed

    return None
