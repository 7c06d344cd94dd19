import logging
from dataclasses import dataclass

from isocompress import constants, parallel, util, validation
from isocompress.enuns.predicate_variant import PredicateVariant
from isocompress.errors import ConfigError
from isocompress.isolation.predicates import satisfies
from isocompress.language.language_slice import LanguageSlice
from isocompress.seed.seed_expander import SeedExpander, check_digest_width

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageEstimate:
    """
    Fraction of sampled tuples that satisfy a predicate.

    Attributes
    ----------
    variant : PredicateVariant
        The predicate.
    successes : int
        Number of satisfying tuples.
    trials : int
        Number of tuples sampled.
    estimate : float
        successes / trials.
    stderr : float
        Binomial standard error of the estimate.
    bound : float
        The lower bound the probability should meet: 1/2 for T, 1/3 for T-tilde.
    """

    variant: PredicateVariant
    successes: int
    trials: int
    estimate: float
    stderr: float
    bound: float

    def meets_bound(self, sigmas: float = constants.SIGMA_TOLERANCE) -> bool:
        """Returns True when estimate >= bound - sigmas * stderr."""
        return self.estimate >= self.bound - sigmas * self.stderr


def lower_bound(variant: PredicateVariant) -> float:
    """Returns the probability bound a random tuple meets for 'variant'."""
    if variant is PredicateVariant.T_TILDE:
        return constants.FULL_RANK_COVERAGE_BOUND

    return constants.COVERAGE_BOUND


def estimate_coverage_probability(
        language: LanguageSlice,
        k: int,
        variant: PredicateVariant,
        trials: int,
        mc_seed: int,
        jobs: int = constants.DEFAULT_JOBS
) -> CoverageEstimate:
    """
    Monte Carlo estimate of Prob[predicate(random tuple)].

    Trial t draws its tuple from its own sub-stream of mc_seed, so the
    result depends only on (mc_seed, trials), never on 'jobs'.

    Parameters
    ----------
    language : LanguageSlice
        An enumerable slice.
    k : int
        The digest parameter.
    variant : PredicateVariant
        T or T-tilde.
    trials : int
        Number of tuples to sample.
    mc_seed : int
        The experiment seed.
    jobs : int, optional
        Worker processes (default is constants.DEFAULT_JOBS).

    Returns
    -------
    CoverageEstimate
        The estimate with its binomial standard error.

    Raises
    ------
    ConfigError
        If 'trials' is less than 1.
    DigestTooWide
        If k+1 > n.
    """
    if trials < 1:
        raise ConfigError("'trials' cannot be less than 1!")
    check_digest_width(language.get_n(), k)
    _warn_if_bound_inapplicable(language, k)

    chunks = [
        (language, k, variant, mc_seed, start, stop)
        for start, stop in parallel.split_range(0, trials, _chunk_size(trials, jobs))
    ]
    successes = sum(parallel.map_chunks(_count_trial_successes, chunks, jobs))
    _logger.info("%s: %d of %d random tuples satisfy %s", language.get_spec(), successes, trials, variant.value)

    return _estimate(variant, successes, trials)


def estimate_seed_coverage(
        language: LanguageSlice,
        k: int,
        variant: PredicateVariant,
        seed_count: int,
        seed_space: int = constants.DEFAULT_SEED_SPACE,
        jobs: int = constants.DEFAULT_JOBS
) -> CoverageEstimate:
    """
    Exact fraction of the seeds 0 .. seed_count-1 whose expanded tuple satisfies the predicate.

    Measures how closely the expander's seed space reproduces the
    probability of a uniformly random tuple.

    Parameters
    ----------
    language : LanguageSlice
        An enumerable slice.
    k : int
        The digest parameter.
    variant : PredicateVariant
        T or T-tilde.
    seed_count : int
        Number of seeds, at most 'seed_space'.
    seed_space : int, optional
        The expander's seed space (default is constants.DEFAULT_SEED_SPACE).
    jobs : int, optional
        Worker processes (default is constants.DEFAULT_JOBS).

    Returns
    -------
    CoverageEstimate
        The fraction with its binomial standard error.

    Raises
    ------
    ConfigError
        If 'seed_count' is outside [1, seed_space].
    """
    validation.is_in_range(seed_count, 1, seed_space, "'seed_count' must lie in [1, seed_space]!")
    check_digest_width(language.get_n(), k)
    _warn_if_bound_inapplicable(language, k)

    chunks = [
        (language, k, variant, seed_space, start, stop)
        for start, stop in parallel.split_range(0, seed_count, _chunk_size(seed_count, jobs))
    ]
    successes = sum(parallel.map_chunks(_count_seed_successes, chunks, jobs))

    return _estimate(variant, successes, seed_count)


def _estimate(variant: PredicateVariant, successes: int, trials: int) -> CoverageEstimate:
    return CoverageEstimate(
        variant=variant,
        successes=successes,
        trials=trials,
        estimate=successes / trials,
        stderr=util.binomial_stderr(successes, trials),
        bound=lower_bound(variant),
    )


def _chunk_size(total: int, jobs: int) -> int:
    return max(constants.SEARCH_CHUNK_SIZE, -(-total // max(jobs, 1)))


def _warn_if_bound_inapplicable(language: LanguageSlice, k: int) -> None:
    if 2 ** k < language.cardinality():
        _logger.warning(
            "2^k = %d is below |A| = %d; the coverage bound does not apply.", 2 ** k, language.cardinality()
        )


def _count_trial_successes(
        language: LanguageSlice, k: int, variant: PredicateVariant, mc_seed: int, start: int, stop: int
) -> int:
    n = language.get_n()
    return sum(
        satisfies(variant, SeedExpander.substream(mc_seed, trial, n, k), language)
        for trial in range(start, stop)
    )


def _count_seed_successes(
        language: LanguageSlice, k: int, variant: PredicateVariant, seed_space: int, start: int, stop: int
) -> int:
    expander = SeedExpander(seed_space)
    n = language.get_n()
    return sum(satisfies(variant, expander.expand(seed, n, k), language) for seed in range(start, stop))
