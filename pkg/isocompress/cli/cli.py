import argparse
import logging
import sys
from fractions import Fraction

from isocompress import constants, util, validation
from isocompress.algebra.bit_string import BitString
from isocompress.cli.reporter import Reporter
from isocompress.cli.run_config import LOG_LEVELS, RunConfig
from isocompress.codec.archive import load_archive, save_archive
from isocompress.codec.codec import Codec
from isocompress.codec.compressed_record import compressed_bits
from isocompress.coverfree.cover_free import (
    check_family_against_bound, dr_lower_bound, find_cover_violation, minimal_dr_constant
)
from isocompress.coverfree.set_family import load_family
from isocompress.distinguisher.distinguisher import Distinguisher
from isocompress.enuns.exit_code import ExitCode
from isocompress.enuns.output_mode import OutputMode
from isocompress.enuns.predicate_variant import PredicateVariant
from isocompress.errors import ConfigError, FormatError, IngestError, IsoCompressError
from isocompress.isolation import hash_statistics
from isocompress.isolation.monte_carlo import estimate_coverage_probability, estimate_seed_coverage
from isocompress.language.language_slice import LanguageSlice
from isocompress.language.registry import SPEC_FORMS, load_language

_logger = logging.getLogger(__name__)

EXACT_FULL_RANK_BITS = 16
"""Largest (k+1) * n for which 'verify fullrank' counts matrices exhaustively.
"""


def build_parser() -> argparse.ArgumentParser:
    """Returns the parser of every subcommand; global flags are accepted after each leaf command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=constants.DEFAULT_JOBS, help="worker processes")
    common.add_argument("--seed-space", default=str(constants.DEFAULT_SEED_SPACE), help="seed-space size, '2^B' or an integer")
    common.add_argument("--scan-cap", type=int, default=constants.DEFAULT_SCAN_CAP, help="largest n for exhaustive scans")
    common.add_argument("--output", choices=[mode.value for mode in OutputMode], default=OutputMode.HUMAN.value)
    common.add_argument("--log-level", choices=LOG_LEVELS, default=constants.DEFAULT_LOG_LEVEL, type=str.upper)

    parser = argparse.ArgumentParser(
        prog="isocompress",
        description="Compression and distinguishing descriptors for sparse sets of binary strings.",
        epilog="Language specs: " + ", ".join(SPEC_FORMS),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compress = commands.add_parser("compress", parents=[common], help="encode members into an archive")
    compress.add_argument("--lang", required=True)
    compress.add_argument("--k", type=int)
    source = compress.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="file of bit strings, one per line")
    source.add_argument("--all", action="store_true", help="every member, in lexicographic order")
    compress.add_argument("--out", required=True)
    compress.set_defaults(handler=_compress)

    decompress = commands.add_parser("decompress", parents=[common], help="decode an archive")
    decompress.add_argument("--archive", required=True)
    decompress.add_argument("--lang", required=True)
    decompress.add_argument("--out", required=True)
    decompress.set_defaults(handler=_decompress)

    distinguish = commands.add_parser("distinguish", help="distinguishing descriptors")
    actions = distinguish.add_subparsers(dest="action", required=True)
    build = actions.add_parser("build", parents=[common])
    build.add_argument("--lang", required=True)
    build.add_argument("--x", required=True)
    build.add_argument("--k", type=int)
    build.add_argument("--out", required=True)
    build.set_defaults(handler=_distinguish_build)
    run = actions.add_parser("run", parents=[common])
    run.add_argument("--descriptor", required=True)
    run.add_argument("--lang", required=True)
    run.add_argument("--candidate", required=True)
    run.set_defaults(handler=_distinguish_run)
    verify_descriptor = actions.add_parser("verify", parents=[common])
    verify_descriptor.add_argument("--descriptor", required=True)
    verify_descriptor.add_argument("--lang", required=True)
    verify_descriptor.add_argument("--full-sweep", action="store_true")
    verify_descriptor.set_defaults(handler=_distinguish_verify)

    verify = commands.add_parser("verify", help="probabilistic and exhaustive experiments")
    experiments = verify.add_subparsers(dest="experiment", required=True)
    isolation = experiments.add_parser("isolation", parents=[common])
    isolation.add_argument("--lang", required=True)
    isolation.add_argument("--k", type=int, required=True)
    isolation.add_argument("--variant", default=PredicateVariant.T.value)
    isolation.add_argument("--trials", type=int, required=True)
    isolation.add_argument("--mc-seed", type=int, default=0)
    isolation.set_defaults(handler=_verify_isolation)
    collision = experiments.add_parser("collision", parents=[common])
    collision.add_argument("--n", type=int, required=True)
    collision.add_argument("--k", type=int, required=True)
    collision.set_defaults(handler=_verify_collision)
    fullrank = experiments.add_parser("fullrank", parents=[common])
    fullrank.add_argument("--n", type=int, required=True)
    fullrank.add_argument("--k", type=int, required=True)
    fullrank.add_argument("--trials", type=int, default=10000)
    fullrank.add_argument("--mc-seed", type=int, default=0)
    fullrank.set_defaults(handler=_verify_fullrank)
    seeds = experiments.add_parser("seeds", parents=[common])
    seeds.add_argument("--lang", required=True)
    seeds.add_argument("--k", type=int, required=True)
    seeds.add_argument("--variant", default=PredicateVariant.T.value)
    seeds.add_argument("--seeds", type=int, required=True)
    seeds.set_defaults(handler=_verify_seeds)

    coverfree = commands.add_parser("coverfree", help="cover-free families")
    checks = coverfree.add_subparsers(dest="check", required=True)
    check = checks.add_parser("check", parents=[common])
    check.add_argument("--family", required=True)
    check.add_argument("--k", type=int, required=True)
    check.add_argument("--c", type=float)
    check.set_defaults(handler=_coverfree_check)

    drbound = commands.add_parser("drbound", parents=[common], help="evaluate the Dyachkov-Rykov bound")
    drbound.add_argument("--N", type=int, required=True, dest="size")
    drbound.add_argument("--k", type=int, required=True)
    drbound.add_argument("--c", type=float, required=True)
    drbound.set_defaults(handler=_drbound)

    stats = commands.add_parser("stats", parents=[common], help="per-record payload accounting")
    stats.add_argument("--archive", required=True)
    stats.add_argument("--lang", help="override the spec stored in the archive")
    stats.set_defaults(handler=_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Runs one command.

    Parameters
    ----------
    argv : list[str] | None, optional
        The arguments without the program name (default is sys.argv[1:]).

    Returns
    -------
    int
        0 on success, 1 on a domain error, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.USAGE_ERROR.value

    try:
        config = RunConfig.from_args(args)
        config.configure_logging()
        args.handler(args, config, Reporter(config.get_output_mode()))
    except ConfigError as e:
        parser.print_usage(sys.stderr)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return ExitCode.USAGE_ERROR.value
    except IsoCompressError as e:
        _logger.debug("Command failed", exc_info=True)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return ExitCode.DOMAIN_ERROR.value

    return ExitCode.SUCCESS.value


def _language(spec: str, config: RunConfig) -> LanguageSlice:
    return load_language(spec, config.get_scan_cap())


def _read_strings(path: str) -> list[BitString]:
    strings = []
    for number, line in enumerate(util.read_txt(path), start=1):
        if not line.strip():
            continue
        try:
            strings.append(BitString.from_text(line.strip()))
        except ConfigError as e:
            raise IngestError(f"{path}:{number}: {e}") from e

    return strings


def _output_path(path: str) -> str:
    return validation.is_writable_path(path, "'--out' cannot be written!")


def _single_descriptor(path: str):
    archive = load_archive(path)
    if len(archive.records) != 1:
        raise FormatError(f"A descriptor file holds exactly one record, '{path}' holds {len(archive.records)}.")

    return archive.records[0]


def _compress(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    _output_path(args.out)
    language = _language(args.lang, config)
    strings = list(language.enumerate_members()) if args.all else _read_strings(args.input)
    k = language.choose_k() if args.k is None else args.k
    records = Codec(config.make_expander(), config.get_jobs()).encode_all(strings, language, k)
    save_archive(args.out, records, args.lang, language.get_n(), k)
    reporter.emit("compress", {
        "lang": args.lang,
        "n": language.get_n(),
        "k": k,
        "records": len(records),
        "bits_per_record": k + 1 + constants.RECORD_OVERHEAD_BITS,
        "archive": args.out,
    })


def _decompress(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    _output_path(args.out)
    archive = load_archive(args.archive)
    if archive.lang_spec != args.lang:
        _logger.warning("Archive was written for %s, decoding against %s", archive.lang_spec, args.lang)

    language = _language(args.lang, config)
    codec = Codec(config.make_expander(), config.get_jobs())
    outcomes = [codec.decode_counted(record, language) for record in archive.records]
    util.overwrite_txt(args.out, [outcome.value.to_text() for outcome in outcomes])
    reporter.emit("decompress", {
        "lang": args.lang,
        "records": len(outcomes),
        "max_candidates": max((outcome.candidates_examined for outcome in outcomes), default=0),
        "out": args.out,
    })


def _distinguish_build(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    _output_path(args.out)
    language = _language(args.lang, config)
    distinguisher = Distinguisher(config.make_expander(), config.get_jobs())
    descriptor = distinguisher.build_descriptor(BitString.from_text(args.x), language, args.k)
    save_archive(args.out, [descriptor], args.lang)
    report = distinguisher.describe(descriptor, language)
    reporter.emit("descriptor", {
        "x": args.x,
        "k": descriptor.get_k(),
        "seed": descriptor.get_seed(),
        "index": descriptor.get_index(),
        "digest": descriptor.get_digest().to_text(),
        "bits": report.bits,
        "log_size": report.log_size,
        "overhead": report.overhead,
    })


def _distinguish_run(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    descriptor = _single_descriptor(args.descriptor)
    language = _language(args.lang, config)
    verdict = Distinguisher(config.make_expander()).run_descriptor(descriptor, BitString.from_text(args.candidate), language)
    reporter.emit("run", {"candidate": args.candidate, "verdict": verdict.value})


def _distinguish_verify(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    descriptor = _single_descriptor(args.descriptor)
    language = _language(args.lang, config)
    unique = Distinguisher(config.make_expander()).verify_unique(descriptor, language, args.full_sweep)
    reporter.emit("verify_descriptor", {"full_sweep": args.full_sweep, "unique": unique})


def _verify_isolation(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    language = _language(args.lang, config)
    variant = PredicateVariant.from_text(args.variant)
    estimate = estimate_coverage_probability(language, args.k, variant, args.trials, args.mc_seed, config.get_jobs())
    reporter.emit("isolation", {
        "lang": args.lang,
        "k": args.k,
        "variant": variant.value,
        "trials": estimate.trials,
        "successes": estimate.successes,
        "estimate": estimate.estimate,
        "stderr": estimate.stderr,
        "bound": estimate.bound,
        "meets_bound": estimate.meets_bound(),
    })


def _verify_collision(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    fractions = hash_statistics.collision_fractions(args.n, args.k)
    expected = Fraction(1, 2 ** (args.k + 1))
    reporter.emit("collision", {
        "n": args.n,
        "k": args.k,
        "pairs": len(fractions),
        "expected": str(expected),
        "min": str(min(fractions.values(), default=expected)),
        "max": str(max(fractions.values(), default=expected)),
        "exact": all(fraction == expected for fraction in fractions.values()),
    })


def _verify_fullrank(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    if (args.k + 1) * args.n <= EXACT_FULL_RANK_BITS:
        count = hash_statistics.full_rank_count(args.n, args.k)
        expected = hash_statistics.expected_full_rank_count(args.n, args.k)
        reporter.emit("fullrank", {
            "n": args.n, "k": args.k, "mode": "exact", "count": count, "expected": expected, "match": count == expected,
        })
        return

    estimate = hash_statistics.estimate_full_rank_fraction(args.n, args.k, args.trials, args.mc_seed)
    expected = hash_statistics.full_rank_probability(args.n, args.k)
    reporter.emit("fullrank", {
        "n": args.n,
        "k": args.k,
        "mode": "monte_carlo",
        "trials": estimate.trials,
        "estimate": estimate.estimate,
        "stderr": estimate.stderr,
        "expected": expected,
        "within_3_sigma": abs(estimate.estimate - expected) <= constants.SIGMA_TOLERANCE * estimate.stderr,
    })


def _verify_seeds(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    language = _language(args.lang, config)
    variant = PredicateVariant.from_text(args.variant)
    estimate = estimate_seed_coverage(language, args.k, variant, args.seeds, config.get_seed_space(), config.get_jobs())
    reporter.emit("seeds", {
        "lang": args.lang,
        "k": args.k,
        "variant": variant.value,
        "seeds": estimate.trials,
        "successes": estimate.successes,
        "estimate": estimate.estimate,
        "stderr": estimate.stderr,
        "bound": estimate.bound,
    })


def _coverfree_check(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    family = load_family(args.family)
    violation = find_cover_violation(family, args.k, config.get_jobs())
    fields = {
        "N": family.get_size(),
        "M": family.get_ground_size(),
        "k": args.k,
        "cover_free": violation is None,
    }
    if violation is not None:
        fields["covered"] = family.get_member(violation.covered)
        fields["coverers"] = [family.get_member(index) for index in violation.coverers]
    elif args.k >= 2:
        fields["min_c"] = minimal_dr_constant(family.get_size(), args.k, family.get_ground_size())
    if args.c is not None and args.k >= 2:
        report = check_family_against_bound(family, args.k, args.c)
        fields["bound"] = report.bound
        fields["margin"] = report.margin
        fields["hypothesis"] = report.hypothesis_holds
        fields["consistent"] = report.is_consistent()

    reporter.emit("coverfree", fields)


def _drbound(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    reporter.emit("drbound", {"N": args.size, "k": args.k, "c": args.c, "drbound": dr_lower_bound(args.size, args.k, args.c)})


def _stats(args: argparse.Namespace, config: RunConfig, reporter: Reporter) -> None:
    archive = load_archive(args.archive)
    language = _language(args.lang or archive.lang_spec, config)
    log_size = util.ceil_log2(language.cardinality()) if language.cardinality() else 0
    for position, record in enumerate(archive.records):
        reporter.emit("record", {
            "position": position,
            "seed": record.get_seed(),
            "index": record.get_index(),
            "bits": compressed_bits(record),
        })

    bits = archive.k + 1 + constants.RECORD_OVERHEAD_BITS
    reporter.emit("stats", {
        "lang": archive.lang_spec,
        "n": archive.n,
        "k": archive.k,
        "records": len(archive.records),
        "bits_per_record": bits,
        "log_size": log_size,
        "overhead": bits - log_size,
    })
