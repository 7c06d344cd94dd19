import argparse
import logging

from isocompress import constants, validation
from isocompress.enuns.output_mode import OutputMode
from isocompress.errors import ConfigError
from isocompress.seed.seed import check_seed_space
from isocompress.seed.seed_expander import SeedExpander

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
"""Names accepted by --log-level.
"""


class RunConfig:
    """
    The global options of one command-line run, validated before any computation.

    Attributes
    ----------
    __jobs : int
        Worker processes.
    __seed_space : int
        Number of seeds every search may use.
    __scan_cap : int
        Largest n for exhaustive sweeps.
    __output_mode : OutputMode
        Human sentences or key=value lines.
    __log_level : str
        Root logger level.
    """

    def __init__(
            self,
            jobs: int = constants.DEFAULT_JOBS,
            seed_space: int = constants.DEFAULT_SEED_SPACE,
            scan_cap: int = constants.DEFAULT_SCAN_CAP,
            output_mode: OutputMode = OutputMode.HUMAN,
            log_level: str = constants.DEFAULT_LOG_LEVEL
    ):
        """
        Initialize the RunConfig.

        Parameters
        ----------
        jobs : int, optional
            Worker processes (default is constants.DEFAULT_JOBS).
        seed_space : int, optional
            Seed-space size, a power of two (default is constants.DEFAULT_SEED_SPACE).
        scan_cap : int, optional
            Exhaustive-sweep limit on n (default is constants.DEFAULT_SCAN_CAP).
        output_mode : OutputMode, optional
            How results are printed (default is OutputMode.HUMAN).
        log_level : str, optional
            One of LOG_LEVELS (default is constants.DEFAULT_LOG_LEVEL).

        Raises
        ------
        ConfigError
            If any option is out of its domain.
        """
        self.__jobs = validation.is_positive(jobs, "'--jobs' cannot be less than 1!")
        self.__seed_space = check_seed_space(seed_space)
        self.__scan_cap = validation.is_in_range(
            scan_cap, 1, constants.MAX_STRING_LENGTH, f"'--scan-cap' must lie in [1, {constants.MAX_STRING_LENGTH}]!"
        )
        self.__output_mode = output_mode
        if log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"'--log-level' must be one of {', '.join(LOG_LEVELS)}!")
        self.__log_level = log_level.upper()

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        """Builds the config from parsed global flags."""
        return RunConfig(
            jobs=args.jobs,
            seed_space=parse_seed_space(args.seed_space),
            scan_cap=args.scan_cap,
            output_mode=OutputMode(args.output),
            log_level=args.log_level,
        )

    def get_jobs(self) -> int:
        """Returns the number of worker processes."""
        return self.__jobs

    def get_seed_space(self) -> int:
        """Returns the seed-space size."""
        return self.__seed_space

    def get_scan_cap(self) -> int:
        """Returns the largest n swept exhaustively."""
        return self.__scan_cap

    def get_output_mode(self) -> OutputMode:
        """Returns how results are printed."""
        return self.__output_mode

    def get_log_level(self) -> str:
        """Returns the root logger level name."""
        return self.__log_level

    def make_expander(self) -> SeedExpander:
        """Returns an expander over the configured seed space."""
        return SeedExpander(self.__seed_space)

    def configure_logging(self) -> None:
        """Sets up the root logger on stderr at the configured level."""
        logging.basicConfig(level=self.__log_level, format=constants.LOG_FORMAT, force=True)


def parse_seed_space(text: str) -> int:
    """
    Parses a seed-space size written as '2^B' or as a plain integer.

    Parameters
    ----------
    text : str
        The flag value.

    Returns
    -------
    int
        The size.

    Raises
    ------
    ConfigError
        If the text is neither form.
    """
    base, caret, exponent = text.partition("^")
    try:
        if caret:
            if base.strip() != "2":
                raise ValueError(text)
            return 2 ** int(exponent)
        return int(text)
    except ValueError as e:
        raise ConfigError(f"'--seed-space' must be '2^B' or an integer, got {text!r}!") from e
