from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Callable, Iterable

from isocompress import constants, validation


class ChunkRunner:
    """
    Runs chunks of independent work in order, in-process or in a process pool.

    Results always come back in input order, so callers that merge them in
    that order produce output independent of the number of jobs.

    Attributes
    ----------
    __jobs : int
        The number of worker processes; 1 runs everything in the caller.
    __executor : Executor | None
        The pool while the runner is entered with more than one job.
    """

    def __init__(self, jobs: int = constants.DEFAULT_JOBS):
        """
        Initialize the ChunkRunner.

        Parameters
        ----------
        jobs : int, optional
            The number of worker processes (default is constants.DEFAULT_JOBS).

        Raises
        ------
        ConfigError
            If 'jobs' is less than 1.
        """
        self.__jobs = validation.is_positive(jobs, "'jobs' cannot be less than 1!")
        self.__executor = None

    def __enter__(self) -> "ChunkRunner":
        if self.__jobs > 1:
            self.__executor = ProcessPoolExecutor(max_workers=self.__jobs)
        return self

    def __exit__(self, *exc_info) -> None:
        if self.__executor is not None:
            self.__executor.shutdown()
            self.__executor = None

    def get_jobs(self) -> int:
        """Returns the number of worker processes."""
        return self.__jobs

    def map(self, function: Callable[..., Any], chunks: Iterable[tuple]) -> list[Any]:
        """
        Applies 'function' to every argument tuple.

        Parameters
        ----------
        function : Callable[..., Any]
            A module-level (picklable) function.
        chunks : Iterable[tuple]
            One argument tuple per call.

        Returns
        -------
        list[Any]
            function(*chunk) for every chunk, in order.
        """
        chunks = list(chunks)
        if self.__executor is None or len(chunks) <= 1:
            return [function(*chunk) for chunk in chunks]

        return list(self.__executor.map(function, *zip(*chunks)))


def map_chunks(function: Callable[..., Any], chunks: Iterable[tuple], jobs: int = constants.DEFAULT_JOBS) -> list[Any]:
    """One-shot ChunkRunner.map."""
    with ChunkRunner(jobs) as runner:
        return runner.map(function, chunks)


def split_range(start: int, stop: int, size: int) -> list[tuple[int, int]]:
    """
    Cuts [start, stop) into consecutive half-open ranges of at most 'size' elements.

    Parameters
    ----------
    start : int
        First index.
    stop : int
        One past the last index.
    size : int
        Maximum range length.

    Returns
    -------
    list[tuple[int, int]]
        The ranges in increasing order.
    """
    validation.is_positive(size, "'size' cannot be less than 1!")
    return [(low, min(low + size, stop)) for low in range(start, stop, size)]
