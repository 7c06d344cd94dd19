import math

import numpy as np

from isocompress import validation
from isocompress.errors import IngestError


def read_txt(path: str) -> list[str]:
    """
    Read the contents of a txt file.

    Parameters
    ----------
    path : str
        The file path.

    Returns
    -------
    list[str]
        The list of lines in the file, without line terminators.

    Raises
    ------
    IngestError
        If the 'path' is not found.
    """
    validation.is_valid_path(path, "Txt 'path' not found!")

    content = []
    with open(path, 'r', encoding='utf-8') as txt:
        for line in txt:
            content.append(line.rstrip("\r\n"))

    return content


def overwrite_txt(path: str, lines: list[str]) -> None:
    """
    Overwrite (or create) a txt file, one entry per line.

    Parameters
    ----------
    path : str
        The file path.
    lines : list[str]
        The new content.

    Raises
    ------
    IngestError
        If the file cannot be written.
    """
    try:
        with open(path, 'w', encoding='utf-8') as txt:
            for line in lines:
                txt.write(line + "\n")
    except OSError as e:
        raise IngestError(f"Cannot write '{path}': {e.strerror}") from e


def ceil_log2(value: int) -> int:
    """
    Returns the smallest k with 2^k >= value.

    Parameters
    ----------
    value : int
        A positive integer.

    Returns
    -------
    int
        ceil(log2(value)), 0 for value == 1.
    """
    validation.is_positive(value, "'value' cannot be less than 1!")
    return (value - 1).bit_length()


def binomial_stderr(successes: int, trials: int) -> float:
    """
    Standard error of a binomial proportion estimate.

    Parameters
    ----------
    successes : int
        Number of successful trials.
    trials : int
        Number of trials.

    Returns
    -------
    float
        sqrt(p (1 - p) / trials) with p = successes / trials.
    """
    validation.is_positive(trials, "'trials' cannot be less than 1!")
    estimate = successes / trials
    return math.sqrt(estimate * (1.0 - estimate) / trials)


def parity64(values: np.ndarray) -> np.ndarray:
    """
    Parity of the set bits of every element of a uint64 array.

    Parameters
    ----------
    values : np.ndarray
        Array of dtype uint64.

    Returns
    -------
    np.ndarray
        Array of dtype uint64 holding 0 or 1.
    """
    folded = np.asarray(values, dtype=np.uint64).copy()
    for shift in (32, 16, 8, 4, 2, 1):
        folded ^= folded >> np.uint64(shift)

    return folded & np.uint64(1)


def popcount64(values: np.ndarray) -> np.ndarray:
    """
    Number of set bits of every element of a uint64 array.

    Parameters
    ----------
    values : np.ndarray
        Array of dtype uint64.

    Returns
    -------
    np.ndarray
        Array of dtype int64.
    """
    as_bytes = np.ascontiguousarray(values, dtype=np.uint64).view(np.uint8)
    bits = np.unpackbits(as_bytes).reshape(-1, 64)
    return bits.sum(axis=1, dtype=np.int64)
