from enum import Enum


class OutputMode(Enum):
    """
    An enumeration of the ways the command line reports results.

    Attributes
    ----------
    HUMAN : str
        Readable sentences.
    LINES : str
        One self-contained line of key=value pairs per result.
    """

    HUMAN = "human"
    LINES = "lines"
