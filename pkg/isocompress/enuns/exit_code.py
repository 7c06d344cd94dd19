from enum import Enum


class ExitCode(Enum):
    """
    Process exit codes of the command line.

    Attributes
    ----------
    SUCCESS : int
        The command completed.
    DOMAIN_ERROR : int
        A domain error was raised (NotInLanguage, CorruptRecord, ...).
    USAGE_ERROR : int
        Flags were missing, malformed or contradictory.
    """

    SUCCESS = 0
    DOMAIN_ERROR = 1
    USAGE_ERROR = 2
