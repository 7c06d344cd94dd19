from enum import Enum


class Verdict(Enum):
    """
    Outcome of running a distinguishing descriptor on a candidate string.

    Attributes
    ----------
    ACCEPT : str
        The candidate is the described string.
    REJECT : str
        The candidate is any other string.
    """

    ACCEPT = "accept"
    REJECT = "reject"
