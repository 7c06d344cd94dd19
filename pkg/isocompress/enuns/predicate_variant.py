from enum import Enum

from isocompress.errors import ConfigError


class PredicateVariant(Enum):
    """
    Enumeration of the tuple predicates a seed search can target.

    Attributes
    ----------
    T : str
        Every member of the slice is isolated by some matrix of the tuple.
    T_TILDE : str
        As T, and additionally every matrix of the tuple has full rank k+1.
    """

    T = "T"
    T_TILDE = "Ttilde"

    @staticmethod
    def from_text(text: str) -> "PredicateVariant":
        """
        Parses a variant name as written on the command line.

        Parameters
        ----------
        text : str
            'T' or 'Ttilde' (case-insensitive).

        Returns
        -------
        PredicateVariant
            The variant.

        Raises
        ------
        ConfigError
            If the text names no variant.
        """
        for variant in PredicateVariant:
            if variant.value.lower() == text.lower():
                return variant

        raise ConfigError("Unknown predicate variant: " + repr(text))
