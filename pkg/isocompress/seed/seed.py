from isocompress import constants, validation


class Seed:
    """
    A seed of the expander: an integer in [0, seed_space).

    Attributes
    ----------
    __value : int
        The seed value.
    __seed_space : int
        The number of seeds, a power of two no larger than constants.MAX_SEED_SPACE.
    """

    def __init__(self, value: int, seed_space: int = constants.DEFAULT_SEED_SPACE):
        """
        Initialize a Seed.

        Parameters
        ----------
        value : int
            The seed value.
        seed_space : int, optional
            The number of seeds (default is constants.DEFAULT_SEED_SPACE).

        Raises
        ------
        ConfigError
            If 'seed_space' is not a power of two in [1, 2^32] or 'value' is outside [0, seed_space).
        """
        self.__seed_space = check_seed_space(seed_space)
        self.__value = validation.is_in_range(value, 0, seed_space - 1, "'value' outside the seed space!")

    def get_value(self) -> int:
        """Returns the seed value."""
        return self.__value

    def get_seed_space(self) -> int:
        """Returns the size of the seed space."""
        return self.__seed_space

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented

        return self.__value == other.get_value() and self.__seed_space == other.get_seed_space()

    def __hash__(self) -> int:
        return hash((self.__value, self.__seed_space))

    def __repr__(self) -> str:
        return f"Seed({self.__value}, seed_space={self.__seed_space})"


def check_seed_space(seed_space: int) -> int:
    """
    Checks a seed-space size.

    Parameters
    ----------
    seed_space : int
        The candidate size.

    Returns
    -------
    seed_space : int
        If it is a power of two no larger than constants.MAX_SEED_SPACE.

    Raises
    ------
    ConfigError
        Otherwise.
    """
    validation.is_power_of_two(seed_space, "'seed_space' must be a power of two!")
    validation.is_in_range(seed_space, 1, constants.MAX_SEED_SPACE, "'seed_space' cannot exceed 2^32!")

    return seed_space
