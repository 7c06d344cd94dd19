import logging

import numpy as np

from isocompress import util, validation
from isocompress.errors import ConfigError, IngestError

_logger = logging.getLogger(__name__)


class SetFamily:
    """
    A family of N distinct subsets of the ground set [M] = {1, ..., M}.

    Subsets are held as integer bitmasks, element e at bit e - 1.

    Attributes
    ----------
    __ground_size : int
        M.
    __masks : tuple[int, ...]
        The subsets, in input order.
    """

    def __init__(self, ground_size: int, members: list[set[int]] | list[frozenset[int]]):
        """
        Initialize the SetFamily.

        Parameters
        ----------
        ground_size : int
            M, at least 1.
        members : list[set[int]]
            The subsets; elements in [1, M], pairwise distinct.

        Raises
        ------
        ConfigError
            If an element is outside [1, M] or two members are equal.
        """
        self.__ground_size = validation.is_positive(ground_size, "'ground_size' cannot be less than 1!")
        masks = []
        for subset in members:
            mask = 0
            for element in subset:
                validation.is_in_range(element, 1, ground_size, f"Element {element} is outside [1, {ground_size}]!")
                mask |= 1 << (element - 1)
            masks.append(mask)

        if len(set(masks)) != len(masks):
            raise ConfigError("Members of a set family must be pairwise distinct!")

        self.__masks = tuple(masks)

    @staticmethod
    def from_masks(ground_size: int, masks: list[int]) -> "SetFamily":
        """Builds a family from bitmasks (element e at bit e - 1)."""
        return SetFamily(ground_size, [_elements(mask) for mask in masks])

    def get_ground_size(self) -> int:
        """Returns M."""
        return self.__ground_size

    def get_size(self) -> int:
        """Returns N."""
        return len(self.__masks)

    def get_masks(self) -> tuple[int, ...]:
        """Returns the subsets as bitmasks."""
        return self.__masks

    def get_member(self, index: int) -> frozenset[int]:
        """Returns the subset at 0-based 'index'."""
        return frozenset(_elements(self.__masks[index]))

    def get_members(self) -> list[frozenset[int]]:
        """Returns every subset, in order."""
        return [frozenset(_elements(mask)) for mask in self.__masks]

    def to_text(self) -> str:
        """
        Renders the family in its text format.

        Returns
        -------
        str
            'M N', then one line per subset with its elements in increasing
            order separated by spaces.
        """
        lines = [f"{self.__ground_size} {len(self.__masks)}"]
        lines += [" ".join(str(element) for element in _elements(mask)) for mask in self.__masks]
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return len(self.__masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented

        return self.__ground_size == other.get_ground_size() and self.__masks == other.get_masks()

    def __hash__(self) -> int:
        return hash((self.__ground_size, self.__masks))

    def __repr__(self) -> str:
        return f"SetFamily(M={self.__ground_size}, N={len(self.__masks)})"


def load_family(path: str) -> SetFamily:
    """
    Loads a family from its text format.

    Parameters
    ----------
    path : str
        The family file: first line 'M N', then N lines of space-separated
        elements (an empty line is the empty subset).

    Returns
    -------
    SetFamily
        The family.

    Raises
    ------
    IngestError
        If the file is missing or malformed.
    """
    lines = util.read_txt(path)
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise IngestError(f"Family file '{path}' is empty.")

    try:
        ground_size, size = (int(field) for field in lines[0].split())
        members = [{int(field) for field in line.split()} for line in lines[1:]]
    except ValueError as e:
        raise IngestError(f"Family file '{path}' is malformed: {e}") from e

    if len(members) != size:
        raise IngestError(f"Family file '{path}' announces {size} subsets but lists {len(members)}.")

    try:
        family = SetFamily(ground_size, members)
    except ConfigError as e:
        raise IngestError(f"Family file '{path}': {e}") from e

    _logger.info("Loaded family of %d subsets of [%d] from %s", size, ground_size, path)
    return family


def random_family(size: int, ground_size: int, density: float, rng_seed: int) -> SetFamily:
    """
    Draws N distinct random subsets of [M], each element present with probability 'density'.

    Parameters
    ----------
    size : int
        N.
    ground_size : int
        M.
    density : float
        Inclusion probability, in [0, 1].
    rng_seed : int
        Seed of numpy's default generator; equal seeds give equal families.

    Returns
    -------
    SetFamily
        The family.

    Raises
    ------
    ConfigError
        If N exceeds 2^M or 'density' is outside [0, 1].
    """
    validation.is_positive(size, "'size' cannot be less than 1!")
    validation.is_positive(ground_size, "'ground_size' cannot be less than 1!")
    if not 0.0 <= density <= 1.0:
        raise ConfigError("'density' must lie in [0, 1]!")
    if size > 2 ** ground_size:
        raise ConfigError(f"[{ground_size}] has fewer than {size} subsets!")
    if size > 1 and density in (0.0, 1.0):
        raise ConfigError("'density' of 0 or 1 yields a single subset!")

    rng = np.random.default_rng(rng_seed)
    seen = set()
    masks = []
    while len(masks) < size:
        mask = sum(1 << int(position) for position in np.flatnonzero(rng.random(ground_size) < density))
        if mask not in seen:
            seen.add(mask)
            masks.append(mask)

    return SetFamily.from_masks(ground_size, masks)


def _elements(mask: int) -> list[int]:
    return [position + 1 for position in range(mask.bit_length()) if mask >> position & 1]
