import logging

import numpy as np

from isocompress import constants, util, validation
from isocompress.errors import IngestError
from isocompress.language.language_slice import LanguageSlice

_logger = logging.getLogger(__name__)


class Automaton:
    """
    A deterministic finite automaton over the alphabet {0, 1}.

    Text format (one directive per line, '#' starts a comment):

        states <count>            states are 0 .. count-1
        start <state>
        accept <state> <state> ...
        <state> <symbol> <state>  one transition; symbol is 0 or 1

    A missing transition leads to an implicit rejecting sink.

    Attributes
    ----------
    __state_count : int
        The number of states.
    __start : int
        The start state.
    __accepting : frozenset[int]
        The accepting states.
    __transitions : dict[tuple[int, int], int]
        (state, symbol) -> next state.
    """

    def __init__(
            self,
            state_count: int,
            start: int,
            accepting: set[int] | frozenset[int],
            transitions: dict[tuple[int, int], int]
    ):
        """
        Initialize the Automaton.

        Parameters
        ----------
        state_count : int
            The number of states.
        start : int
            The start state.
        accepting : set[int] | frozenset[int]
            The accepting states.
        transitions : dict[tuple[int, int], int]
            (state, symbol) -> next state.

        Raises
        ------
        ConfigError
            If a state or symbol is out of range.
        """
        self.__state_count = validation.is_positive(state_count, "'state_count' cannot be less than 1!")
        last = state_count - 1
        self.__start = validation.is_in_range(start, 0, last, "'start' is not a state!")
        for state in accepting:
            validation.is_in_range(state, 0, last, "An accepting state is not a state!")
        for (state, symbol), target in transitions.items():
            validation.is_in_range(state, 0, last, "A transition leaves an unknown state!")
            validation.is_in_range(symbol, 0, 1, "A transition symbol must be 0 or 1!")
            validation.is_in_range(target, 0, last, "A transition enters an unknown state!")
        self.__accepting = frozenset(accepting)
        self.__transitions = dict(transitions)

    @staticmethod
    def load(path: str) -> "Automaton":
        """
        Reads an automaton file.

        Parameters
        ----------
        path : str
            The file path.

        Returns
        -------
        Automaton
            The automaton.

        Raises
        ------
        IngestError
            If the file is missing or malformed.
        """
        state_count = None
        start = None
        accepting = set()
        transitions = {}
        for number, raw in enumerate(util.read_txt(path), start=1):
            fields = raw.split("#", 1)[0].split()
            if not fields:
                continue
            try:
                if fields[0] == "states" and len(fields) == 2:
                    state_count = int(fields[1])
                elif fields[0] == "start" and len(fields) == 2:
                    start = int(fields[1])
                elif fields[0] == "accept":
                    accepting.update(int(field) for field in fields[1:])
                elif len(fields) == 3:
                    state, symbol, target = (int(field) for field in fields)
                    if (state, symbol) in transitions:
                        raise IngestError(f"{path}:{number}: duplicate transition.")
                    transitions[(state, symbol)] = target
                else:
                    raise IngestError(f"{path}:{number}: unrecognised line {raw!r}.")
            except ValueError as error:
                raise IngestError(f"{path}:{number}: {error}") from error

        if state_count is None or start is None:
            raise IngestError(f"{path}: 'states' and 'start' are required.")
        try:
            return Automaton(state_count, start, accepting, transitions)
        except ValueError as error:
            raise IngestError(f"{path}: {error}") from error

    def get_state_count(self) -> int:
        """Returns the number of states."""
        return self.__state_count

    def step(self, state: int | None, symbol: int) -> int | None:
        """Returns the next state, or None for the rejecting sink."""
        if state is None:
            return None

        return self.__transitions.get((state, symbol))

    def get_start(self) -> int:
        """Returns the start state."""
        return self.__start

    def is_accepting(self, state: int | None) -> bool:
        """Returns True for an accepting state."""
        return state is not None and state in self.__accepting


class DfaSlice(LanguageSlice):
    """
    The strings of length n accepted by an automaton, read from position 0.

    Attributes
    ----------
    __automaton : Automaton
        The automaton.
    __completions : list[list[int]]
        __completions[r][q] = number of accepted suffixes of length r from state q.
    """

    def __init__(self, automaton: Automaton, n: int, spec: str | None = None, scan_cap: int = constants.DEFAULT_SCAN_CAP):
        """
        Initialize the DfaSlice.

        Parameters
        ----------
        automaton : Automaton
            The automaton.
        n : int
            The string length.
        spec : str | None, optional
            The spec text (default is 'dfa:<inline>:<n>').
        scan_cap : int, optional
            The scan cap (default is constants.DEFAULT_SCAN_CAP).
        """
        super().__init__(n, spec or f"dfa:<inline>:{n}", scan_cap)
        self.__automaton = automaton
        self.__completions = self.__count_completions()

    @staticmethod
    def load(path: str, n: int, scan_cap: int = constants.DEFAULT_SCAN_CAP) -> "DfaSlice":
        """Reads an automaton file and slices it at length n."""
        automaton = Automaton.load(path)
        _logger.info("Loaded a %d-state automaton from %s", automaton.get_state_count(), path)
        return DfaSlice(automaton, n, f"dfa:{path}:{n}", scan_cap)

    def contains_value(self, value: int) -> bool:
        state = self.__automaton.get_start()
        for position in range(self.get_n()):
            state = self.__automaton.step(state, (value >> position) & 1)

        return self.__automaton.is_accepting(state)

    def native_members(self) -> np.ndarray:
        # Depth-first, symbol 0 before 1, pruned by the completion counts: lexicographic order.
        found = []
        stack = [(self.__automaton.get_start(), 0, 0)]
        while stack:
            state, position, value = stack.pop()
            if position == self.get_n():
                found.append(value)
                continue
            remaining = self.get_n() - position - 1
            for symbol in (1, 0):
                target = self.__automaton.step(state, symbol)
                if target is not None and self.__completions[remaining][target]:
                    stack.append((target, position + 1, value | (symbol << position)))

        return np.array(found, dtype=np.uint64)

    def has_native_enumerator(self) -> bool:
        return True

    def native_cardinality(self) -> int:
        return self.__completions[self.get_n()][self.__automaton.get_start()]

    def __count_completions(self) -> list[list[int]]:
        states = range(self.__automaton.get_state_count())
        completions = [[1 if self.__automaton.is_accepting(state) else 0 for state in states]]
        for _ in range(self.get_n()):
            previous = completions[-1]
            completions.append([
                sum(
                    previous[target]
                    for target in (self.__automaton.step(state, symbol) for symbol in (0, 1))
                    if target is not None
                )
                for state in states
            ])

        return completions
