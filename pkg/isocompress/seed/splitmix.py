from isocompress import constants


def mix64(z: int) -> int:
    """
    The splitmix64 output function applied to one 64-bit word.

    Parameters
    ----------
    z : int
        A 64-bit word.

    Returns
    -------
    int
        (z ^ z >> 30) * 0xBF58476D1CE4E5B9, then (z ^ z >> 27) * 0x94D049BB133111EB,
        then z ^ z >> 31, all modulo 2^64.
    """
    z &= constants.WORD_MASK
    z = ((z ^ (z >> 30)) * constants.MIX_MULTIPLIER_1) & constants.WORD_MASK
    z = ((z ^ (z >> 27)) * constants.MIX_MULTIPLIER_2) & constants.WORD_MASK
    return z ^ (z >> 31)


class SplitMix64:
    """
    The splitmix64 word stream plus an LSB-first bit reader on top of it.

    Attributes
    ----------
    __state : int
        The 64-bit state, advanced by the golden gamma before every word.
    __buffer : int
        Unread bits of the current word, next bit at position 0.
    __buffered : int
        Number of unread bits in '__buffer'.
    """

    def __init__(self, state: int):
        """
        Initialize the stream.

        Parameters
        ----------
        state : int
            The raw initial state (reduced modulo 2^64).
        """
        self.__state = state & constants.WORD_MASK
        self.__buffer = 0
        self.__buffered = 0

    def next_word(self) -> int:
        """
        Advances the state and returns the next 64-bit word.

        Returns
        -------
        int
            The mixed word.
        """
        self.__state = (self.__state + constants.GOLDEN_GAMMA) & constants.WORD_MASK
        return mix64(self.__state)

    def take_bits(self, count: int) -> int:
        """
        Reads 'count' bits, least significant bit of each word first.

        Parameters
        ----------
        count : int
            The number of bits.

        Returns
        -------
        int
            The bits packed with the first bit read at position 0.
        """
        result = 0
        filled = 0
        while filled < count:
            if self.__buffered == 0:
                self.__buffer = self.next_word()
                self.__buffered = constants.WORD_BITS
            used = min(count - filled, self.__buffered)
            result |= (self.__buffer & ((1 << used) - 1)) << filled
            self.__buffer >>= used
            self.__buffered -= used
            filled += used

        return result

    def get_state(self) -> int:
        """Returns the current 64-bit state."""
        return self.__state
