import numpy as np

from isocompress.algebra.bit_string import BitString
from isocompress.algebra.gf2_matrix import GF2Matrix
from isocompress.algebra.hash_tuple import HashTuple
from isocompress.enuns.predicate_variant import PredicateVariant
from isocompress.errors import DimensionError, NotInLanguage
from isocompress.language.language_slice import LanguageSlice


def isolated_mask(h: GF2Matrix, members: np.ndarray) -> np.ndarray:
    """
    Marks the members whose digest under h no other member shares.

    Parameters
    ----------
    h : GF2Matrix
        The hash.
    members : np.ndarray
        uint64 array of distinct packed members.

    Returns
    -------
    np.ndarray
        Boolean array aligned with 'members'.
    """
    if members.size == 0:
        return np.zeros(0, dtype=bool)

    _, inverse, counts = np.unique(h.digests(members), return_inverse=True, return_counts=True)
    return counts[inverse.reshape(-1)] == 1


def isolates(h: GF2Matrix, x: BitString, language: LanguageSlice) -> bool:
    """
    Decides whether h isolates x: no other member of the slice has digest h(x).

    Enumerable slices are checked by bucketing the digests of all members;
    otherwise the preimage set h^{-1}(h(x)) is scanned through the oracle.

    Parameters
    ----------
    h : GF2Matrix
        The hash; its column count must equal n.
    x : BitString
        A member of the slice.
    language : LanguageSlice
        The slice.

    Returns
    -------
    bool
        True iff h isolates x.

    Raises
    ------
    DimensionError
        If h does not hash strings of length n.
    NotInLanguage
        If x is not a member.
    """
    _check_member(h, x, language)
    if not language.is_enumerable():
        return isolates_by_preimage_scan(h, x, language)

    members = language.members_array()
    digests = h.digests(members)
    return int(np.count_nonzero(digests == np.uint64(h.matvec(x).get_value()))) == 1


def isolates_by_preimage_scan(h: GF2Matrix, x: BitString, language: LanguageSlice) -> bool:
    """
    Oracle-only isolation test: counts the members among the preimages of h(x).

    For a full-rank h the scan visits at most 2^(n-k-1) strings.

    Parameters
    ----------
    h : GF2Matrix
        The hash.
    x : BitString
        A member of the slice.
    language : LanguageSlice
        The slice; only its membership oracle is used.

    Returns
    -------
    bool
        True iff x is the only member in h^{-1}(h(x)).

    Raises
    ------
    DimensionError
        If h does not hash strings of length n.
    NotInLanguage
        If x is not a member.
    """
    _check_member(h, x, language)
    found = 0
    for block in h.preimage_blocks(h.matvec(x)):
        found += int(np.count_nonzero(language.member_mask(block)))
        if found > 1:
            return False

    return found == 1


def covers_all(hashes: HashTuple, language: LanguageSlice) -> bool:
    """
    Predicate T: every member of the slice is isolated by some matrix of the tuple.

    Parameters
    ----------
    hashes : HashTuple
        The tuple.
    language : LanguageSlice
        An enumerable slice.

    Returns
    -------
    bool
        True iff each member is isolated by at least one h_i.

    Raises
    ------
    DimensionError
        If the tuple does not hash strings of length n.
    EnumerationUnsupported
        If the slice cannot be enumerated.
    """
    _check_shape(hashes, language)
    members = language.members_array()
    covered = np.zeros(members.size, dtype=bool)
    for h in hashes:
        if covered.all():
            break
        covered |= isolated_mask(h, members)

    return bool(covered.all())


def covers_all_fullrank(hashes: HashTuple, language: LanguageSlice) -> bool:
    """
    Predicate T-tilde: T holds and every matrix of the tuple has rank k+1.

    Parameters
    ----------
    hashes : HashTuple
        The tuple.
    language : LanguageSlice
        An enumerable slice.

    Returns
    -------
    bool
        True iff T holds and all members have full rank.

    Raises
    ------
    DimensionError
        If the tuple does not hash strings of length n.
    """
    _check_shape(hashes, language)
    return hashes.all_full_rank() and covers_all(hashes, language)


def satisfies(variant: PredicateVariant, hashes: HashTuple, language: LanguageSlice) -> bool:
    """Evaluates the predicate named by 'variant'."""
    if variant is PredicateVariant.T_TILDE:
        return covers_all_fullrank(hashes, language)

    return covers_all(hashes, language)


def smallest_isolating_index(
        hashes: HashTuple,
        x: BitString,
        language: LanguageSlice,
        require_full_rank: bool = False
) -> int | None:
    """
    Returns the smallest 1-based i such that h_i isolates x, or None.

    Parameters
    ----------
    hashes : HashTuple
        The tuple.
    x : BitString
        A member of the slice.
    language : LanguageSlice
        The slice.
    require_full_rank : bool, optional
        Skip matrices whose rank is below k+1 (default is False).

    Returns
    -------
    int | None
        The index, or None if no member of the tuple qualifies.
    """
    for index, h in enumerate(hashes, start=1):
        if require_full_rank and not h.has_full_rank():
            continue
        if isolates(h, x, language):
            return index

    return None


def _check_member(h: GF2Matrix, x: BitString, language: LanguageSlice) -> None:
    if h.get_column_count() != language.get_n():
        raise DimensionError(f"Hash has {h.get_column_count()} columns but the slice has length {language.get_n()}.")
    if not language.member(x):
        raise NotInLanguage(f"{x} is not a member of {language.get_spec()}.")


def _check_shape(hashes: HashTuple, language: LanguageSlice) -> None:
    if hashes.get_length() != language.get_n():
        raise DimensionError(f"Tuple hashes length {hashes.get_length()} but the slice has length {language.get_n()}.")
