from isocompress import constants
from isocompress.errors import ConfigError
from isocompress.language.dfa_slice import DfaSlice
from isocompress.language.explicit_slice import ExplicitSlice
from isocompress.language.hamming_slice import HammingSlice
from isocompress.language.language_slice import LanguageSlice
from isocompress.language.random_slice import RandomSlice

SPEC_FORMS = (
    "explicit:<path>[:<n>]",
    "hamming:<n>:<w>",
    "dfa:<path>:<n>",
    "random:<n>:<count>:<seed>",
)


def load_language(spec: str, scan_cap: int = constants.DEFAULT_SCAN_CAP) -> LanguageSlice:
    """
    Builds a slice from its spec text.

    Parameters
    ----------
    spec : str
        One of the forms in SPEC_FORMS.
    scan_cap : int, optional
        The scan cap (default is constants.DEFAULT_SCAN_CAP).

    Returns
    -------
    LanguageSlice
        The slice.

    Raises
    ------
    ConfigError
        If the spec text matches no form.
    IngestError
        If a referenced file is missing or malformed.
    """
    kind, _, rest = spec.partition(":")
    if kind == "explicit" and rest:
        path, n = _split_length(rest, required=False)
        return ExplicitSlice.load(path, n, scan_cap)
    if kind == "dfa" and rest:
        path, n = _split_length(rest, required=True)
        return DfaSlice.load(path, n, scan_cap)
    if kind == "hamming":
        n, weight = _parse_integers(spec, rest, 2)
        return HammingSlice(n, weight, scan_cap)
    if kind == "random":
        n, count, seed = _parse_integers(spec, rest, 3)
        return RandomSlice(n, count, seed, scan_cap)

    raise ConfigError(f"Unknown language spec {spec!r}; expected one of {', '.join(SPEC_FORMS)}.")


def _split_length(rest: str, required: bool) -> tuple[str, int | None]:
    path, separator, tail = rest.rpartition(":")
    if separator and tail.isdigit():
        return path, int(tail)
    if required:
        raise ConfigError(f"Spec needs a trailing ':<n>' length, got {rest!r}.")

    return rest, None


def _parse_integers(spec: str, rest: str, count: int) -> list[int]:
    fields = rest.split(":")
    if len(fields) != count or not all(field.isdigit() for field in fields):
        raise ConfigError(f"Spec {spec!r} needs {count} non-negative integer fields.")

    return [int(field) for field in fields]
