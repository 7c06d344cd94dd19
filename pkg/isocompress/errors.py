class IsoCompressError(Exception):
    """Root of every error raised by the isocompress package."""


class ConfigError(IsoCompressError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class DimensionError(IsoCompressError):
    """Lengths or matrix shapes do not fit together."""


class EnumerationUnsupported(IsoCompressError):
    """A slice cannot be enumerated: no native enumerator and n above the scan cap."""


class EmptyLanguage(IsoCompressError):
    """The slice has no members."""


class DigestTooWide(IsoCompressError):
    """The digest width k+1 exceeds the string length n."""


class NotInLanguage(IsoCompressError):
    """The string is not a member of the slice."""


class SeedSpaceExhausted(IsoCompressError):
    """No seed in the configured seed space satisfies the search predicate."""


class CorruptRecord(IsoCompressError):
    """No member of the slice matches the record."""


class AmbiguousRecord(IsoCompressError):
    """Several members of the slice match the record."""


class FormatError(IsoCompressError):
    """An archive is malformed: bad magic, bad version, truncation or bad fields."""


class IngestError(IsoCompressError):
    """A language or family text file is malformed."""
