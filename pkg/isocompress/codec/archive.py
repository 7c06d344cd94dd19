import logging
import struct
from dataclasses import dataclass
from typing import BinaryIO

from isocompress import constants, validation
from isocompress.algebra.bit_string import BitString
from isocompress.codec.compressed_record import CompressedRecord
from isocompress.errors import ConfigError, DimensionError, DigestTooWide, FormatError, IngestError

_logger = logging.getLogger(__name__)

_HEADER = struct.Struct("<4sBHHH")
_COUNT = struct.Struct("<I")
_RECORD = struct.Struct("<QH")


@dataclass(frozen=True)
class Archive:
    """
    The content of an ILC1 archive.

    Attributes
    ----------
    lang_spec : str
        The spec text of the slice the records were encoded against.
    n : int
        The string length shared by all records.
    k : int
        The digest parameter shared by all records.
    records : tuple[CompressedRecord, ...]
        The records, in file order.
    """

    lang_spec: str
    n: int
    k: int
    records: tuple[CompressedRecord, ...]


def write_archive(
        records: list[CompressedRecord],
        lang_spec: str,
        sink: BinaryIO,
        n: int = 0,
        k: int = 0
) -> int:
    """
    Writes records in the ILC1 layout.

    Header: magic 'ILC1', version byte, n and k as 16-bit little-endian,
    the UTF-8 spec prefixed by its 16-bit length, the 32-bit record count.
    Each record: seed (64-bit), index (16-bit), digest in ceil((k+1)/8)
    bytes with digest bit 0 in the least significant bit of the first byte.

    Parameters
    ----------
    records : list[CompressedRecord]
        Records sharing one (n, k).
    lang_spec : str
        The spec text of the slice.
    sink : BinaryIO
        A writable binary stream.
    n : int, optional
        Header n when 'records' is empty (default is 0).
    k : int, optional
        Header k when 'records' is empty (default is 0).

    Returns
    -------
    int
        The number of bytes written.

    Raises
    ------
    ConfigError
        If the records disagree on (n, k) or the spec does not fit 16 bits.
    """
    if records:
        n, k = records[0].get_n(), records[0].get_k()
        if any((record.get_n(), record.get_k()) != (n, k) for record in records):
            raise ConfigError("All records of an archive must share n and k!")

    spec_bytes = lang_spec.encode("utf-8")
    validation.is_in_range(len(spec_bytes), 0, 0xFFFF, "'lang_spec' is too long for an archive!")

    data = bytearray(_HEADER.pack(constants.ARCHIVE_MAGIC, constants.ARCHIVE_VERSION, n, k, len(spec_bytes)))
    data += spec_bytes
    data += _COUNT.pack(len(records))
    for record in records:
        data += _RECORD.pack(record.get_seed(), record.get_index())
        data += record.get_digest().to_bytes()

    sink.write(bytes(data))
    return len(data)


def read_archive(source: BinaryIO) -> Archive:
    """
    Reads an ILC1 archive.

    Parameters
    ----------
    source : BinaryIO
        A readable binary stream positioned at the magic.

    Returns
    -------
    Archive
        The spec text, (n, k) and the records.

    Raises
    ------
    FormatError
        On bad magic or version, truncation, trailing bytes, or fields that
        do not form valid records.
    """
    magic, version, n, k, spec_length = _HEADER.unpack(_read_exact(source, _HEADER.size))
    if magic != constants.ARCHIVE_MAGIC:
        raise FormatError(f"Bad magic {magic!r}, expected {constants.ARCHIVE_MAGIC!r}.")
    if version != constants.ARCHIVE_VERSION:
        raise FormatError(f"Unsupported archive version {version}.")

    try:
        lang_spec = _read_exact(source, spec_length).decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"Language spec is not valid UTF-8: {e}") from e

    (count,) = _COUNT.unpack(_read_exact(source, _COUNT.size))
    digest_bytes = BitString.byte_count(k + 1)
    records = []
    for position in range(count):
        seed, index = _RECORD.unpack(_read_exact(source, _RECORD.size))
        payload = _read_exact(source, digest_bytes)
        try:
            records.append(CompressedRecord(n, k, seed, index, BitString.from_bytes(payload, k + 1)))
        except (ConfigError, DimensionError, DigestTooWide) as e:
            raise FormatError(f"Record {position} is invalid: {e}") from e

    if source.read(1):
        raise FormatError("Trailing bytes after the last record.")

    return Archive(lang_spec, n, k, tuple(records))


def save_archive(path: str, records: list[CompressedRecord], lang_spec: str, n: int = 0, k: int = 0) -> None:
    """
    Writes an archive file.

    Parameters
    ----------
    path : str
        The target file; overwritten if it exists.
    records : list[CompressedRecord]
        Records sharing one (n, k).
    lang_spec : str
        The spec text of the slice.
    n : int, optional
        Header n when 'records' is empty (default is 0).
    k : int, optional
        Header k when 'records' is empty (default is 0).

    Raises
    ------
    IngestError
        If the file cannot be written.
    """
    try:
        with open(path, "wb") as file:
            size = write_archive(records, lang_spec, file, n, k)
    except OSError as e:
        raise IngestError(f"Cannot write '{path}': {e.strerror}") from e
    _logger.info("Wrote %d records (%d bytes) to %s", len(records), size, path)


def load_archive(path: str) -> Archive:
    """
    Reads an archive file.

    Parameters
    ----------
    path : str
        The archive file.

    Returns
    -------
    Archive
        Its content.

    Raises
    ------
    IngestError
        If the file does not exist.
    FormatError
        If the content is malformed.
    """
    validation.is_valid_path(path, f"Archive '{path}' not found!")
    with open(path, "rb") as file:
        archive = read_archive(file)
    _logger.info("Read %d records for %s from %s", len(archive.records), archive.lang_spec, path)
    return archive


def _read_exact(source: BinaryIO, size: int) -> bytes:
    data = source.read(size)
    if len(data) != size:
        raise FormatError(f"Archive truncated: expected {size} bytes, got {len(data)}.")

    return data
