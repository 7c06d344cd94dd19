import os


# Data directories
DATA_DIRECTORY = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')
LANGUAGE_DIRECTORY = os.path.join(DATA_DIRECTORY, 'languages')
FAMILY_DIRECTORY = os.path.join(DATA_DIRECTORY, 'families')


# Strings
MAX_STRING_LENGTH = 64
BITS_PER_BYTE = 8


# Seeds
DEFAULT_SEED_SPACE = 2 ** 16
MAX_SEED_SPACE = 2 ** 32
SEARCH_CHUNK_SIZE = 256


# SplitMix64
WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB
LENGTH_SHIFT = 32


# Enumeration
DEFAULT_SCAN_CAP = 24
FULL_SWEEP_CAP = 20
PREIMAGE_BLOCK_BITS = 16


# Records
SEED_FIELD_BITS = 64
INDEX_FIELD_BITS = 16
RECORD_OVERHEAD_BITS = SEED_FIELD_BITS + INDEX_FIELD_BITS


# Archive
ARCHIVE_MAGIC = b"ILC1"
ARCHIVE_VERSION = 0x01


# Probability bounds
COVERAGE_BOUND = 0.5
FULL_RANK_COVERAGE_BOUND = 1 / 3
SIGMA_TOLERANCE = 3.0


# Parallelism
DEFAULT_JOBS = 1


# Logging
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DEFAULT_LOG_LEVEL = "WARNING"
