import pytest

from isocompress.algebra.bit_string import BitString
from isocompress.language.explicit_slice import ExplicitSlice

ENDS_IN_ONE = """\
# Strings whose last symbol is 1.
states 2
start 0
accept 1
0 0 0
0 1 1
1 0 0
1 1 1
"""


@pytest.fixture
def write_lines(tmp_path):
    """Writes lines to a file under tmp_path and returns its path."""
    def write(lines: list[str], name: str = "members.txt") -> str:
        path = tmp_path / name
        path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def ends_in_one_path(tmp_path) -> str:
    path = tmp_path / "ends_in_one.dfa"
    path.write_text(ENDS_IN_ONE, encoding="utf-8")
    return str(path)


@pytest.fixture
def explicit():
    """Builds an in-memory explicit slice from written strings."""
    def make(texts: list[str], n: int | None = None) -> ExplicitSlice:
        members = [BitString.from_text(text) for text in texts]
        return ExplicitSlice(members, n if n is not None else members[0].get_length())

    return make
