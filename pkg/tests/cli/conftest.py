import logging

import pytest


@pytest.fixture(autouse=True)
def restore_root_logger():
    """Undoes the handlers each command installs on the root logger."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
