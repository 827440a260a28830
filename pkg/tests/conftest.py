import os

import pytest

from cmlcipher.keyfile import read_key
from cmlcipher.pgm import read_pgm

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
GOLDEN_DIR = os.path.join(DATA_DIR, "golden")


def golden_path(name: str) -> str:
    return os.path.join(GOLDEN_DIR, name)


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope="session")
def demo_key():
    """The published demonstration key every golden vector was built from."""
    return read_key(golden_path("demo.key"))


@pytest.fixture(scope="session")
def photo():
    """Bundled 256x256 natural grayscale photo."""
    return read_pgm(data_path("photo_256.pgm"))
