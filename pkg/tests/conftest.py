from pathlib import Path

import pytest

from isotone import fixtures


@pytest.fixture
def data_dir() -> Path:
    return Path(__file__).parent / "data"


@pytest.fixture
def D():
    return fixtures.DIAMOND
