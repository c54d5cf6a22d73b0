import os
from pathlib import Path

import pytest

DATA = Path(os.environ.get("MULTISWAP_DATA", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture
def data_dir():
    return DATA
