import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data" / "v1"


@pytest.fixture(scope="session")
def data_dir():
    return DATA
