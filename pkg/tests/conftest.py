import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import synthetic_values, write_series_csv  # noqa: E402


@pytest.fixture(scope="session")
def ett_like_csv(tmp_path_factory):
    """Hourly 7-channel CSV with ETTh-style shape (17420 rows, last column OT)."""
    path = tmp_path_factory.mktemp("data") / "ETTh1.csv"
    cols = ["HUFL", "HULL", "MUFL", "MULL", "LUFL", "LULL", "OT"]
    return write_series_csv(path, synthetic_values(17420, 7, seed=3), cols)


@pytest.fixture
def small_csv(tmp_path):
    return write_series_csv(tmp_path / "toy.csv", synthetic_values(400, 3, seed=1))
