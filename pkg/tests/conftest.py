from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reuleaux import random_polygon, regular  # noqa: E402


@pytest.fixture(scope="session")
def regular_pool():
    return [regular(N) for N in range(1, 10)]


@pytest.fixture(scope="session")
def random_pool():
    # mixed vertex counts, fixed seeds: deterministic across runs
    return [random_polygon(2 + seed % 3, 30 + seed % 11, seed=seed)
            for seed in range(300, 330)]
