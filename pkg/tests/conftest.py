from pathlib import Path

import pytest

from matchgames import datasets

DEMO_DATA = Path(__file__).parents[1] / "demos" / "data"


@pytest.fixture
def labor_market():
    return datasets.labor_market()


@pytest.fixture
def job_market():
    return datasets.job_market()


@pytest.fixture
def union_game():
    return datasets.union_game()


@pytest.fixture
def demo_data_dir():
    return DEMO_DATA
