import numpy as np
import pytest

from henoncert import HenonMap, IteratedMap, make_paper_hsets


@pytest.fixture(scope="session")
def paper_hsets():
    a, b = make_paper_hsets()
    return {"a": a, "b": b}


@pytest.fixture(scope="session")
def h4():
    return IteratedMap(HenonMap(), k=4)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260823)
