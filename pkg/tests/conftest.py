import random

import pytest

from sl3building.dvr import DVRContext


@pytest.fixture(params=[2, 3], ids=["p2", "p3"])
def ctx(request):
    return DVRContext(request.param)


@pytest.fixture
def ctx2():
    return DVRContext(2)


@pytest.fixture
def rng(request):
    return random.Random(request.node.name)
