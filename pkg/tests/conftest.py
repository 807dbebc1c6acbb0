import math

import pytest

from rsheat import BoundaryParam, QuadSpec


@pytest.fixture
def tight_spec():
    return QuadSpec(rel_tol=1e-12, abs_tol=1e-14)


@pytest.fixture
def bp0():
    return BoundaryParam(0.0)


@pytest.fixture
def bp_quarter():
    return BoundaryParam(math.pi / 4)


@pytest.fixture
def bp_three_quarter():
    return BoundaryParam(3 * math.pi / 4)


@pytest.fixture
def bp_friedrichs():
    return BoundaryParam.friedrichs()
