import pytest
from hypothesis import HealthCheck, settings

from krizmodel.ring import cp_ring, curve_ring

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

RINGS = {"cp1": cp_ring(1), "cp2": cp_ring(2), "curve2": curve_ring(2)}


@pytest.fixture(params=sorted(RINGS))
def ring(request):
    return RINGS[request.param]


@pytest.fixture
def cp1():
    return RINGS["cp1"]


@pytest.fixture
def cp2():
    return RINGS["cp2"]


@pytest.fixture
def curve2():
    return RINGS["curve2"]
