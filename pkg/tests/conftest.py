import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci", max_examples=30, derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def pentagon_pair():
    from hypfree.families import pentagon
    return pentagon()


@pytest.fixture(scope="session")
def boolean3():
    from hypfree.arrangement import Arrangement
    return Arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture(scope="session")
def coned_a2():
    from hypfree.arrangement import Arrangement
    return Arrangement(3, [[1, 0, 0], [0, 1, 0], [1, -1, 0], [0, 0, 1]])
