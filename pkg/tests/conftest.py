import pytest

from torcrys.torep import build_doubled, build_thin


@pytest.fixture(scope="session")
def thin_3_1():
    return build_thin(3, 1, (-12, 16))


@pytest.fixture(scope="session")
def thin_3_2():
    return build_thin(3, 2, (-12, 16))


@pytest.fixture(scope="session")
def s5_small():
    return build_doubled(1, (-12, 12))
