import pytest

from hyperball import packing


@pytest.fixture(scope="session")
def model7():
    return packing.build_3d(7)


@pytest.fixture(scope="session")
def model5():
    return packing.build_5d()
