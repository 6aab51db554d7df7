import pytest

from rooklab import free_census


@pytest.fixture(scope="session")
def census5():
    return free_census(5)


@pytest.fixture(scope="session")
def census6():
    return free_census(6)


@pytest.fixture(scope="session")
def census8():
    return free_census(8)
