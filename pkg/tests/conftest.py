import random

import pytest

from kontext.fixtures import fixture_data, load_fixture


@pytest.fixture(scope="session")
def u4():
    return load_fixture("U4")


@pytest.fixture(scope="session")
def h6():
    return load_fixture("H6")


@pytest.fixture(scope="session")
def u9():
    return load_fixture("U9")


@pytest.fixture(scope="session")
def u4_data():
    return fixture_data("U4")


@pytest.fixture(scope="session")
def h6_data():
    return fixture_data("H6")


@pytest.fixture
def rng():
    return random.Random(20240611)
