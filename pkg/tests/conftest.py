import random

import pytest

from macdgroups import make_group

# Reference parameter sets used throughout the suite.
P1 = (3, 1, 4)
P2 = (5, 1, 6)
P3 = (3, 2, 10)
P4 = (7, 1, 8)
ALL_PARAMS = (P1, P2, P3, P4)


@pytest.fixture(scope="session")
def K1():
    return make_group(*P1, "K")


@pytest.fixture(scope="session")
def H1():
    return make_group(*P1, "H")


@pytest.fixture(scope="session")
def J1():
    return make_group(*P1, "J")


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


def random_element(group, rng):
    return group.unindex(rng.randrange(group.order))
