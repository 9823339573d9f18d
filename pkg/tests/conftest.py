import random

import pytest

from u4codes import GF, compute_decomposition


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)


@pytest.fixture(scope="session")
def gf4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return GF(2, 3)


@pytest.fixture(scope="session")
def dec7(gf2):
    """The fully worked binary instance: n = 7, delta = 1, alpha = 1."""
    return compute_decomposition(gf2, 7, 1, 1)


@pytest.fixture
def rng():
    return random.Random(0xA5A5)


def rand_poly(gf, rng, max_deg, nonzero=False):
    while True:
        p = [rng.randrange(gf.q) for _ in range(rng.randint(0, max_deg) + 1)]
        while p and p[-1] == 0:
            p.pop()
        if p or not nonzero:
            return tuple(p)
