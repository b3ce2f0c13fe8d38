from __future__ import annotations

import random

import pytest

from vlink import parse
from vlink.oracle import random_diagram

UNKNOT = "cup 1; cap 1"
HOPF = "cup 1; cup 3; x+ 2; x+ 2; cap 1; cap 1"
HOPF_UP = HOPF + "\norient 1 -\norient 2 +"   # both strands upward at the crossings
VHOPF = "cup 1; cup 3; x+ 2; v 2; cap 1; cap 1"
CURL = "cup 1; x+ 1; cap 1"
TWO_LOOPS = "cup 1; cup 3; cap 1; cap 1"
NESTED_LOOPS = "cup 1; cup 2; cap 2; cap 1"


@pytest.fixture
def unknot():
    return parse(UNKNOT)


@pytest.fixture
def hopf():
    return parse(HOPF)


@pytest.fixture
def hopf_up():
    return parse(HOPF_UP)


@pytest.fixture
def vhopf():
    return parse(VHOPF)


def sample_diagrams(n: int, seed: int = 0, max_components: int = 3,
                    max_crossings: int = 8):
    """A reproducible stream of assorted small diagrams."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        out.append(random_diagram(rng.randint(1, max_components),
                                  rng.randint(0, max_crossings),
                                  rng.choice([0.0, 0.3, 0.6, 1.0]),
                                  seed=rng.randint(0, 10 ** 6)))
    return out
