"""Shared fixtures: bundled codes and seeded random code builders."""

import random

import pytest

from jacweight.codes import LinearCode, load_code
from jacweight.rings import RingSpec

_CODE_CACHE: dict[str, LinearCode] = {}

FIXTURE_NAMES = (
    "e8",
    "e8x2",
    "d16plus",
    "g24",
    "d24plus",
    "z4_small",
    "f4_small",
)

REFERENCE_PAIRS = (
    ("e8", "e8"),
    ("e8x2", "e8x2"),
    ("d16plus", "e8x2"),
    ("d16plus", "d16plus"),
    ("g24", "g24"),
    ("d24plus", "d24plus"),
    ("g24", "d24plus"),
)


def get_code(name: str) -> LinearCode:
    if name not in _CODE_CACHE:
        _CODE_CACHE[name] = load_code(name)
    return _CODE_CACHE[name]


@pytest.fixture(scope="session")
def codes():
    return get_code


def random_code(ring: RingSpec, n: int, rows: int, rng: random.Random) -> LinearCode:
    """Random generator matrix with at least one nonzero row."""
    while True:
        gens = tuple(
            tuple(rng.randrange(ring.order) for _ in range(n)) for _ in range(rows)
        )
        if any(any(row) for row in gens):
            return LinearCode(ring=ring, n=n, generators=gens)


def random_mask(ring: RingSpec, n: int, rng: random.Random):
    return tuple(rng.randrange(ring.order) for _ in range(n))
