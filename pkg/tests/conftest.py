"""Shared helpers: seeded random families and data paths."""

import random
from itertools import combinations
from pathlib import Path

import pytest

from kkcliques.families import SetFamily

DATA_DIR = Path(__file__).parent / "data"


def random_family(rng: random.Random, n: int, s: int, density: float = 0.3) -> SetFamily:
    """Each s-subset of [n] included independently with the given density."""
    edges = [
        sum(1 << (v - 1) for v in c)
        for c in combinations(range(1, n + 1), s)
        if rng.random() < density
    ]
    return SetFamily(n, s, frozenset(edges))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)
