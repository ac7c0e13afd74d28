import random
from pathlib import Path

import pytest

from finspace.posets import Poset

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def random_poset(rng: random.Random, n_max: int = 8, n_min: int = 1) -> Poset:
    """Random poset: a shuffled linear extension with random comparabilities,
    transitively closed."""
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    prob = rng.choice((0.15, 0.3, 0.5))
    up = [1 << i for i in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < prob:
                up[order[a]] |= 1 << order[b]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            probe = up[i]
            while probe:
                low = probe & -probe
                acc |= up[low.bit_length() - 1]
                probe ^= low
            if acc != up[i]:
                up[i] = acc
                changed = True
    return Poset(up)


def random_connected_poset(rng: random.Random, n_max: int = 8) -> Poset:
    while True:
        p = random_poset(rng, n_max=n_max, n_min=2)
        if p.is_connected:
            return p


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR
