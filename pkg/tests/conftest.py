import random
from itertools import combinations

import pytest

from tperfect.core.graph import Graph


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240831)


def random_graph(rnd, n, p=0.4):
    es = [e for e in combinations(range(n), 2) if rnd.random() < p]
    return Graph(n, es)


@pytest.fixture(scope="session")
def small_random_graphs():
    rnd = random.Random(7)
    out = []
    for _ in range(120):
        n = rnd.randint(1, 10)
        out.append(random_graph(rnd, n, rnd.uniform(0.15, 0.7)))
    return out
