import itertools

import numpy as np
import pytest

from hypersub import families as F
from hypersub.hypergraph import Hypergraph


@pytest.fixture
def triple():
    return F.single_edge(3)


@pytest.fixture
def fano():
    return F.fano_plane()


def random_uniform(rng, n, k, m):
    """Random k-uniform hypergraph on n vertices with no dangling vertex."""
    pool = list(itertools.combinations(range(n), k))
    while True:
        pick = rng.choice(len(pool), size=m, replace=False)
        edges = [pool[i] for i in pick]
        if len({v for e in edges for v in e}) == n:
            return Hypergraph(n, tuple(edges))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
