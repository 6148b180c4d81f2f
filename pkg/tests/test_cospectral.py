import networkx as nx
import numpy as np
import pytest

from hypersub import families as F
from hypersub.cospectral import (
    are_cospectral, direct_certificate, power_subdivision_pair, subdivision_pair,
)
from hypersub.errors import InputsIsomorphic, NotCospectralInput, NotRegular, NotUniform
from hypersub.hypergraph import new_hypergraph
from hypersub.isomorphism import Verdict, isomorphism
from hypersub.subdivision import subdivide


def _incidence_nx(H):
    g = nx.Graph()
    for v in range(H.n):
        g.add_node(("v", v), kind=0)
    for j, e in enumerate(H.edges):
        g.add_node(("e", j), kind=1)
        g.add_edges_from((("v", v), ("e", j)) for v in e)
    return g


def _nx_iso(H1, H2):
    return nx.is_isomorphic(_incidence_nx(H1), _incidence_nx(H2),
                            node_match=lambda a, b: a["kind"] == b["kind"])


def test_shrikhande_rook_not_isomorphic():
    res = isomorphism(F.shrikhande(), F.rook4x4())
    assert res.verdict is Verdict.NON_ISOMORPHIC
    assert not _nx_iso(F.shrikhande(), F.rook4x4())


def test_mapping_is_an_isomorphism(rng):
    H = F.petal_overlapped_hyperflower(5, 2, 1)
    K = H.relabel(rng.permutation(H.n))
    res = isomorphism(H, K)
    assert res.verdict is Verdict.ISOMORPHIC
    image = {tuple(sorted(res.mapping[v] for v in e)) for e in H.edges}
    assert image == set(K.edges)


def test_budget_exhaustion_is_undecided():
    assert isomorphism(F.shrikhande(), F.rook4x4(), node_budget=1).verdict is Verdict.UNDECIDED


def test_agrees_with_networkx(rng):
    from conftest import random_uniform
    for _ in range(25):
        n, k = int(rng.integers(4, 8)), int(rng.integers(2, 4))
        m = int(rng.integers(n // k + 1, n + 2))
        a = random_uniform(rng, n, k, m)
        b = random_uniform(rng, n, k, m) if rng.random() < 0.5 else a.relabel(rng.permutation(n))
        ours = isomorphism(a, b).verdict is Verdict.ISOMORPHIC
        assert ours == _nx_iso(a, b)


def test_subdivision_pair_certificate():
    cert = subdivision_pair(F.shrikhande(), F.rook4x4())
    assert cert.provenance == "t8"
    assert cert.first.n == 64 and cert.max_deviation <= 1e-9
    assert cert.verdict is Verdict.NON_ISOMORPHIC and cert.nonisomorphism_basis == "verified"
    assert cert.to_dict()["input_isomorphism"] == "non-isomorphic"


def test_power_pair_certificate():
    cert = power_subdivision_pair(F.shrikhande(), F.rook4x4(), 3)
    assert cert.provenance == "t7" and cert.first.n == 112
    assert cert.extra["predicted_deviation"] <= 1e-9
    assert cert.extra["prediction_vs_oracle"] <= 1e-7


def test_subdivision_pair_rejects():
    with pytest.raises(NotCospectralInput):
        subdivision_pair(F.cycle_graph(6), F.circulant(6, [1, 5, 3]))
    with pytest.raises(InputsIsomorphic):
        subdivision_pair(F.petersen(), F.petersen().relabel([3, 1, 4, 0, 2, 9, 8, 7, 6, 5]))
    with pytest.raises(NotRegular):
        subdivision_pair(F.hyperflower(2, 1, 1), F.hyperflower(2, 1, 1))
    with pytest.raises(NotUniform):
        are_cospectral(new_hypergraph(4, [[0, 1, 2], [2, 3]]), F.single_edge(2))


def test_direct_certificate():
    cert = direct_certificate(F.shrikhande(), F.rook4x4())
    assert cert.provenance == "direct" and cert.nonisomorphism_basis == "verified"


@pytest.mark.parametrize("seed", range(100))
def test_shuffle_invariance(seed):
    rng = np.random.default_rng(seed)
    S1 = subdivide(F.shrikhande()).hypergraph
    S2 = subdivide(F.rook4x4()).hypergraph
    a = S1.relabel(rng.permutation(S1.n))
    b = S2.relabel(rng.permutation(S2.n))
    assert are_cospectral(a, b)[0]
    assert are_cospectral(a, S1)[0]
