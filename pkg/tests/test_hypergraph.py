import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypersub import errors
from hypersub import families as F
from hypersub.hypergraph import (
    Hypergraph, adjacency_matrix, codegree, codegree_matrix, degree, degrees,
    incidence_matrix, is_linear, is_regular, is_uniform, new_hypergraph,
)

from conftest import random_uniform


def test_smallest_uniform_case():
    H = new_hypergraph(3, [{0, 1, 2}])
    assert H.m == 1 and is_uniform(H) == 3


def test_dangling_vertex_named():
    with pytest.raises(errors.DanglingVertex, match="2"):
        new_hypergraph(3, [{0, 1}])


@pytest.mark.parametrize("edges, exc", [
    ([[]], errors.EmptyEdge),
    ([[0]], errors.SingletonEdge),
    ([[0, 5]], errors.VertexOutOfRange),
    ([[0, 1], [1, 0]], errors.DuplicateEdge),
])
def test_rejects_bad_edges(edges, exc):
    with pytest.raises(exc):
        new_hypergraph(2, edges)


def test_multi_edges_allowed_on_request():
    H = new_hypergraph(2, [[0, 1], [0, 1]], multi_edges=True)
    assert H.m == 2 and codegree(H, 0, 1) == 2


def test_degree_and_codegree_examples(fano):
    H = new_hypergraph(4, [{0, 1, 2}, {0, 1, 3}])
    assert degree(H, 0) == 2
    assert codegree(H, 0, 1) == 2
    assert degree(F.single_edge(3), 2) == 1
    assert codegree(F.single_edge(3), 0, 1) == 1
    assert all(degree(fano, v) == 3 for v in range(7))
    assert all(codegree(fano, u, v) == 1 for u, v in itertools.combinations(range(7), 2))


def test_codegree_same_vertex():
    with pytest.raises(errors.SameVertex):
        codegree(F.single_edge(3), 1, 1)


def test_uniform_regular_linear(fano, triple):
    assert (is_uniform(triple), is_regular(triple), is_linear(triple)) == (3, 1, True)
    assert (is_uniform(fano), is_regular(fano), is_linear(fano)) == (3, 3, True)
    assert is_uniform(new_hypergraph(4, [[0, 1, 2], [2, 3]])) is None


def test_adjacency_examples(triple):
    A = adjacency_matrix(triple)
    assert np.allclose(A, (np.ones((3, 3)) - np.eye(3)) / 2)
    H = new_hypergraph(4, [{0, 1, 2}, {0, 1, 3}])
    A = adjacency_matrix(H)
    assert A[0, 1] == 1 and A[0, 2] == 0.5
    G = F.cycle_graph(5)
    assert set(np.unique(adjacency_matrix(G))) == {0.0, 1.0}


def test_adjacency_needs_uniformity():
    with pytest.raises(errors.NotUniform):
        adjacency_matrix(new_hypergraph(4, [[0, 1, 2], [2, 3]]))


def test_codegree_matrix_examples(fano):
    assert np.array_equal(codegree_matrix(fano), np.ones((7, 7)) - np.eye(7))
    H = new_hypergraph(4, [{0, 1, 2}, {0, 1, 3}])
    assert codegree_matrix(H)[0, 1] == 2


def test_incidence_of_triple(triple):
    assert np.array_equal(incidence_matrix(triple), np.ones((3, 1)))


def test_incidence_gram_of_cycle():
    G = F.cycle_graph(4)
    B = incidence_matrix(G)
    assert np.array_equal(B @ B.T, 2 * np.eye(4) + adjacency_matrix(G))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 8), k=st.integers(2, 4))
def test_gram_is_degrees_plus_codegrees(seed, n, k):
    rng = np.random.default_rng(seed)
    k = min(k, n - 1)
    total = len(list(itertools.combinations(range(n), k)))
    m = int(rng.integers(-(-n // k), total + 1))
    H = random_uniform(rng, n, k, m)
    B = incidence_matrix(H)
    brute = np.zeros((n, n))
    for u in range(n):
        for v in range(n):
            brute[u, v] = sum(1 for e in H.edges if u in e and v in e)
    assert np.array_equal(B @ B.T, brute)
    assert np.array_equal(B @ B.T, np.diag(degrees(H)) + codegree_matrix(H))
    A = adjacency_matrix(H)
    assert np.allclose(A, A.T) and np.allclose(A, codegree_matrix(H) / (k - 1))


def test_relabel_roundtrip(rng):
    H = F.petal_overlapped_hyperflower(4, 2, 2)
    perm = rng.permutation(H.n)
    K = H.relabel(perm)
    assert K.label(int(perm[0])) == H.label(0)
    assert np.allclose(adjacency_matrix(K)[np.ix_(perm, perm)], adjacency_matrix(H))
    with pytest.raises(errors.HypergraphError):
        H.relabel([0] * H.n)


def test_json_roundtrip():
    H = F.hyperflower(3, 2, 2)
    assert Hypergraph.loads(H.dumps()) == H
    assert Hypergraph.loads(H.dumps()).index_of("w2") == 1
