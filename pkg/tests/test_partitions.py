import numpy as np
import pytest

from hypersub import families as F
from hypersub.errors import NotEquitable
from hypersub.hypergraph import adjacency_matrix
from hypersub.partitions import (
    Partition, QuotientMatrix, check_equitable, containment_check, match_contained,
    refine_to_equitable,
)
from hypersub.predictors import hyperflower_quotient, squid_like_quotient
from hypersub.subdivision import subdivide
from hypersub.witnesses import hyperflower_partition, squid_like_partition


def _sub_adj(H):
    return adjacency_matrix(subdivide(H).hypergraph)


def test_hyperflower_quotient_matches_closed_block():
    A = _sub_adj(F.hyperflower(4, 2, 3))
    Q = check_equitable(A, hyperflower_partition(4, 2, 3))
    assert np.allclose(Q.matrix, hyperflower_quotient(4, 2, 3))
    assert containment_check(Q, A)


def test_squid_like_quotient_matches_closed_block():
    A = _sub_adj(F.squid_like(3))
    Q = check_equitable(A, squid_like_partition(3))
    assert np.allclose(Q.matrix, squid_like_quotient(3))


def test_discrete_partition_gives_a():
    A = _sub_adj(F.fano_plane())
    Q = check_equitable(A, Partition.discrete(A.shape[0]))
    assert np.array_equal(Q.matrix, A)
    assert containment_check(Q, A)


def test_perturbed_quotient_not_contained():
    A = _sub_adj(F.hyperflower(4, 2, 3))
    Q = check_equitable(A, hyperflower_partition(4, 2, 3))
    M = Q.matrix.copy()
    M[0, 1] += 0.1
    assert not containment_check(QuotientMatrix(M, Q.partition), A)


def test_not_equitable_reports_location():
    A = _sub_adj(F.single_edge(3))
    with pytest.raises(NotEquitable) as info:
        check_equitable(A, Partition.trivial(4))
    assert info.value.deviation > 0


def test_refine_triple():
    P = refine_to_equitable(_sub_adj(F.single_edge(3)))
    assert sorted(map(sorted, P.cells)) == [[0, 1, 2], [3]]


def test_refine_complete_graph_unchanged():
    P = refine_to_equitable(adjacency_matrix(F.complete_graph(6)))
    assert P == Partition.trivial(6)


def test_refine_hyperflower_refines_proof_partition():
    A = _sub_adj(F.hyperflower(4, 2, 3))
    P = refine_to_equitable(A)
    check_equitable(A, P)
    proof = hyperflower_partition(4, 2, 3)
    where = proof.cell_of()
    assert all(len({where[v] for v in c}) == 1 for c in P.cells)
    assert refine_to_equitable(A, proof) == proof


@pytest.mark.parametrize("H", [F.squid_like(4), F.petal_overlapped_hyperflower(5, 1, 2),
                               F.power_of_graph(F.petersen(), 3)])
def test_refinement_always_equitable(H):
    A = _sub_adj(H)
    P = refine_to_equitable(A)
    assert containment_check(check_equitable(A, P), A)
    assert refine_to_equitable(A, P) == P


def test_match_contained():
    assert match_contained([1, 1], [1, 2, 1 + 1e-12], 1e-8) == pytest.approx(1e-12)
    assert match_contained([1, 1], [1, 2], 1e-8) is None


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.of([[0, 1], [1, 2]]).validate_for(3)
    with pytest.raises(ValueError):
        Partition.of([[0, 1]]).validate_for(3)
