"""Subdivision operator: each hyperedge of size k becomes one new vertex plus
k hyperedges, each formed by the new vertex and k-1 of the old vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class SubdivisionResult:
    hypergraph: Hypergraph
    new_vertex_of_edge: tuple[int, ...]
    origin_edge_of_new_edge: tuple[int, ...]

    def provenance(self) -> dict:
        return {
            "new_vertex_of_edge": list(self.new_vertex_of_edge),
            "origin_edge_of_new_edge": list(self.origin_edge_of_new_edge),
        }


def _fresh_prefix(labels: tuple[str, ...] | None) -> str:
    prefix = "p"
    if labels is not None:
        taken = {s.split("_", 1)[0] for s in labels if "_" in s}
        while prefix in taken:
            prefix += "'"
    return prefix


def subdivide(H: Hypergraph) -> SubdivisionResult:
    """Subdivide every hyperedge of ``H``.

    The new vertex of edge ``j`` gets id ``n + j`` and label ``p_{j+1}``.
    New edges are grouped by origin edge; within a group they are ordered by
    the position of the omitted vertex.
    """
    n = H.n
    prefix = _fresh_prefix(H.labels)
    old_labels = H.labels if H.labels is not None else tuple(str(v) for v in range(n))
    labels = list(old_labels) + [f"{prefix}_{j + 1}" for j in range(H.m)]
    edges = []
    origin = []
    for j, e in enumerate(H.edges):
        p = n + j
        for i in range(len(e)):
            edges.append(e[:i] + e[i + 1:] + (p,))
            origin.append(j)
    S = Hypergraph(n + H.m, tuple(edges), tuple(labels), H.multi_edges)
    return SubdivisionResult(S, tuple(range(n, n + H.m)), tuple(origin))
