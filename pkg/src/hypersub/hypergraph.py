"""Hypergraph data model and its matrices (adjacency, codegree, incidence).

Vertices are dense integer ids ``0..n-1``; optional string labels carry
provenance (``"w1"``, ``"u2^3"``, ``"p_4"``) and never enter the matrices.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DanglingVertex,
    DuplicateEdge,
    EmptyEdge,
    HypergraphError,
    NotUniform,
    SameVertex,
    SingletonEdge,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on vertices ``0..n-1``.

    Edges are stored as sorted tuples in construction order.  Duplicate
    vertex-sets are rejected unless ``multi_edges`` is set.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    multi_edges: bool = False
    _label_index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise HypergraphError("vertex count must be non-negative")
        edges = []
        for e in self.edges:
            raw = [int(v) for v in e]
            if not raw:
                raise EmptyEdge("hyperedge is empty")
            for v in raw:
                if not 0 <= v < n:
                    raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
            members = tuple(sorted(set(raw)))
            if len(members) != len(raw):
                raise HypergraphError(f"hyperedge {raw} repeats a vertex")
            if len(members) < 2:
                raise SingletonEdge(f"hyperedge {members} has cardinality 1")
            edges.append(members)
        if not edges:
            raise HypergraphError("hypergraph has no hyperedges")
        if not self.multi_edges:
            seen = set()
            for e in edges:
                if e in seen:
                    raise DuplicateEdge(f"hyperedge {e} appears twice")
                seen.add(e)
        deg = np.zeros(n, dtype=np.int64)
        for e in edges:
            deg[list(e)] += 1
        dangling = np.flatnonzero(deg == 0)
        if dangling.size:
            raise DanglingVertex(f"vertex {int(dangling[0])} has degree 0")
        labels = self.labels
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise HypergraphError(f"{len(labels)} labels for {n} vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        """Vertex id carrying ``label``."""
        if self._label_index is None:
            if self.labels is None:
                raise KeyError(label)
            object.__setattr__(
                self, "_label_index", {s: i for i, s in enumerate(self.labels)}
            )
        return self._label_index[label]

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Hypergraph with vertex ``v`` renamed ``perm[v]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise HypergraphError("relabelling is not a permutation")
        labels = None
        if self.labels is not None:
            out = [""] * self.n
            for v, s in enumerate(self.labels):
                out[perm[v]] = s
            labels = tuple(out)
        return Hypergraph(
            self.n,
            tuple(tuple(perm[v] for v in e) for e in self.edges),
            labels,
            self.multi_edges,
        )

    # -- interchange format -------------------------------------------------

    def to_dict(self) -> dict:
        doc = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return doc

    @classmethod
    def from_dict(cls, doc: dict, multi_edges: bool = False) -> "Hypergraph":
        return cls(int(doc["n"]), tuple(tuple(e) for e in doc["edges"]),
                   doc.get("labels"), multi_edges)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "Hypergraph":
        return cls.from_dict(json.loads(text))


def new_hypergraph(n: int, edges: Iterable[Iterable[int]], labels=None,
                   multi_edges: bool = False) -> Hypergraph:
    return Hypergraph(n, tuple(tuple(e) for e in edges), labels, multi_edges)


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{H.n - 1}")


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    return sum(1 for e in H.edges if v in e)


def degrees(H: Hypergraph) -> np.ndarray:
    deg = np.zeros(H.n, dtype=np.int64)
    for e in H.edges:
        deg[list(e)] += 1
    return deg


def codegree(H: Hypergraph, u: int, v: int) -> int:
    _check_vertex(H, u)
    _check_vertex(H, v)
    if u == v:
        raise SameVertex(f"codegree of vertex {u} with itself")
    return sum(1 for e in H.edges if u in e and v in e)


def is_uniform(H: Hypergraph) -> int | None:
    sizes = {len(e) for e in H.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_regular(H: Hypergraph) -> int | None:
    deg = set(degrees(H).tolist())
    return deg.pop() if len(deg) == 1 else None


def is_linear(H: Hypergraph) -> bool:
    pairs = Counter()
    for e in H.edges:
        for i, u in enumerate(e):
            for v in e[i + 1:]:
                pairs[u, v] += 1
    return all(c <= 1 for c in pairs.values())


def incidence_matrix(H: Hypergraph) -> np.ndarray:
    """``n x m`` 0/1 matrix with ``B[i, e] = 1`` iff vertex i lies in edge e."""
    B = np.zeros((H.n, H.m), dtype=np.int64)
    for j, e in enumerate(H.edges):
        B[list(e), j] = 1
    return B


def _integer_codegrees(H: Hypergraph) -> np.ndarray:
    B = incidence_matrix(H)
    C = B @ B.T
    np.fill_diagonal(C, 0)
    return C


def codegree_matrix(H: Hypergraph) -> np.ndarray:
    """Unnormalized codegree matrix: ``d_ij`` off the diagonal, zero on it."""
    return _integer_codegrees(H).astype(float)


def adjacency_matrix(H: Hypergraph) -> np.ndarray:
    """Adjacency matrix of a k-uniform hypergraph: ``d_ij / (k - 1)``."""
    k = is_uniform(H)
    if k is None:
        raise NotUniform("adjacency matrix needs a uniform hypergraph")
    return _integer_codegrees(H) / (k - 1)
