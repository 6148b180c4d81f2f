"""Hypergraph isomorphism by individualization-refinement backtracking.

A hypergraph is encoded as a two-coloured bipartite graph (vertices versus
hyperedges, joined by incidence).  Both inputs are refined together on
their disjoint union, so colour ids are comparable across the two sides; a
colour class whose size differs between the sides refutes the current
branch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .hypergraph import Hypergraph


class Verdict(str, enum.Enum):
    ISOMORPHIC = "isomorphic"
    NON_ISOMORPHIC = "non-isomorphic"
    UNDECIDED = "undecided"


@dataclass
class IsomorphismResult:
    verdict: Verdict
    nodes: int
    mapping: dict[int, int] | None = None


class _BudgetExceeded(Exception):
    pass


def _incidence_graph(H: Hypergraph, offset: int):
    """Adjacency lists and initial colours of the incidence graph of H."""
    n, m = H.n, H.m
    adj = [[] for _ in range(n + m)]
    for j, e in enumerate(H.edges):
        for v in e:
            adj[v].append(offset + n + j)
            adj[n + j].append(offset + v)
    colours = [0] * n + [1] * m
    return adj, colours


class _Search:
    def __init__(self, H1: Hypergraph, H2: Hypergraph, budget: int):
        a1, c1 = _incidence_graph(H1, 0)
        a2, c2 = _incidence_graph(H2, H1.n + H1.m)
        self.adj = a1 + a2
        self.split = len(a1)
        self.n1 = H1.n
        self.colours = c1 + c2
        self.budget = budget
        self.nodes = 0

    def refine(self, colours: list[int]) -> list[int] | None:
        """Stable colouring of the union, or None if the sides disagree."""
        adj, split = self.adj, self.split
        while True:
            sigs = [(colours[v], tuple(sorted(colours[w] for w in adj[v])))
                    for v in range(len(adj))]
            ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [ids[s] for s in sigs]
            if not self._balanced(new):
                return None
            if len(ids) == len(set(colours)):
                return new
            colours = new

    def _balanced(self, colours) -> bool:
        left: dict[int, int] = {}
        for c in colours[: self.split]:
            left[c] = left.get(c, 0) + 1
        right: dict[int, int] = {}
        for c in colours[self.split:]:
            right[c] = right.get(c, 0) + 1
        return left == right

    def search(self, colours: list[int]) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        colours = self.refine(colours)
        if colours is None:
            return None
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            members = cells[c]
            if len(members) > 2:
                if target is None or len(members) < len(cells[target]):
                    target = c
        if target is None:
            return colours if self._is_isomorphism(colours) else None
        left = [v for v in cells[target] if v < self.split]
        right = [v for v in cells[target] if v >= self.split]
        fresh = max(colours) + 1
        u = left[0]
        for w in right:
            trial = list(colours)
            trial[u] = fresh
            trial[w] = fresh
            found = self.search(trial)
            if found is not None:
                return found
        return None

    def _is_isomorphism(self, colours) -> bool:
        where = {}
        for v in range(self.split, len(colours)):
            where[colours[v]] = v
        phi = [where[colours[v]] for v in range(self.split)]
        for v in range(self.split):
            image = sorted(phi[w] for w in self.adj[v])
            if image != sorted(self.adj[phi[v]]):
                return False
        return True

    def mapping(self, colours) -> dict[int, int]:
        where = {colours[v]: v - self.split for v in range(self.split, len(colours))}
        return {v: where[colours[v]] for v in range(self.n1)}


def isomorphism(H1: Hypergraph, H2: Hypergraph, node_budget: int = 10**6) -> IsomorphismResult:
    """Decide isomorphism within ``node_budget`` search nodes."""
    if (H1.n, H1.m) != (H2.n, H2.m):
        return IsomorphismResult(Verdict.NON_ISOMORPHIC, 0)
    if sorted(map(len, H1.edges)) != sorted(map(len, H2.edges)):
        return IsomorphismResult(Verdict.NON_ISOMORPHIC, 0)
    search = _Search(H1, H2, node_budget)
    try:
        found = search.search(search.colours)
    except _BudgetExceeded:
        return IsomorphismResult(Verdict.UNDECIDED, search.nodes)
    if found is None:
        return IsomorphismResult(Verdict.NON_ISOMORPHIC, search.nodes)
    return IsomorphismResult(Verdict.ISOMORPHIC, search.nodes, search.mapping(found))


def are_isomorphic(H1: Hypergraph, H2: Hypergraph, node_budget: int = 10**6) -> Verdict:
    return isomorphism(H1, H2, node_budget).verdict
