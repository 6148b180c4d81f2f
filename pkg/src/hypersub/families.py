"""Generators for the hypergraph families and regular base graphs.

Vertex order inside each generator follows the cell order used in the
spectral analysis of that family: centers, overlap vertices, twins (grouped
by petal), so that subdivided adjacency matrices have predictable blocks.
"""

from __future__ import annotations

import itertools

from .errors import BadParameters, KTooSmall, NotAGraph
from .hypergraph import Hypergraph, is_uniform


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def power_of_graph(G: Hypergraph, k: int) -> Hypergraph:
    """k-th power of a graph: pad every edge with k-2 fresh vertices.

    Original vertices keep their ids; the padding vertices of edge ``e`` are
    labelled ``x{e}.{a}`` (1-based) and appended edge by edge.
    """
    if is_uniform(G) != 2:
        raise NotAGraph("power_of_graph needs a 2-uniform hypergraph")
    if k < 3:
        raise KTooSmall(f"power needs k >= 3, got {k}")
    labels = list(G.labels) if G.labels is not None else [f"v{i + 1}" for i in range(G.n)]
    edges = []
    nxt = G.n
    for j, e in enumerate(G.edges):
        pad = list(range(nxt, nxt + k - 2))
        labels += [f"x{j + 1}.{a + 1}" for a in range(k - 2)]
        nxt += k - 2
        edges.append(e + tuple(pad))
    return Hypergraph(nxt, tuple(edges), tuple(labels))


def general_hyperflower(l: int, r: int, s: int, t: int) -> Hypergraph:
    """(l, r)-hyperflower with t twins: r disjoint center sets of size s.

    Every center set is joined to every petal, giving l*r edges of size s+t.
    Only r = 1 has a spectral predictor.
    """
    _require(l >= 1 and r >= 1 and s >= 1 and t >= 1 and s + t >= 2,
             f"bad hyperflower parameters l={l} r={r} s={s} t={t}")
    labels = []
    centers = []
    for c in range(r):
        block = list(range(len(labels), len(labels) + s))
        centers.append(block)
        if r == 1:
            labels += [f"w{i + 1}" for i in range(s)]
        else:
            labels += [f"h{c + 1}.w{i + 1}" for i in range(s)]
    petals = []
    for j in range(l):
        petals.append(list(range(len(labels), len(labels) + t)))
        labels += [f"u{i + 1}^{j + 1}" for i in range(t)]
    edges = [tuple(h + U) for U in petals for h in centers]
    return Hypergraph(len(labels), tuple(edges), tuple(labels))


def hyperflower(l: int, s: int, t: int) -> Hypergraph:
    """l-hyperflower with s centers and t twins per petal, (s+t)-uniform."""
    return general_hyperflower(l, 1, s, t)


def hyperstar(l: int, k: int) -> Hypergraph:
    _require(k >= 2, f"hyperstar needs k >= 2, got {k}")
    return hyperflower(l, 1, k - 1)


def petal_overlapped_hyperflower(l: int, s: int, t: int) -> Hypergraph:
    """Hyperflower whose consecutive petals share one vertex, cyclically.

    Layout: centers ``w1..ws``, overlap vertices ``v1..vl``, then twins
    ``u1^j..ut^j`` petal by petal.  Petal ``e_j`` holds ``v_j`` and ``v_{j+1}``.
    """
    _require(l >= 3 and s >= 1 and t >= 1,
             f"petal-overlapped hyperflower needs l >= 3, s, t >= 1 (l={l}, s={s}, t={t})")
    W = list(range(s))
    V = list(range(s, s + l))
    base = s + l
    labels = [f"w{i + 1}" for i in range(s)] + [f"v{j + 1}" for j in range(l)]
    edges = []
    for j in range(l):
        U = list(range(base + j * t, base + (j + 1) * t))
        labels += [f"u{i + 1}^{j + 1}" for i in range(t)]
        edges.append(tuple(W + U + [V[j], V[(j + 1) % l]]))
    return Hypergraph(len(labels), tuple(edges), tuple(labels))


def squid(k: int) -> Hypergraph:
    """k-1 disjoint petals of size k plus a central edge through the first
    vertex of each petal and one extra vertex."""
    _require(k >= 2, f"squid needs k >= 2, got {k}")
    labels = []
    petals = []
    for j in range(k - 1):
        petals.append(list(range(len(labels), len(labels) + k)))
        labels += [f"i{j + 1},{a + 1}" for a in range(k)]
    labels.append(f"i{k}")
    center = tuple(P[0] for P in petals) + (len(labels) - 1,)
    return Hypergraph(len(labels), tuple(tuple(P) for P in petals) + (center,), tuple(labels))


def squid_like(k: int) -> Hypergraph:
    """k disjoint petals of size k plus a central edge through the first
    vertex of each petal.

    Layout: ``w1..wk`` (first vertex of each petal), then the remaining
    ``u1^j..u{k-1}^j`` petal by petal.  Edge order: petals, then the center.
    """
    _require(k >= 2, f"squid_like needs k >= 2, got {k}")
    labels = [f"w{j + 1}" for j in range(k)]
    edges = []
    for j in range(k):
        U = list(range(k + j * (k - 1), k + (j + 1) * (k - 1)))
        labels += [f"u{i + 1}^{j + 1}" for i in range(k - 1)]
        edges.append(tuple([j] + U))
    edges.append(tuple(range(k)))
    return Hypergraph(len(labels), tuple(edges), tuple(labels))


# -- regular base graphs ---------------------------------------------------

def _graph(n: int, pairs) -> Hypergraph:
    edges = sorted({tuple(sorted(p)) for p in pairs})
    return Hypergraph(n, tuple(edges))


def cycle_graph(n: int) -> Hypergraph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return _graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Hypergraph:
    _require(n >= 2, f"complete graph needs n >= 2, got {n}")
    return _graph(n, itertools.combinations(range(n), 2))


def circulant(n: int, connection: list[int]) -> Hypergraph:
    """Cayley graph of Z_n; ``connection`` must be closed under negation."""
    S = {c % n for c in connection}
    _require(n >= 3 and bool(S), "circulant needs n >= 3 and a nonempty connection set")
    _require(0 not in S, "connection set contains 0")
    _require(all((-c) % n in S for c in S), "connection set is not symmetric")
    return _graph(n, [(i, (i + c) % n) for i in range(n) for c in S])


def petersen() -> Hypergraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _graph(10, outer + spokes + inner)


def shrikhande() -> Hypergraph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    gens = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    pairs = []
    for a in range(4):
        for b in range(4):
            for da, db in gens:
                pairs.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return _graph(16, pairs)


def rook4x4() -> Hypergraph:
    """Rook's graph K4 x K4: cells adjacent when they share a row or column."""
    pairs = [(i, j) for i in range(16) for j in range(i + 1, 16)
             if i // 4 == j // 4 or i % 4 == j % 4]
    return _graph(16, pairs)


def fano_plane() -> Hypergraph:
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return Hypergraph(7, tuple(lines))


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of an n-set."""
    _require(2 <= k <= n, f"complete uniform needs 2 <= k <= n, got n={n} k={k}")
    return Hypergraph(n, tuple(itertools.combinations(range(n), k)))


def single_edge(k: int) -> Hypergraph:
    _require(k >= 2, f"single edge needs k >= 2, got {k}")
    return Hypergraph(k, (tuple(range(k)),))


FAMILIES = {
    "hyperflower": hyperflower,
    "general_hyperflower": general_hyperflower,
    "hyperstar": hyperstar,
    "petal_overlapped": petal_overlapped_hyperflower,
    "squid": squid,
    "squid_like": squid_like,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "circulant": circulant,
    "petersen": petersen,
    "shrikhande": shrikhande,
    "rook4x4": rook4x4,
    "fano": fano_plane,
    "complete_uniform": complete_uniform,
    "single_edge": single_edge,
}

BASE_GRAPHS = {"petersen": petersen, "shrikhande": shrikhande, "rook4x4": rook4x4}


def generate(name: str, **params) -> Hypergraph:
    """Build a family member by name.

    ``power`` takes a base graph as ``graph`` (a name from ``cycle``,
    ``complete``, ``petersen``, ...) plus ``k``; ``n`` feeds cycle/complete.
    """
    if name == "power":
        params = dict(params)
        k = params.pop("k")
        graph = params.pop("graph")
        return power_of_graph(generate(graph, **params), k)
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise BadParameters(f"unknown family {name!r}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise BadParameters(f"{name}: {exc}") from None
