"""Explicit eigenvectors and equitable partitions for subdivided families.

Each family is rebuilt on the concrete subdivided hypergraph (vertices are
located through their labels), so the vectors can be checked against the
adjacency matrix directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import families
from .hypergraph import Hypergraph, adjacency_matrix
from .partitions import Partition, check_equitable
from .predictors import (
    hyperflower_petal_block,
    petal_rotation_block,
    rotation_alphas,
    squid_like_block,
)
from .subdivision import subdivide


@dataclass(frozen=True)
class LocalEigenvectorFamily:
    """Vectors that all share one eigenvalue of the subdivided adjacency."""

    name: str
    eigenvalue: float
    vectors: tuple[np.ndarray, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.vectors)

    def residuals(self, A: np.ndarray) -> list[float]:
        """``||A x - lambda x||_inf / ||x||_inf`` for each vector."""
        out = []
        for x in self.vectors:
            out.append(float(np.max(np.abs(A @ x - self.eigenvalue * x)) / np.max(np.abs(x))))
        return out


@dataclass(frozen=True)
class Subdivided:
    """A family member together with its subdivision and adjacency matrix."""

    base: Hypergraph
    S: Hypergraph
    A: np.ndarray

    @classmethod
    def of(cls, H: Hypergraph) -> "Subdivided":
        S = subdivide(H).hypergraph
        return cls(H, S, adjacency_matrix(S))

    def ids(self, labels) -> list[int]:
        return [self.S.index_of(s) for s in labels]

    def indicator(self, pos=(), neg=(), value=1.0) -> np.ndarray:
        x = np.zeros(self.S.n, dtype=np.result_type(value, float))
        x[self.ids(pos)] += value
        x[self.ids(neg)] -= value
        return x


def _difference_family(sub: Subdivided, name, eigenvalue, groups) -> LocalEigenvectorFamily:
    """First member minus i-th member, within each group of labels."""
    vecs = [sub.indicator([g[0]], [g[i]]) for g in groups for i in range(1, len(g))]
    return LocalEigenvectorFamily(name, eigenvalue, tuple(vecs))


def _block_eigenpairs(M: np.ndarray):
    w, V = np.linalg.eig(M)
    return [(w[i], V[:, i]) for i in range(len(w))]


def _twins(l, t):
    return [[f"u{i + 1}^{j + 1}" for i in range(t)] for j in range(l)]


def _quotient_lift(sub: Subdivided, name, P: Partition) -> list[LocalEigenvectorFamily]:
    """Right eigenvectors of the quotient matrix, constant on each cell."""
    Q = check_equitable(sub.A, P).matrix
    out = []
    cell = P.cell_of()
    for lam, g in _block_eigenpairs(Q):
        out.append(LocalEigenvectorFamily(name, float(lam.real), (np.real(g)[cell],)))
    return out


# -- hyperflower -----------------------------------------------------------

def hyperflower_partition(l: int, s: int, t: int, sub: Subdivided | None = None) -> Partition:
    sub = sub or Subdivided.of(families.hyperflower(l, s, t))
    W = sub.ids(f"w{i + 1}" for i in range(s))
    U = sub.ids(u for petal in _twins(l, t) for u in petal)
    P = sub.ids(f"p_{j + 1}" for j in range(l))
    return Partition.of([W, U, P])


def hyperflower_witnesses(l: int, s: int, t: int) -> tuple[Subdivided, list[LocalEigenvectorFamily]]:
    sub = Subdivided.of(families.hyperflower(l, s, t))
    k = s + t
    twins = _twins(l, t)
    fams = [
        _difference_family(sub, "twin differences", -(k - 2) / (k - 1), twins),
        _difference_family(sub, "center differences", -l * (k - 2) / (k - 1),
                           [[f"w{i + 1}" for i in range(s)]]),
    ]
    for lam, (c1, c2) in _block_eigenpairs(hyperflower_petal_block(s, t)):
        vecs = []
        for j in range(1, l):
            x = sub.indicator(twins[0], twins[j], c1.real)
            x += sub.indicator(["p_1"], [f"p_{j + 1}"], c2.real)
            vecs.append(x)
        fams.append(LocalEigenvectorFamily("petal pair", float(lam.real), tuple(vecs)))
    fams += _quotient_lift(sub, "quotient lift", hyperflower_partition(l, s, t, sub))
    return sub, fams


# -- petal-overlapped hyperflower ------------------------------------------

def petal_partition(l: int, s: int, t: int, sub: Subdivided | None = None) -> Partition:
    sub = sub or Subdivided.of(families.petal_overlapped_hyperflower(l, s, t))
    W = sub.ids(f"w{i + 1}" for i in range(s))
    V = sub.ids(f"v{j + 1}" for j in range(l))
    U = sub.ids(u for petal in _twins(l, t) for u in petal)
    P = sub.ids(f"p_{j + 1}" for j in range(l))
    return Partition.of([W, V, U, P])


def petal_witnesses(l: int, s: int, t: int) -> tuple[Subdivided, list[LocalEigenvectorFamily]]:
    sub = Subdivided.of(families.petal_overlapped_hyperflower(l, s, t))
    k = s + t + 2
    twins = _twins(l, t)
    fams = [
        _difference_family(sub, "twin differences", -(k - 2) / (k - 1), twins),
        _difference_family(sub, "center differences", -l * (k - 2) / (k - 1),
                           [[f"w{i + 1}" for i in range(s)]]),
    ]
    fams += _quotient_lift(sub, "quotient lift", petal_partition(l, s, t, sub))
    for jp, alpha in enumerate(rotation_alphas(l), start=1):
        for lam, (c1, c2, c3) in _block_eigenpairs(petal_rotation_block(s, t, alpha)):
            x = np.zeros(sub.S.n, dtype=complex)
            for j in range(l):
                phase = alpha ** (j + 1)
                x[sub.ids([f"v{j + 1}"])] = c1 * phase
                x[sub.ids(twins[j])] = c2 * phase
                x[sub.ids([f"p_{j + 1}"])] = c3 * phase
            fams.append(LocalEigenvectorFamily(f"rotation j'={jp}", float(lam.real), (x,)))
    return sub, fams


# -- squid-like ------------------------------------------------------------

def squid_like_partition(k: int, sub: Subdivided | None = None) -> Partition:
    sub = sub or Subdivided.of(families.squid_like(k))
    W = sub.ids(f"w{j + 1}" for j in range(k))
    U = sub.ids(u for petal in _twins(k, k - 1) for u in petal)
    p = sub.ids([f"p_{k + 1}"])
    Q = sub.ids(f"p_{j + 1}" for j in range(k))
    return Partition.of([W, U, p, Q])


def squid_like_witnesses(k: int) -> tuple[Subdivided, list[LocalEigenvectorFamily]]:
    sub = Subdivided.of(families.squid_like(k))
    twins = _twins(k, k - 1)
    fams = [_difference_family(sub, "twin differences", -(k - 2) / (k - 1), twins)]
    for lam, (c1, c2, c3) in _block_eigenpairs(squid_like_block(k)):
        vecs = []
        for j in range(1, k):
            x = sub.indicator(["w1"], [f"w{j + 1}"], c1.real)
            x += sub.indicator(twins[0], twins[j], c2.real)
            x += sub.indicator(["p_1"], [f"p_{j + 1}"], c3.real)
            vecs.append(x)
        fams.append(LocalEigenvectorFamily("petal pair", float(lam.real), tuple(vecs)))
    fams += _quotient_lift(sub, "quotient lift", squid_like_partition(k, sub))
    return sub, fams


def witnesses(theorem: str, params: dict) -> tuple[Subdivided, list[LocalEigenvectorFamily]]:
    if theorem in ("t3", "t4"):
        if theorem == "t4":
            return hyperflower_witnesses(params["l"], 1, params["k"] - 1)
        return hyperflower_witnesses(params["l"], params["s"], params["t"])
    if theorem == "t5":
        return petal_witnesses(params["l"], params["s"], params["t"])
    if theorem == "t6":
        return squid_like_witnesses(params["k"])
    raise ValueError(f"no eigenvector families for {theorem}")


def proof_partition(theorem: str, params: dict) -> tuple[Subdivided, Partition]:
    """The equitable partition used for the quotient of a subdivided family."""
    if theorem == "t3":
        sub = Subdivided.of(families.hyperflower(params["l"], params["s"], params["t"]))
        return sub, hyperflower_partition(params["l"], params["s"], params["t"], sub)
    if theorem == "t4":
        l, k = params["l"], params["k"]
        sub = Subdivided.of(families.hyperstar(l, k))
        return sub, hyperflower_partition(l, 1, k - 1, sub)
    if theorem == "t5":
        sub = Subdivided.of(families.petal_overlapped_hyperflower(
            params["l"], params["s"], params["t"]))
        return sub, petal_partition(params["l"], params["s"], params["t"], sub)
    if theorem == "t6":
        sub = Subdivided.of(families.squid_like(params["k"]))
        return sub, squid_like_partition(params["k"], sub)
    raise ValueError(f"no partition for {theorem}")
