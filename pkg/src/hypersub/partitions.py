"""Equitable partitions: verification, quotient matrices, refinement and
the quotient-spectrum containment check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotEquitable
from .spectra import eigenvalues, real_eigenvalues

SIGNATURE_DECIMALS = 9


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(sorted(int(v) for v in c)) for c in self.cells)
        if any(not c for c in cells):
            raise ValueError("partition has an empty cell")
        flat = [v for c in cells for v in c]
        if len(flat) != len(set(flat)):
            raise ValueError("partition cells overlap")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, cells: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(c) for c in cells))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls((tuple(range(n)),))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(n)))

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.cells)

    def __len__(self):
        return len(self.cells)

    def validate_for(self, n: int) -> None:
        if sorted(v for c in self.cells for v in c) != list(range(n)):
            raise ValueError(f"partition does not cover 0..{n - 1}")

    def cell_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for p, c in enumerate(self.cells):
            out[list(c)] = p
        return out


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: np.ndarray
    partition: Partition

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        # Q is similar to a symmetric matrix, so its spectrum is real.
        return np.sort(real_eigenvalues(self.matrix, "quotient eigenvalue"))[::-1]


def _cell_sums(A: np.ndarray, P: Partition) -> np.ndarray:
    """``n x |P|`` matrix of row sums of A into each cell."""
    return np.stack([A[:, list(c)].sum(axis=1) for c in P.cells], axis=1)


def check_equitable(A: np.ndarray, P: Partition, tol: float = 1e-10) -> QuotientMatrix:
    """Quotient matrix of ``A`` for ``P``; raises NotEquitable on failure."""
    A = np.asarray(A, dtype=float)
    P.validate_for(A.shape[0])
    sums = _cell_sums(A, P)
    Q = np.empty((len(P), len(P)))
    for p, cell in enumerate(P.cells):
        block = sums[list(cell)]
        mean = block.mean(axis=0)
        dev = np.abs(block - mean)
        if dev.max(initial=0.0) > tol:
            row, q = np.unravel_index(np.argmax(dev), dev.shape)
            raise NotEquitable(p, int(q), cell[row], float(dev[row, q]))
        Q[p] = mean
    return QuotientMatrix(Q, P)


def refine_to_equitable(A: np.ndarray, seed: Partition | None = None) -> Partition:
    """Coarsest equitable refinement of ``seed`` (default: one cell).

    Cells are split on row-sum signatures rounded to 9 decimals.  Split
    cells stay in place, their pieces ordered by signature, so an already
    equitable seed comes back unchanged.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    P = seed if seed is not None else Partition.trivial(n)
    P.validate_for(n)
    cells = [list(c) for c in P.cells]
    while True:
        sums = np.round(_cell_sums(A, Partition.of(cells)), SIGNATURE_DECIMALS)
        new_cells = []
        for c in cells:
            groups: dict[tuple, list[int]] = {}
            for v in c:
                groups.setdefault(tuple(sums[v]), []).append(v)
            new_cells.extend(groups[key] for key in sorted(groups))
        if len(new_cells) == len(cells):
            return Partition.of(cells)
        cells = new_cells


def match_contained(small, large, tol: float) -> float | None:
    """Greedily match each value of ``small`` to an unclaimed value of
    ``large``; returns the worst matched distance or None if some value has
    no partner within ``tol``."""
    pool = sorted(float(v) for v in large)
    claimed = [False] * len(pool)
    worst = 0.0
    for x in sorted(float(v) for v in small):
        best, best_d = None, None
        i = int(np.searchsorted(pool, x - tol))
        while i < len(pool) and pool[i] <= x + tol:
            if not claimed[i]:
                d = abs(pool[i] - x)
                if best_d is None or d < best_d:
                    best, best_d = i, d
            i += 1
        if best is None:
            return None
        claimed[best] = True
        worst = max(worst, best_d)
    return worst


def containment_check(Q: QuotientMatrix, A: np.ndarray, tol: float = 1e-8) -> bool:
    """True iff every eigenvalue of ``Q`` occurs in the spectrum of ``A``."""
    return match_contained(Q.eigenvalues(), eigenvalues(A).values, tol) is not None
