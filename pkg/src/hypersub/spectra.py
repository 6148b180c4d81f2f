"""Eigenvalue oracle, polynomial roots and tolerance-aware spectrum multisets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NonRealRoot

IMAG_TOL = 1e-7


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues sorted in descending order.

    ``grouped`` merges consecutive values closer than ``tol``; it is a
    display aid only, equality is always decided on the sorted list.
    """

    values: tuple[float, ...]
    tol: float = 1e-8

    @classmethod
    def of(cls, values, tol: float = 1e-8) -> "SpectrumMultiset":
        vals = sorted((float(v) for v in np.ravel(values)), reverse=True)
        return cls(tuple(vals), tol)

    def __len__(self):
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.array(self.values)

    @property
    def grouped(self) -> list[tuple[float, int]]:
        groups: list[list[float]] = []
        for v in self.values:
            if groups and abs(groups[-1][0] - v) <= self.tol:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(float(np.mean(g)), len(g)) for g in groups]

    def count_near(self, value: float, window: float) -> int:
        return int(np.sum(np.abs(self.array() - value) <= window))


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial, coefficients in descending degree order."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs = coeffs[1:]
        if not coeffs or coeffs[0] == 0:
            raise ValueError("polynomial has no nonzero coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return np.polyval(np.array(self.coeffs, dtype=float), x)

    def proportional_to(self, other: "Polynomial") -> bool:
        """Exact proportionality test; meant for integer/rational coefficients."""
        a, b = self.coeffs, other.coeffs
        if len(a) != len(b):
            return False
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))


def eigenvalues(M: np.ndarray, tol: float = 1e-8) -> SpectrumMultiset:
    """All eigenvalues of a real symmetric matrix, descending."""
    M = np.asarray(M, dtype=float)
    return SpectrumMultiset.of(np.linalg.eigvalsh(M), tol)


def real_parts(z: np.ndarray, what: str = "root") -> np.ndarray:
    """Real parts of ``z``, refusing anything with imaginary part above 1e-7."""
    z = np.asarray(z)
    if np.iscomplexobj(z):
        bad = np.abs(z.imag) > IMAG_TOL
        if bad.any():
            raise NonRealRoot(f"{what} {z[bad][0]} is not real")
        z = z.real
    return z.astype(float)


def real_eigenvalues(M: np.ndarray, what: str = "eigenvalue") -> np.ndarray:
    """Eigenvalues of a (possibly non-symmetric or complex) matrix known to
    have a real spectrum."""
    return real_parts(np.linalg.eigvals(np.asarray(M)), what)


def companion_matrix(p: Polynomial) -> np.ndarray:
    c = np.array(p.coeffs, dtype=float)
    d = p.degree
    C = np.zeros((d, d))
    C[0, :] = -c[1:] / c[0]
    C[1:, :-1] = np.eye(d - 1)
    return C


def real_roots(p: Polynomial | Sequence[float]) -> list[float]:
    """Real roots of ``p`` with multiplicity, from the companion matrix."""
    if not isinstance(p, Polynomial):
        p = Polynomial(tuple(p))
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    roots = real_eigenvalues(companion_matrix(p), what="root")
    return sorted(roots.tolist(), reverse=True)


def multiset_equal(a, b, tol: float = 1e-8) -> tuple[bool, float]:
    """Compare two spectra as sorted lists; returns ``(equal, max deviation)``."""
    x = np.sort(np.asarray(a.values if isinstance(a, SpectrumMultiset) else a, dtype=float))
    y = np.sort(np.asarray(b.values if isinstance(b, SpectrumMultiset) else b, dtype=float))
    if x.shape != y.shape:
        return False, math.inf
    if x.size == 0:
        return True, 0.0
    dev = float(np.max(np.abs(x - y)))
    return dev <= tol, dev
