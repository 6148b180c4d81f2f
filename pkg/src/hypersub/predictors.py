"""Predicted adjacency spectra of subdivided hypergraph families.

Every predictor comes in two flavors:

``structural``
    built from the reduction used to derive the spectrum: local eigenvalues
    of difference vectors, small reduced blocks acting on coefficient
    tuples, and quotient matrices of equitable partitions.  This flavor is
    normative.
``closed``
    the printed closed-form statements (explicit values, and polynomial
    equations whose roots are extracted numerically).  These are audited
    against the structural flavor and the eigensolver, never trusted.

Theorem ids used throughout (and by the CLI):

    t1  regular uniform hypergraph
    t2  k-th power of a regular graph
    t3  l-hyperflower with s centers and t twins
    t4  hyperstar (hyperflower with one center)
    t5  petal-overlapped hyperflower
    t6  squid-like hypergraph
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import families
from .errors import (
    BadParameters,
    CancellationImpossible,
    NonRealRoot,
    NotAGraph,
    NotRegular,
    NotUniform,
)
from .hypergraph import (
    Hypergraph,
    adjacency_matrix,
    codegree_matrix,
    is_regular,
    is_uniform,
)
from .spectra import Polynomial, eigenvalues, multiset_equal, real_eigenvalues, real_roots
from .subdivision import subdivide

FLAVORS = ("structural", "closed")
CANCEL_TOL = 1e-8
SNAP_TOL = 1e-9


@dataclass(frozen=True)
class Piece:
    """One clause contribution: ``values`` each repeated ``multiplicity`` times.

    A negative multiplicity cancels matching values contributed elsewhere.
    """

    clause: str
    values: tuple[float, ...]
    multiplicity: int
    source: str
    detail: str = ""
    polynomial: Polynomial | None = None

    @property
    def tag(self) -> str:
        return f"({self.clause}) {self.detail}".strip()


@dataclass(frozen=True)
class PredictedSpectrum:
    theorem: str
    flavor: str
    pieces: tuple[Piece, ...]
    values: tuple[float, ...] = field(default=())

    def __len__(self):
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.array(self.values)


def assemble(theorem: str, flavor: str, pieces: list[Piece]) -> PredictedSpectrum:
    """Flatten pieces into a descending multiset, applying cancellations."""
    pool: list[float] = []
    for pc in pieces:
        if pc.multiplicity > 0:
            pool.extend(list(pc.values) * pc.multiplicity)
    pool.sort()
    for pc in pieces:
        if pc.multiplicity >= 0:
            continue
        for v in list(pc.values) * (-pc.multiplicity):
            i = int(np.argmin(np.abs(np.array(pool) - v))) if pool else -1
            if i < 0 or abs(pool[i] - v) > CANCEL_TOL:
                raise CancellationImpossible(
                    f"{theorem} {pc.tag}: no value near {v} left to cancel"
                )
            pool.pop(i)
    return PredictedSpectrum(theorem, flavor, tuple(pieces), tuple(sorted(pool, reverse=True)))


def _snap(lams, r: int) -> list[float]:
    """Input eigenvalues within 1e-9 of -r are set to -r exactly.

    At -r the reduced blocks have a zero root (for k = 2 a double one), and
    the square root in the quadratic would inflate 1e-16 noise to 1e-8.
    """
    return [float(-r) if abs(lam + r) <= SNAP_TOL * max(1, r) else float(lam) for lam in lams]


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")


def _eig(M, what):
    return tuple(sorted(real_eigenvalues(M, what).tolist(), reverse=True))


def _roots(coeffs, tag=""):
    p = Polynomial(tuple(coeffs))
    try:
        return tuple(real_roots(p)), p
    except NonRealRoot as exc:
        raise NonRealRoot(f"{tag}: {exc}".lstrip(": "), piece=tag,
                          roots=np.roots(np.array(p.coeffs, dtype=float))) from None


# -- reduced blocks and quotient matrices ----------------------------------
#
# Each block acts on coefficient tuples of an eigenvector ansatz; its
# eigenvalues are eigenvalues of the subdivided adjacency matrix.

def regular_block(k: int, r: int, lam: float) -> np.ndarray:
    """Acts on (original vertex, new vertex) coefficients for a codegree
    eigenvector with eigenvalue ``lam``."""
    return np.array([[(k - 2) * lam / (k - 1), r + lam], [1.0, 0.0]])


def power_block(k: int, r: int, lam: float) -> np.ndarray:
    """Acts on (original, padding, new) coefficients for S(G^k)."""
    a = (k - 2) / (k - 1)
    return np.array([
        [a * lam, (k - 2) * a * (r + lam), r + lam],
        [a, (k - 3) * a, 1.0],
        [1.0, k - 2, 0.0],
    ])


def power_cycle_block(k: int) -> np.ndarray:
    """Acts on (padding, new) coefficients of a vector supported on a cycle
    space element of G (kernel of the incidence matrix)."""
    return np.array([[(k - 3) * (k - 2) / (k - 1), 1.0], [k - 2, 0.0]])


def hyperflower_petal_block(s: int, t: int) -> np.ndarray:
    """Acts on (twin, new vertex) coefficients of f_j = petal 1 minus petal j."""
    k = s + t
    return np.array([[(t - 1) * (k - 2) / (k - 1), 1.0], [t, 0.0]])


def hyperflower_quotient(l: int, s: int, t: int) -> np.ndarray:
    """Quotient matrix for cells (centers W, twins U, new vertices P)."""
    k = s + t
    return np.array([
        [l * (s - 1) * (k - 2), l * t * (k - 2), l * (k - 1)],
        [s * (k - 2), (t - 1) * (k - 2), k - 1],
        [s * (k - 1), t * (k - 1), 0],
    ], dtype=float) / (k - 1)


def petal_quotient(l: int, s: int, t: int) -> np.ndarray:
    """Quotient matrix for cells (W, overlap V, twins U, new vertices P)."""
    k = s + t + 2
    return np.array([
        [l * (s - 1) * (k - 2), 2 * l * (k - 2), l * t * (k - 2), l * (k - 1)],
        [2 * s * (k - 2), 2 * (k - 2), 2 * t * (k - 2), 2 * (k - 1)],
        [s * (k - 2), 2 * (k - 2), (t - 1) * (k - 2), k - 1],
        [s * (k - 1), 2 * (k - 1), t * (k - 1), 0],
    ], dtype=float) / (k - 1)


def petal_rotation_block(s: int, t: int, alpha: complex) -> np.ndarray:
    """Acts on (overlap, twin, new) coefficients of a vector that scales by
    ``alpha`` from petal to petal (``alpha`` an l-th root of unity != 1)."""
    k = s + t + 2
    a = (k - 2) / (k - 1)
    ai = 1 / alpha
    return np.array([
        [(alpha + ai) * a, (1 + ai) * t * a, 1 + ai],
        [(1 + alpha) * a, (t - 1) * a, 1],
        [1 + alpha, t, 0],
    ], dtype=complex)


def squid_like_block(k: int) -> np.ndarray:
    """Acts on (center, twin, petal new vertex) coefficients of
    f_j = petal 1 minus petal j."""
    return np.array([
        [-(k - 2) / (k - 1), k - 2, 1.0],
        [(k - 2) / (k - 1), (k - 2) ** 2 / (k - 1), 1.0],
        [1.0, k - 1, 0.0],
    ])


def squid_like_quotient(k: int) -> np.ndarray:
    """Quotient matrix for cells (W, U, {p}, Q): p is the new vertex of the
    central edge, Q the new vertices of the petals."""
    return np.array([
        [(k - 1) * (k - 2), (k - 1) * (k - 2), k - 1, k - 1],
        [k - 2, (k - 2) ** 2, 0, k - 1],
        [k * (k - 1), 0, 0, 0],
        [k - 1, (k - 1) ** 2, 0, 0],
    ], dtype=float) / (k - 1)


# -- closed-form polynomials (integer coefficients) ------------------------

def closed_form_polynomials(theorem: str, **p) -> dict[str, list[tuple[tuple[int, ...], int]]]:
    """Printed clause polynomials with exact integer coefficients.

    Single eigenvalues ``-a/b`` appear as linear polynomials ``b x + a``.
    Only parameter-only clauses are covered (t3, t4, t6; the t2 quadratic).
    """
    if theorem == "t3":
        l, s, t = p["l"], p["s"], p["t"]
        k = s + t
        return {
            "i": [((k - 1, k - 2), l * (t - 1))],
            "ii": [((k - 1, l * (k - 2)), s - 1)],
            "iii": [((k - 1, -(t - 1) * (k - 2), -t * (k - 1)), l - 1)],
            "iv": [((
                (k - 1) ** 2,
                -(k - 1) * (k - 2) * (l * s + t - l - 1),
                -((l * s + t) * (k - 1) ** 2 + l * (s + t - 1) * (k - 2) ** 2),
                -l * (s + t) * (k - 1) * (k - 2),
            ), 1)],
        }
    if theorem == "t4":
        l, k = p["l"], p["k"]
        return {
            "i": [((k - 1, k - 2), l * (k - 2))],
            "iii": [((k - 1, -(k - 2) ** 2, -(k - 1) ** 2), l - 1)],
            "iv": [((
                k - 1,
                -(k - 2) ** 2,
                -(l * (k - 1) + l * (k - 2) ** 2 + (k - 1) ** 2),
                -l * k * (k - 2),
            ), 1)],
        }
    if theorem == "t6":
        k = p["k"]
        return {
            "i": [((k - 1, k - 2), k * (k - 2))],
            "ii": [((
                (k - 1) ** 2,
                -(k - 1) ** 3,
                -((k - 2) ** 2 + (k - 1) ** 2 + 2 * (k - 2) ** 3 + (k - 1) ** 3),
                (k - 1) * (k - 2) - 2 * (k - 1) ** 2 * (k - 2),
            ), k - 1)],
            "iii": [((
                k - 1,
                -((k - 2) ** 2 + (k - 2) * (k - 1)),
                -((k - 1) ** 2 + (k - 1) * (k + 1) + (k - 2) ** 2 - (k - 2) ** 3),
                (k - 1) ** 2 * (k - 2) + (k - 2) ** 2 * (k + 1) - 2 * (k - 1) * (k - 2),
                k * (k - 1) ** 2,
            ), 1)],
        }
    raise ValueError(f"no parameter-only closed form for {theorem}")


# -- predictors -------------------------------------------------------------

def _regular_uniform(H: Hypergraph) -> tuple[int, int]:
    k = is_uniform(H)
    if k is None:
        raise NotUniform("hypergraph is not uniform")
    r = is_regular(H)
    if r is None:
        raise NotRegular("hypergraph is not regular")
    return k, r


def predict_regular(H: Hypergraph, flavor: str = "structural") -> PredictedSpectrum:
    """Spectrum of S(H) for an r-regular k-uniform H.

    The input eigenvalues are those of the unnormalized codegree matrix:
    the reduction uses ``B B^T = r I + C`` which holds for the codegree
    matrix C, not for the 1/(k-1)-normalized adjacency.  When m < n the
    zero clause has negative multiplicity and cancels the zero roots
    produced by codegree eigenvalues equal to -r.
    """
    _check_flavor(flavor)
    k, r = _regular_uniform(H)
    n, m = H.n, H.m
    lams = _snap(eigenvalues(codegree_matrix(H)).values, r)
    pieces = [Piece("i", (0.0,), m - n, "value")]
    for lam in lams:
        detail = f"lambda={lam:.12g}"
        if flavor == "structural":
            vals = _eig(regular_block(k, r, lam), "regular block eigenvalue")
            pieces.append(Piece("ii", vals, 1, "block", detail))
        else:
            vals, poly = _roots((k - 1, -(k - 2) * lam, -r * (k - 1) - (k - 1) * lam),
                                f"(ii) {detail}")
            pieces.append(Piece("ii", vals, 1, "polynomial", detail, poly))
    return assemble("t1", flavor, pieces)


def predict_graph_power(G: Hypergraph, k: int, flavor: str = "structural") -> PredictedSpectrum:
    """Spectrum of S(G^k) for an r-regular graph G, k >= 3."""
    _check_flavor(flavor)
    if is_uniform(G) != 2:
        raise NotAGraph("graph power predictor needs a 2-uniform input")
    r = is_regular(G)
    if r is None:
        raise NotRegular("graph is not regular")
    if k < 3:
        raise BadParameters(f"graph power needs k >= 3, got {k}")
    n, m = G.n, G.m
    lams = _snap(eigenvalues(adjacency_matrix(G)).values, r)
    pieces = [Piece("i", (-(k - 2) / (k - 1),), m * (k - 3), "value")]
    if flavor == "structural":
        vals = _eig(power_cycle_block(k), "cycle block eigenvalue")
        pieces.append(Piece("ii", vals, m - n, "block"))
    else:
        vals, poly = _roots((k - 1, -(k - 2) * (k - 3), -(k - 1) * (k - 2)), "(ii)")
        pieces.append(Piece("ii", vals, m - n, "polynomial", "", poly))
    for lam in lams:
        detail = f"lambda={lam:.12g}"
        if flavor == "structural":
            vals = _eig(power_block(k, r, lam), "power block eigenvalue")
            pieces.append(Piece("iii", vals, 1, "block", detail))
        else:
            L = lam
            coeffs = (
                (k - 1) ** 2,
                -(k - 1) * (k - 2) * (L + k - 3),
                -((k - 1) ** 2 * (r + L) + (k - 1) ** 2 * (k - 2)
                  + (k - 2) ** 3 * (r + L) - (k - 2) ** 2 * (k - 3) * L),
                (k - 1) * (k - 2) * (k - 3) * (r + L) + (k - 1) * (k - 2) ** 2 * L
                - 2 * (k - 1) * (k - 2) ** 2 * (r + L),
            )
            vals, poly = _roots(coeffs, f"(iii) {detail}")
            pieces.append(Piece("iii", vals, 1, "polynomial", detail, poly))
    return assemble("t2", flavor, pieces)


def _check_flower(l, s, t):
    if not (l >= 1 and s >= 1 and t >= 1 and s + t >= 2):
        raise BadParameters(f"hyperflower needs l, s, t >= 1 and s + t >= 2 (l={l}, s={s}, t={t})")


def _closed_from_integer_polys(polys, theorem) -> list[Piece]:
    pieces = []
    for clause, entries in polys.items():
        for coeffs, mult in entries:
            vals, poly = _roots(coeffs, f"({clause})")
            pieces.append(Piece(clause, vals, mult, "polynomial", "", poly))
    return pieces


def predict_hyperflower(l: int, s: int, t: int, flavor: str = "structural",
                        theorem: str = "t3") -> PredictedSpectrum:
    """Spectrum of S(F_l^{s,t}), k = s + t."""
    _check_flavor(flavor)
    _check_flower(l, s, t)
    k = s + t
    pieces = [
        Piece("i", (-(k - 2) / (k - 1),), l * (t - 1), "value"),
        Piece("ii", (-l * (k - 2) / (k - 1),), s - 1, "value"),
    ]
    if flavor == "structural":
        pieces.append(Piece("iii", _eig(hyperflower_petal_block(s, t), "petal block"),
                            l - 1, "block"))
        pieces.append(Piece("iv", _eig(hyperflower_quotient(l, s, t), "quotient"),
                            1, "quotient"))
    else:
        disc = math.sqrt((t - 1) ** 2 * (k - 2) ** 2 + 4 * t * (k - 1) ** 2)
        vals = (((t - 1) * (k - 2) + disc) / (2 * (k - 1)),
                ((t - 1) * (k - 2) - disc) / (2 * (k - 1)))
        quad = Polynomial((k - 1, -(t - 1) * (k - 2), -t * (k - 1)))
        pieces.append(Piece("iii", vals, l - 1, "formula", "", quad))
        cubic = closed_form_polynomials("t3", l=l, s=s, t=t)["iv"][0][0]
        vals, poly = _roots(cubic, "(iv)")
        pieces.append(Piece("iv", vals, 1, "polynomial", "", poly))
    return assemble(theorem, flavor, pieces)


def predict_hyperstar(l: int, k: int, flavor: str = "structural") -> PredictedSpectrum:
    """Spectrum of S(hyperstar) with l petals, k-uniform."""
    _check_flavor(flavor)
    if l < 1 or k < 2:
        raise BadParameters(f"hyperstar needs l >= 1, k >= 2 (l={l}, k={k})")
    if flavor == "structural":
        return predict_hyperflower(l, 1, k - 1, "structural", theorem="t4")
    pieces = [Piece("i", (-(k - 2) / (k - 1),), l * (k - 2), "value")]
    disc = math.sqrt((k - 2) ** 4 + 4 * (k - 1) ** 3)
    vals = (((k - 2) ** 2 + disc) / (2 * (k - 1)), ((k - 2) ** 2 - disc) / (2 * (k - 1)))
    quad = Polynomial(closed_form_polynomials("t4", l=l, k=k)["iii"][0][0])
    pieces.append(Piece("iii", vals, l - 1, "formula", "", quad))
    vals, poly = _roots(closed_form_polynomials("t4", l=l, k=k)["iv"][0][0], "(iv)")
    pieces.append(Piece("iv", vals, 1, "polynomial", "", poly))
    return assemble("t4", flavor, pieces)


def rotation_alphas(l: int) -> list[complex]:
    return [complex(math.cos(2 * math.pi * j / l), math.sin(2 * math.pi * j / l))
            for j in range(1, l)]


def predict_petal_overlapped(l: int, s: int, t: int,
                             flavor: str = "structural") -> PredictedSpectrum:
    """Spectrum of S(petal-overlapped F_l^{s,t}), k = s + t + 2."""
    _check_flavor(flavor)
    if not (l >= 3 and s >= 1 and t >= 1):
        raise BadParameters(f"petal-overlapped needs l >= 3, s, t >= 1 (l={l}, s={s}, t={t})")
    k = s + t + 2
    pieces = [
        Piece("i", (-(k - 2) / (k - 1),), l * (t - 1), "value"),
        Piece("ii", (-l * (k - 2) / (k - 1),), s - 1, "value"),
    ]
    if flavor == "structural":
        pieces.append(Piece("iii", _eig(petal_quotient(l, s, t), "quotient"), 1, "quotient"))
    else:
        quartic = (
            (k - 1) ** 3,
            -(k - 1) ** 2 * (k - 2) * (l * s + t + 1 - l),
            -(k - 1) * ((l * s + t + 4) * (k - 1) ** 2
                        + (3 * l * s + l * t + l + 2 * t + 2) * (k - 2) ** 2),
            -(2 * l * (s + t + 1) * (k - 2) ** 3
              + (3 * l * s + l * t + 4 * l + 2 * t + 4) * (k - 1) ** 2 * (k - 2)),
            -2 * l * (s + t + 2) * (k - 1) * (k - 2) ** 2,
        )
        vals, poly = _roots(quartic, "(iii)")
        pieces.append(Piece("iii", vals, 1, "polynomial", "", poly))
    for jp, alpha in enumerate(rotation_alphas(l), start=1):
        detail = f"j'={jp}"
        if flavor == "structural":
            vals = _eig(petal_rotation_block(s, t, alpha), "rotation block eigenvalue")
            pieces.append(Piece("iv", vals, 1, "block", detail))
        else:
            c = 2 * math.cos(2 * math.pi * jp / l)
            cubic = (
                (k - 1) ** 2,
                -(k - 1) * (k - 2) * (c + (t - 1)),
                -(t * (k - 1) ** 2 + (c + 2) * (k - 1) ** 2 + (c + 2) * t * (k - 2) ** 2
                  - c * (t - 1) * (k - 2) ** 2),
                -(c + 2) * (k - 1) * (k - 2) - 2 * t * (k - 1) * (k - 2),
            )
            vals, poly = _roots(cubic, f"(iv) {detail}")
            pieces.append(Piece("iv", vals, 1, "polynomial", detail, poly))
    return assemble("t5", flavor, pieces)


def predict_squid_like(k: int, flavor: str = "structural") -> PredictedSpectrum:
    """Spectrum of S(squid-like hypergraph), k-uniform."""
    _check_flavor(flavor)
    if k < 2:
        raise BadParameters(f"squid-like needs k >= 2, got {k}")
    if flavor == "closed":
        return assemble("t6", flavor,
                        _closed_from_integer_polys(closed_form_polynomials("t6", k=k), "t6"))
    pieces = [
        Piece("i", (-(k - 2) / (k - 1),), k * (k - 2), "value"),
        Piece("ii", _eig(squid_like_block(k), "squid block eigenvalue"), k - 1, "block"),
        Piece("iii", _eig(squid_like_quotient(k), "quotient"), 1, "quotient"),
    ]
    return assemble("t6", flavor, pieces)


# -- theorem registry -------------------------------------------------------

THEOREMS = ("t1", "t2", "t3", "t4", "t5", "t6")
PARAMETER_NAMES = {
    "t1": (), "t2": ("k",), "t3": ("l", "s", "t"), "t4": ("l", "k"),
    "t5": ("l", "s", "t"), "t6": ("k",),
}


def instance(theorem: str, params: dict, base: Hypergraph | None = None) -> Hypergraph:
    """The hypergraph whose subdivision a theorem describes."""
    if theorem == "t1":
        if base is None:
            raise BadParameters("t1 needs an input hypergraph")
        return base
    if theorem == "t2":
        if base is None:
            raise BadParameters("t2 needs an input graph")
        return families.power_of_graph(base, params["k"])
    if theorem == "t3":
        return families.hyperflower(params["l"], params["s"], params["t"])
    if theorem == "t4":
        return families.hyperstar(params["l"], params["k"])
    if theorem == "t5":
        return families.petal_overlapped_hyperflower(params["l"], params["s"], params["t"])
    if theorem == "t6":
        return families.squid_like(params["k"])
    raise BadParameters(f"unknown theorem {theorem!r}")


def predict(theorem: str, params: dict | None = None, base: Hypergraph | None = None,
            flavor: str = "structural") -> PredictedSpectrum:
    params = dict(params or {})
    missing = [p for p in PARAMETER_NAMES.get(theorem, ()) if p not in params]
    if theorem not in PARAMETER_NAMES:
        raise BadParameters(f"unknown theorem {theorem!r}")
    if missing:
        raise BadParameters(f"{theorem} needs parameters {missing}")
    if theorem == "t1":
        if base is None:
            raise BadParameters("t1 needs an input hypergraph")
        return predict_regular(base, flavor)
    if theorem == "t2":
        if base is None:
            raise BadParameters("t2 needs an input graph")
        return predict_graph_power(base, params["k"], flavor)
    if theorem == "t3":
        return predict_hyperflower(params["l"], params["s"], params["t"], flavor)
    if theorem == "t4":
        return predict_hyperstar(params["l"], params["k"], flavor)
    if theorem == "t5":
        return predict_petal_overlapped(params["l"], params["s"], params["t"], flavor)
    return predict_squid_like(params["k"], flavor)


# -- audit -------------------------------------------------------------------

@dataclass(frozen=True)
class DiscrepancyReport:
    theorem: str
    params: dict
    flavors: tuple[str, str]
    max_deviation: float
    piece: str
    note: str

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem, "params": self.params,
            "flavors": list(self.flavors), "max_deviation": _json_safe(self.max_deviation),
            "piece": self.piece, "note": self.note,
        }


@dataclass(frozen=True)
class AuditResult:
    theorem: str
    params: dict
    order: int
    deviations: dict
    reports: tuple[DiscrepancyReport, ...]

    @property
    def passed(self) -> bool:
        return not self.reports

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem, "params": self.params, "order": self.order,
            "verdict": "pass" if self.passed else "discrepancy",
            "deviations": self.deviations,
            "reports": [r.to_dict() for r in self.reports],
        }


def _piece_deviation(a: Piece, b: Piece) -> float:
    if len(a.values) != len(b.values) or a.multiplicity != b.multiplicity:
        return math.inf
    return float(np.max(np.abs(np.sort(a.values) - np.sort(b.values)), initial=0.0))


def _json_safe(x: float):
    return x if math.isfinite(x) else "inf"


def audit(theorem: str, params: dict | None = None, base: Hypergraph | None = None,
          tol: float = 1e-6, label: str | None = None) -> AuditResult:
    """Compare structural flavor, closed flavor and the eigensolver on S(H).

    Never raises on mathematical disagreement; each disagreement becomes a
    DiscrepancyReport naming the clause that diverges.
    """
    params = dict(params or {})
    shown = dict(params)
    if label is not None:
        shown["input"] = label
    H = instance(theorem, params, base)
    S = subdivide(H).hypergraph
    oracle = eigenvalues(adjacency_matrix(S)).values
    structural = predict(theorem, params, base, "structural")
    ok_so, dev_so = multiset_equal(structural.values, oracle, tol)
    reports = []
    try:
        closed = predict(theorem, params, base, "closed")
    except NonRealRoot as exc:
        closed = None
        dev_co = dev_cs = math.inf
        roots = np.round(exc.roots, 9).tolist() if exc.roots is not None else []
        reports.append(DiscrepancyReport(
            theorem, shown, ("closed", "structural"), math.inf, exc.piece or "(unknown)",
            f"closed-form clause {exc.piece} has non-real roots {roots}"))
    if closed is not None:
        ok_co, dev_co = multiset_equal(closed.values, oracle, tol)
        ok_cs, dev_cs = multiset_equal(closed.values, structural.values, tol)
    if not ok_so:
        reports.append(DiscrepancyReport(
            theorem, shown, ("structural", "oracle"), dev_so, "(all)",
            f"structural prediction ({len(structural)} values) disagrees with the "
            f"eigensolver on {S.n} vertices"))
    if closed is not None and not (ok_co and ok_cs):
        named = False
        for a, b in zip(closed.pieces, structural.pieces):
            d = _piece_deviation(a, b)
            if d > tol:
                named = True
                reports.append(DiscrepancyReport(
                    theorem, shown, ("closed", "structural"), d, a.tag,
                    f"closed-form clause {a.tag} roots {np.round(a.values, 9).tolist()} "
                    f"vs structural {np.round(b.values, 9).tolist()}"))
        if not named:
            reports.append(DiscrepancyReport(
                theorem, shown, ("closed", "oracle"), dev_co, "(all)",
                "closed-form multiset disagrees with the eigensolver"))
    deviations = {
        "structural_vs_oracle": _json_safe(dev_so),
        "closed_vs_oracle": _json_safe(dev_co),
        "closed_vs_structural": _json_safe(dev_cs),
    }
    return AuditResult(theorem, shown, S.n, deviations, tuple(reports))
