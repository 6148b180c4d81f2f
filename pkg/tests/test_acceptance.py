"""Acceptance criteria, one test per criterion.

Each test prints a single ``[criterion N] PASS|FAIL ...`` line (visible with
``pytest -s``) before asserting.
"""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
import sympy

from hypersub import families as F
from hypersub.cospectral import are_cospectral, power_subdivision_pair, subdivision_pair
from hypersub.grids import POWER_BASES, REGULAR_INPUTS, audit_grid, base_for, build_base
from hypersub.hypergraph import adjacency_matrix
from hypersub.isomorphism import Verdict
from hypersub.partitions import check_equitable, containment_check
from hypersub.predictors import audit, closed_form_polynomials, instance, predict
from hypersub.spectra import eigenvalues, multiset_equal
from hypersub.subdivision import subdivide
from hypersub.witnesses import proof_partition, witnesses

pytestmark = pytest.mark.acceptance

ROOT = Path(__file__).resolve().parents[1]


def report(n, ok, detail):
    print(f"[criterion {n}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def flower_grid():
    for l in range(1, 7):
        for s in range(1, 4):
            for t in range(1, 5):
                if s + t >= 2:
                    yield l, s, t


def oracle(H):
    return eigenvalues(adjacency_matrix(subdivide(H).hypergraph)).values


def test_criterion_1_counting_identities():
    bad = []
    points = 0
    for theorem, params, name in audit_grid():
        H = instance(theorem, params, base_for(theorem, name))
        S = subdivide(H).hypergraph
        k = len(H.edges[0])
        pred = predict(theorem, params, base_for(theorem, name))
        points += 1
        if (S.n, S.m, len(pred)) != (H.n + H.m, H.m * k, S.n):
            bad.append((theorem, params, name))
    report(1, not bad, f"{points} grid points, violations: {bad}")


def test_criterion_2_regular_uniform():
    worst, bad = 0.0, []
    for name in REGULAR_INPUTS:
        H = build_base(REGULAR_INPUTS, name)
        ok, dev = multiset_equal(predict("t1", base=H).values, oracle(H), 1e-6)
        worst = max(worst, dev)
        if not ok:
            bad.append(name)
    triple = F.single_edge(3)
    cancels = triple.m < triple.n and any(p.multiplicity < 0 for p in predict("t1", base=triple).pieces)
    report(2, not bad and cancels,
           f"{len(REGULAR_INPUTS)} inputs, worst {worst:.2e}, cancellation case present={cancels}, bad={bad}")


def test_criterion_3_graph_powers():
    worst, bad, largest = 0.0, [], 0
    for name in POWER_BASES:
        G = build_base(POWER_BASES, name)
        for k in (3, 4, 5):
            H = F.power_of_graph(G, k)
            largest = max(largest, H.n + H.m)
            ok, dev = multiset_equal(predict("t2", {"k": k}, G).values, oracle(H), 1e-6)
            worst = max(worst, dev)
            if not ok:
                bad.append((name, k))
    report(3, not bad, f"worst {worst:.2e}, largest order {largest}, bad={bad}")


def _window_count(values, x, w=1e-7):
    return int(np.sum(np.abs(np.asarray(values) - x) <= w))


def _expected_count(pred, x, w=1e-7):
    """Printed multiplicity of ``x`` plus collisions from every other piece."""
    return sum(pc.multiplicity * _window_count(pc.values, x, w) for pc in pred.pieces)


def _t4_is_t3_specialization():
    l, k = sympy.symbols("l k", positive=True)
    star = closed_form_polynomials("t4", l=l, k=k)
    flower = closed_form_polynomials("t3", l=l, s=1, t=k - 1)
    x = sympy.Symbol("x")
    for clause, entries in star.items():
        (c4, m4), = entries
        (c3, m3), = flower[clause]
        p4 = sum(c * x ** i for i, c in enumerate(reversed(c4)))
        p3 = sum(c * x ** i for i, c in enumerate(reversed(c3)))
        ratio = sympy.cancel(sympy.expand(p3) / sympy.expand(p4))
        if ratio.has(x) or sympy.simplify(m4 - m3) != 0:
            return False
    return sympy.simplify(flower["ii"][0][1]) == 0


def test_criterion_4_hyperflowers_and_hyperstars():
    worst, bad, mult_bad = 0.0, [], []
    for l, s, t in flower_grid():
        k = s + t
        spec = oracle(F.hyperflower(l, s, t))
        pred = predict("t3", {"l": l, "s": s, "t": t})
        ok, dev = multiset_equal(pred.values, spec, 1e-6)
        worst = max(worst, dev)
        if not ok:
            bad.append(("t3", l, s, t))
        if k >= 3:
            for x in (-(k - 2) / (k - 1), -l * (k - 2) / (k - 1)):
                if _window_count(spec, x) != _expected_count(pred, x):
                    mult_bad.append(("t3", l, s, t, x))
    for l in range(1, 7):
        for k in range(2, 6):
            spec = oracle(F.hyperstar(l, k))
            pred = predict("t4", {"l": l, "k": k})
            ok, dev = multiset_equal(pred.values, spec, 1e-6)
            worst = max(worst, dev)
            if not ok:
                bad.append(("t4", l, k))
            x = -(k - 2) / (k - 1)
            if k >= 3 and _window_count(spec, x) != _expected_count(pred, x):
                mult_bad.append(("t4", l, k))
    symbolic = _t4_is_t3_specialization()
    report(4, not bad and not mult_bad and symbolic,
           f"worst {worst:.2e}, spectrum bad={bad}, multiplicity bad={mult_bad}, "
           f"t4 = t3 specialization symbolically: {symbolic}")


def test_criterion_5_petal_and_squid_like():
    worst, bad, outcomes = 0.0, [], {"pass": 0, "report": 0, "unnamed": 0}
    points = [("t5", {"l": l, "s": s, "t": t}) for l in range(3, 7)
              for s in (1, 2) for t in (1, 2, 3)]
    points += [("t6", {"k": k}) for k in range(2, 7)]
    for theorem, params in points:
        res = audit(theorem, params, tol=1e-6)
        dev = res.deviations["structural_vs_oracle"]
        worst = max(worst, float(dev))
        if float(dev) > 1e-6:
            bad.append((theorem, params))
        if res.passed:
            outcomes["pass"] += 1
        elif all(r.piece and r.piece != "(unknown)" for r in res.reports):
            outcomes["report"] += 1
        else:
            outcomes["unnamed"] += 1
    ledger = ROOT / "docs" / "discrepancies.md"
    shipped = ledger.exists() and "t6" in ledger.read_text()
    report(5, not bad and outcomes["unnamed"] == 0 and shipped,
           f"structural worst {worst:.2e}, outcomes {outcomes}, ledger shipped={shipped}")


def _proof_points():
    for l, s, t in flower_grid():
        yield "t3", {"l": l, "s": s, "t": t}
    for l in range(1, 7):
        for k in range(2, 6):
            yield "t4", {"l": l, "k": k}
    for l in range(3, 7):
        for s in (1, 2):
            for t in (1, 2, 3):
                yield "t5", {"l": l, "s": s, "t": t}
    for k in range(2, 7):
        yield "t6", {"k": k}


def test_criterion_6_equitable_partitions():
    bad, n = [], 0
    for theorem, params in _proof_points():
        sub, P = proof_partition(theorem, params)
        n += 1
        try:
            Q = check_equitable(sub.A, P, tol=1e-10)
        except Exception as exc:  # noqa: BLE001 - recorded as a failure below
            bad.append((theorem, params, repr(exc)))
            continue
        if not containment_check(Q, sub.A, tol=1e-8):
            bad.append((theorem, params, "containment"))
    report(6, not bad, f"{n} partitions, failures: {bad}")


def test_criterion_7_eigenvector_families():
    worst, count, bad = 0.0, 0, []
    for theorem, params in _proof_points():
        sub, fams = witnesses(theorem, params)
        for fam in fams:
            for r in fam.residuals(sub.A):
                count += 1
                worst = max(worst, r)
                if r > 1e-8:
                    bad.append((theorem, params, fam.name))
    report(7, not bad, f"{count} witness vectors, worst residual {worst:.2e}, bad={bad[:5]}")


def test_criterion_8_cospectral_constructions():
    G1, G2 = F.shrikhande(), F.rook4x4()
    ok, dev = are_cospectral(G1, G2, 1e-9)
    cert = subdivision_pair(G1, G2, tol=1e-9, node_budget=10**6)
    strongly = ok and dev <= 1e-9 and cert.verdict is Verdict.NON_ISOMORPHIC

    pcert = power_subdivision_pair(G1, G2, 3, tol=1e-7, node_budget=10**6)
    t7 = pcert.first.n == pcert.second.n == 112 and pcert.max_deviation <= 1e-7

    rng = np.random.default_rng(20240101)
    S1, S2 = cert.first, cert.second
    shuffled = 0
    for _ in range(100):
        a = S1.relabel(rng.permutation(S1.n))
        b = S2.relabel(rng.permutation(S2.n))
        shuffled += are_cospectral(a, b, 1e-8)[0]
    report(8, strongly and t7 and shuffled == 100,
           f"Shrikhande/rook deviation {dev:.2e}, subdivided verdict {cert.verdict.value}; "
           f"t7 k=3 order {pcert.first.n}, deviation {pcert.max_deviation:.2e}, "
           f"verdict {pcert.verdict.value}; relabelings cospectral {shuffled}/100")


def _cli(args, cwd):
    return subprocess.run([sys.executable, "-m", "hypersub.cli", *args], cwd=cwd,
                          capture_output=True, check=False)


def test_criterion_9_determinism(tmp_path):
    runs = []
    for rep in ("a", "b"):
        d = tmp_path / rep
        d.mkdir()
        steps = [
            ["gen", "--family", "hyperflower", "--params", "l=3,s=2,t=2",
             "--shuffle", "--seed", "7", "--out", "flower.json"],
            ["subdivide", "flower.json", "--out", "sub.json"],
            ["spectrum", "sub.json", "--format", "json", "--out", "spec.json"],
            ["verify", "--theorem", "t5", "--params", "l=4,s=1,t=2", "--format", "json",
             "--out", "verify.json"],
            ["audit-all", "--workers", "2", "--format", "json", "--out", "audit.json"],
            ["cospectral", "forge", "--base", "shrikhande,rook4x4", "--out", "forge"],
        ]
        codes = [_cli(s, d).returncode for s in steps]
        files = sorted(p for p in d.rglob("*") if p.is_file())
        runs.append((codes, {p.relative_to(d).as_posix(): p.read_bytes() for p in files}))
    (codes_a, a), (codes_b, b) = runs
    same = codes_a == codes_b and a == b
    json.loads(a["spec.json"])
    report(9, same and len(a) >= 8,
           f"{len(a)} artifacts, exit codes {codes_a}, byte-identical across runs: {same}")
