"""Command-line interface.

Exit codes: 0 success (or audit pass), 1 usage/input error, 2 the
mathematics disagrees (verify/audit-all found a discrepancy).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__, families, grids, predictors
from .cospectral import direct_certificate, power_subdivision_pair, subdivision_pair
from .errors import HypergraphError, InputsIsomorphic, NonRealRoot, NotCospectralInput, NotEquitable
from .hypergraph import Hypergraph, adjacency_matrix
from .partitions import Partition, check_equitable, containment_check, refine_to_equitable
from .spectra import SpectrumMultiset, eigenvalues
from .subdivision import subdivide

EXIT_OK, EXIT_INPUT, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    parameters: dict = field(default_factory=dict)
    inputs: list = field(default_factory=list)
    outputs: list = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    seed: int | None = None
    version: str = __version__


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- helpers -----------------------------------------------------------------

def parse_params(text: str | None) -> dict:
    """``k=3,l=4,graph=petersen,connection=1:3`` -> dict (ints where possible)."""
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        key, val = (x.strip() for x in item.split("=", 1))
        if ":" in val:
            out[key] = [int(v) for v in val.split(":") if v]
        else:
            try:
                out[key] = int(val)
            except ValueError:
                out[key] = val
    return out


def parse_cells(text: str) -> list[list[int]]:
    """``0-2;3,4;5`` -> [[0, 1, 2], [3, 4], [5]]."""
    cells = []
    for chunk in text.split(";"):
        cell = []
        for part in chunk.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part:
                a, b = part.split("-")
                cell.extend(range(int(a), int(b) + 1))
            else:
                cell.append(int(part))
        if cell:
            cells.append(cell)
    return cells


def read_hypergraph(path: str | None) -> Hypergraph:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"cannot parse hypergraph document: {exc}") from None
    return Hypergraph.from_dict(doc)


def emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def dump_json(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _manifest_line(man: RunManifest) -> str:
    return "# manifest: " + json.dumps(asdict(man), sort_keys=True) + "\n"


def spectrum_table(spec: SpectrumMultiset, fmt: str, man: RunManifest) -> str:
    rows = [(_fmt(v), m) for v, m in spec.grouped]
    if fmt == "json":
        return dump_json({
            "order": len(spec), "values": [float(_fmt(v)) for v in spec.values],
            "grouped": [[float(v), m] for v, m in rows], "manifest": asdict(man),
        })
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(_manifest_line(man))
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["value", "multiplicity"])
        w.writerows(rows)
        return buf.getvalue()
    width = max(len(v) for v, _ in rows)
    lines = [_manifest_line(man).rstrip("\n"), f"{'value':>{width}}  multiplicity"]
    lines += [f"{v:>{width}}  {m}" for v, m in rows]
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_gen(args) -> int:
    params = parse_params(args.params)
    H = families.generate(args.family, **params)
    if args.shuffle:
        perm = np.random.default_rng(args.seed).permutation(H.n)
        H = H.relabel(perm)
    man = RunManifest("gen", {"family": args.family, **params, "shuffle": args.shuffle},
                      outputs=[args.out or "-"], seed=args.seed)
    emit(dump_json({**H.to_dict(), "manifest": asdict(man)}), args.out)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    H = read_hypergraph(args.input)
    res = subdivide(H)
    man = RunManifest("subdivide", inputs=[args.input or "-"], outputs=[args.out or "-"])
    if args.provenance:
        man.outputs.append(args.provenance)
        with open(args.provenance, "w") as fh:
            fh.write(dump_json({**res.provenance(), "manifest": asdict(man)}))
    emit(dump_json({**res.hypergraph.to_dict(), "manifest": asdict(man)}), args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    H = read_hypergraph(args.input)
    spec = eigenvalues(adjacency_matrix(H))
    man = RunManifest("spectrum", inputs=[args.input or "-"], outputs=[args.out or "-"],
                      tolerances={"grouping": spec.tol})
    emit(spectrum_table(spec, args.format, man), args.out)
    return EXIT_OK


def cmd_quotient(args) -> int:
    H = read_hypergraph(args.input)
    A = adjacency_matrix(H)
    if args.cells == "auto":
        P = refine_to_equitable(A)
    else:
        P = Partition.of(parse_cells(args.cells))
    Q = check_equitable(A, P, args.tol)
    contained = containment_check(Q, A, args.containment_tol)
    man = RunManifest("quotient", {"cells": args.cells}, inputs=[args.input or "-"],
                      outputs=[args.out or "-"],
                      tolerances={"equitable": args.tol, "containment": args.containment_tol})
    if args.format == "json":
        text = dump_json({
            "cells": [list(c) for c in P.cells],
            "quotient": [[float(_fmt(x)) for x in row] for row in Q.matrix],
            "quotient_eigenvalues": [float(_fmt(x)) for x in Q.eigenvalues()],
            "contained": contained, "manifest": asdict(man),
        })
    else:
        lines = [_manifest_line(man).rstrip("\n"), f"cells: {[list(c) for c in P.cells]}", "Q ="]
        lines += ["  " + "  ".join(f"{_fmt(x):>14}" for x in row) for row in Q.matrix]
        lines.append("eigenvalues: " + " ".join(_fmt(x) for x in Q.eigenvalues()))
        lines.append(f"contained in spectrum: {'yes' if contained else 'no'}")
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    return EXIT_OK if contained else EXIT_DISCREPANCY


def _theorem_inputs(args):
    params = parse_params(args.params)
    base = None
    if args.input:
        base = read_hypergraph(args.input)
    elif args.theorem in ("t1", "t2") and "graph" in params:
        own = ("graph",) + predictors.PARAMETER_NAMES[args.theorem]
        gparams = {k: v for k, v in params.items() if k not in own}
        base = families.generate(params["graph"], **gparams)
    numeric = {k: v for k, v in params.items()
               if k in predictors.PARAMETER_NAMES.get(args.theorem, ())}
    return params, numeric, base


def cmd_predict(args) -> int:
    params, numeric, base = _theorem_inputs(args)
    pred = predictors.predict(args.theorem, numeric, base, args.flavor)
    man = RunManifest("predict", {"theorem": args.theorem, **params, "flavor": args.flavor},
                      inputs=[args.input] if args.input else [], outputs=[args.out or "-"])
    if args.format == "json":
        text = dump_json({
            "theorem": pred.theorem, "flavor": pred.flavor,
            "values": [float(_fmt(v)) for v in pred.values],
            "pieces": [{"clause": p.clause, "detail": p.detail, "source": p.source,
                        "multiplicity": p.multiplicity,
                        "values": [float(_fmt(v)) for v in p.values]} for p in pred.pieces],
            "manifest": asdict(man),
        })
    else:
        text = spectrum_table(SpectrumMultiset.of(pred.values), args.format, man)
    emit(text, args.out)
    return EXIT_OK


def _audit_text(results) -> str:
    lines = []
    for r in results:
        head = f"{r.theorem} {r.params}: {'PASS' if r.passed else 'DISCREPANCY'}"
        lines.append(head + f"  (order {r.order}, structural-vs-oracle "
                     f"{float(r.deviations['structural_vs_oracle']):.2e})")
        for rep in r.reports:
            lines.append(f"  {rep.flavors[0]} vs {rep.flavors[1]} {rep.piece}: "
                         f"max deviation {rep.max_deviation:.3e}; {rep.note}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    params, numeric, base = _theorem_inputs(args)
    label = args.input or params.get("graph")
    res = predictors.audit(args.theorem, numeric, base, args.tol, label=label)
    man = RunManifest("verify", {"theorem": args.theorem, **params},
                      inputs=[args.input] if args.input else [], outputs=[args.out or "-"],
                      tolerances={"verify": args.tol})
    if args.format == "json":
        text = dump_json({**res.to_dict(), "manifest": asdict(man)})
    else:
        text = _manifest_line(man) + _audit_text([res])
    emit(text, args.out)
    return EXIT_OK if res.passed else EXIT_DISCREPANCY


def _audit_point(point):
    theorem, params, base_name, tol = point
    base = grids.base_for(theorem, base_name)
    return predictors.audit(theorem, params, base, tol, label=base_name)


def discrepancy_ledger(results, man: RunManifest) -> str:
    """Markdown summary of an audit sweep."""
    passed = sum(r.passed for r in results)
    out = [
        "# Closed-form audit ledger",
        "",
        f"Generated by `hypersub audit-all` (version {man.version}, tolerance "
        f"{man.tolerances['verify']:g}).  {passed} of {len(results)} grid points pass.",
        "",
        "Every grid point compares three spectra of the subdivided hypergraph: the",
        "structural prediction, the printed closed forms, and the eigensolver.",
        "",
        "| theorem | points | structural vs eigensolver (worst) | closed-form discrepancies |",
        "|---|---|---|---|",
    ]
    for th in predictors.THEOREMS:
        rs = [r for r in results if r.theorem == th]
        if not rs:
            continue
        worst = max(float(r.deviations["structural_vs_oracle"]) for r in rs)
        bad = sum(not r.passed for r in rs)
        out.append(f"| {th} | {len(rs)} | {worst:.2e} | {bad} |")
    out += ["", "## Discrepancies", ""]
    reported = [r for r in results if not r.passed]
    if not reported:
        out.append("None.")
    for r in reported:
        for rep in r.reports:
            out.append(f"- {r.theorem} {r.params}: {rep.flavors[0]} vs {rep.flavors[1]}, "
                       f"clause {rep.piece}, max deviation {rep.max_deviation:.3e}. {rep.note}")
    return "\n".join(out) + "\n"


def cmd_audit_all(args) -> int:
    points = [(th, p, b, args.tol) for th, p, b in grids.audit_grid()]
    workers = args.workers or os.cpu_count() or 1
    if workers == 1:
        results = [_audit_point(p) for p in points]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_audit_point, points, chunksize=8))
    man = RunManifest("audit-all", {"points": len(points)}, outputs=[args.out or "-"],
                      tolerances={"verify": args.tol})
    if args.format == "json":
        text = dump_json({"results": [r.to_dict() for r in results], "manifest": asdict(man)})
    elif args.format == "markdown":
        text = discrepancy_ledger(results, man)
    else:
        text = _manifest_line(man) + _audit_text(results)
    emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_DISCREPANCY


def _named_or_file(spec: str) -> Hypergraph:
    if spec in families.FAMILIES or spec in families.BASE_GRAPHS:
        return families.generate(spec)
    return read_hypergraph(spec)


def cmd_cospectral(args) -> int:
    if args.action == "check":
        H1, H2 = read_hypergraph(args.first), read_hypergraph(args.second)
        man = RunManifest("cospectral check", inputs=[args.first, args.second],
                          outputs=[args.out or "-"], tolerances={"spectral": args.tol})
        try:
            cert = direct_certificate(H1, H2, args.tol, args.budget)
        except NotCospectralInput as exc:
            emit(dump_json({"cospectral": False, "reason": str(exc), "manifest": asdict(man)}),
                 args.out)
            return EXIT_DISCREPANCY
        emit(dump_json({"cospectral": True, **cert.to_dict(), "manifest": asdict(man)}), args.out)
        return EXIT_OK
    names = [s.strip() for s in args.base.split(",")]
    if len(names) != 2:
        raise UsageError("--base needs exactly two comma-separated inputs")
    G1, G2 = (_named_or_file(s) for s in names)
    if args.k is None:
        cert = subdivision_pair(G1, G2, args.tol, args.budget)
    else:
        cert = power_subdivision_pair(G1, G2, args.k, args.tol, args.budget)
    man = RunManifest("cospectral forge", {"base": names, "k": args.k},
                      inputs=names, tolerances={"spectral": args.tol})
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        paths = [os.path.join(args.out, f) for f in ("first.json", "second.json", "certificate.json")]
        man.outputs = paths
        for H, path in zip((cert.first, cert.second), paths):
            with open(path, "w") as fh:
                fh.write(dump_json({**H.to_dict(), "manifest": asdict(man)}))
        with open(paths[2], "w") as fh:
            fh.write(dump_json({**cert.to_dict(), "manifest": asdict(man)}))
        sys.stdout.write(f"{cert.provenance}: {cert.first.n} vertices, max deviation "
                         f"{cert.max_deviation:.3e}, {cert.verdict.value} "
                         f"({cert.nonisomorphism_basis})\n")
    else:
        man.outputs = ["-"]
        emit(dump_json({**cert.to_dict(), "manifest": asdict(man)}), None)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypersub", description="Spectra of subdivided uniform hypergraphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a family member")
    g.add_argument("--family", required=True)
    g.add_argument("--params", default="")
    g.add_argument("--shuffle", action="store_true", help="randomly relabel vertices")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("subdivide", help="subdivide every hyperedge")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--provenance", help="write edge/vertex provenance maps here")
    s.add_argument("--out")
    s.set_defaults(func=cmd_subdivide)

    sp = sub.add_parser("spectrum", help="adjacency spectrum")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("quotient", help="quotient matrix of an equitable partition")
    q.add_argument("input")
    q.add_argument("--cells", required=True, help="e.g. '0-1;2-7;8-11' or 'auto'")
    q.add_argument("--tol", type=float, default=1e-10)
    q.add_argument("--containment-tol", type=float, default=1e-8)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q.set_defaults(func=cmd_quotient)

    for name, fn in (("predict", cmd_predict), ("verify", cmd_verify)):
        c = sub.add_parser(name)
        c.add_argument("--theorem", required=True, choices=predictors.THEOREMS)
        c.add_argument("--params", default="")
        c.add_argument("--input", help="base hypergraph (t1) or graph (t2)")
        c.add_argument("--out")
        if name == "predict":
            c.add_argument("--flavor", choices=("structural", "closed"), default="structural")
            c.add_argument("--format", choices=("text", "json", "csv"), default="text")
        else:
            c.add_argument("--tol", type=float, default=1e-6)
            c.add_argument("--format", choices=("text", "json"), default="text")
        c.set_defaults(func=fn)

    a = sub.add_parser("audit-all", help="audit every theorem over its parameter grid")
    a.add_argument("--tol", type=float, default=1e-6)
    a.add_argument("--workers", type=int, default=0, help="0 = one per CPU")
    a.add_argument("--format", choices=("text", "json", "markdown"), default="text")
    a.add_argument("--out")
    a.set_defaults(func=cmd_audit_all)

    cs = sub.add_parser("cospectral", help="cospectrality checks and constructions")
    csub = cs.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ck = csub.add_parser("check")
    ck.add_argument("first")
    ck.add_argument("second")
    ck.add_argument("--tol", type=float, default=1e-8)
    ck.add_argument("--budget", type=int, default=10**6)
    ck.add_argument("--out")
    fg = csub.add_parser("forge")
    fg.add_argument("--base", required=True, help="two graph names or files, comma-separated")
    fg.add_argument("--k", type=int, help="graph power before subdividing; omit to subdivide directly")
    fg.add_argument("--tol", type=float, default=1e-7)
    fg.add_argument("--budget", type=int, default=10**6)
    fg.add_argument("--out", help="directory for the pair and the certificate")
    for c in (ck, fg):
        c.set_defaults(func=cmd_cospectral)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"hypersub: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HypergraphError, NotEquitable, NotCospectralInput, InputsIsomorphic,
            NonRealRoot, OSError, KeyError) as exc:
        print(f"hypersub: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
