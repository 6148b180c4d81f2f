"""Parameter grids swept by ``audit-all`` and the acceptance suite."""

from __future__ import annotations

from . import families as F

REGULAR_INPUTS = {
    **{f"single_edge_k{k}": (F.single_edge, {"k": k}) for k in range(2, 7)},
    "fano": (F.fano_plane, {}),
    "complete_uniform_4_3": (F.complete_uniform, {"n": 4, "k": 3}),
    **{f"cycle_{n}": (F.cycle_graph, {"n": n}) for n in range(4, 9)},
}

POWER_BASES = {
    **{f"cycle_{n}": (F.cycle_graph, {"n": n}) for n in range(3, 7)},
    "petersen": (F.petersen, {}),
    "complete_5": (F.complete_graph, {"n": 5}),
}


def build_base(table: dict, name: str):
    fn, kw = table[name]
    return fn(**kw)


def audit_grid():
    """Yield ``(theorem, params, base_name)`` for every audited grid point."""
    for name in REGULAR_INPUTS:
        yield "t1", {}, name
    for name in POWER_BASES:
        for k in (3, 4, 5):
            yield "t2", {"k": k}, name
    for l in range(1, 7):
        for s in range(1, 4):
            for t in range(1, 5):
                if s + t >= 2:
                    yield "t3", {"l": l, "s": s, "t": t}, None
    for l in range(1, 7):
        for k in range(2, 6):
            yield "t4", {"l": l, "k": k}, None
    for l in range(3, 7):
        for s in range(1, 3):
            for t in range(1, 4):
                yield "t5", {"l": l, "s": s, "t": t}, None
    for k in range(2, 7):
        yield "t6", {"k": k}, None


def base_for(theorem: str, name: str | None):
    if name is None:
        return None
    return build_base(REGULAR_INPUTS if theorem == "t1" else POWER_BASES, name)
