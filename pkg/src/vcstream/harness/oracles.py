"""Independent ground-truth solvers: no kernelization, no sketches."""

from __future__ import annotations

import itertools

from ..core import Edge, VcAnswer

VC_VERTEX_BUDGET = 40
FVS_VERTEX_BUDGET = 14


class BudgetExceeded(ValueError):
    """Instance too large for exhaustive ground truth."""


def _vertices(edges) -> set[int]:
    return {v for e in edges for v in (e.u, e.v)}


def _cover_branch(edges: list[Edge], budget: int) -> set[int] | None:
    if not edges:
        return set()
    if budget == 0:
        return None
    e = edges[0]
    best = None
    for pick in (e.u, e.v):
        rest = [f for f in edges if pick not in (f.u, f.v)]
        sub = _cover_branch(rest, budget - 1)
        if sub is not None:
            cand = {pick} | sub
            if best is None or len(cand) < len(best):
                best = cand
    return best


def oracle_min_vc(edges) -> tuple[int, set[int]]:
    """Minimum vertex cover size and one witness, by plain branching."""
    edges = sorted(set(edges))
    verts = _vertices(edges)
    if len(verts) > VC_VERTEX_BUDGET:
        raise BudgetExceeded(f"{len(verts)} vertices")
    for budget in range(len(verts) + 1):
        got = _cover_branch(edges, budget)
        if got is not None:
            return len(got), got
    return len(verts), verts


def oracle_vc(edges, k: int) -> VcAnswer:
    edges = sorted(set(edges))
    verts = _vertices(edges)
    if len(verts) > VC_VERTEX_BUDGET:
        raise BudgetExceeded(f"{len(verts)} vertices")
    got = _cover_branch(edges, k)
    if got is None:
        return VcAnswer.no()
    return VcAnswer.yes(got)


def _acyclic(edges, removed: set[int]) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        if e.u in removed or e.v in removed:
            continue
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def oracle_fvs(edges, k: int) -> VcAnswer:
    """Exact FVS decision by subset enumeration."""
    edges = sorted(set(edges))
    verts = sorted(_vertices(edges))
    if len(verts) > FVS_VERTEX_BUDGET:
        raise BudgetExceeded(f"{len(verts)} vertices")
    for size in range(min(k, len(verts)) + 1):
        for combo in itertools.combinations(verts, size):
            if _acyclic(edges, set(combo)):
                return VcAnswer.yes(set(combo))
    return VcAnswer.no()


def oracle_min_fvs(edges) -> tuple[int, set[int]]:
    edges = sorted(set(edges))
    verts = sorted(_vertices(edges))
    if len(verts) > FVS_VERTEX_BUDGET:
        raise BudgetExceeded(f"{len(verts)} vertices")
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if _acyclic(edges, set(combo)):
                return size, set(combo)
    raise AssertionError("unreachable")
