"""Invariant checker for the promised-dynamic matching state.

Reads the exact sketch mirrors (states built with ``mirror=True``) and
compares against a shadow graph holding ground truth.  Returns violation
strings instead of raising so a property test can report all breaks from
one stream prefix at once.
"""

from __future__ import annotations

from ..core import Edge, ShadowGraph
from ..pdpsa import MatchingState


def _sketched(st: MatchingState, v: int) -> set[int]:
    sk = st.sketches.get(v)
    if sk is None:
        return set()
    if sk.mirror is None:
        raise ValueError("state was built without mirror=True")
    return {i for i, w in sk.mirror.items() if w != 0}


def check_invariants(st: MatchingState, shadow: ShadowGraph) -> list[str]:
    out: list[str] = []

    # matching well-formedness: edges live, disjoint, endpoints tracked
    seen: set[int] = set()
    for e in sorted(st.matching):
        if not shadow.has_edge(e):
            out.append(f"matching edge {e} is not live")
        if e.u in seen or e.v in seen:
            out.append(f"matching edge {e} shares a vertex")
        seen.update((e.u, e.v))
    if seen != st.matched:
        out.append(f"matched set {sorted(st.matched)} != matching "
                   f"endpoints {sorted(seen)}")
    for v in st.matched:
        if v not in st.sketches or v not in st.ts:
            out.append(f"matched vertex {v} lacks sketch or timestamp")

    # maximality: no live edge with both endpoints exposed
    for e in sorted(shadow.edges()):
        if e.u not in st.matched and e.v not in st.matched:
            out.append(f"live edge {e} has both endpoints exposed")

    for e in sorted(shadow.edges()):
        in_u = e.v in _sketched(st, e.u)
        in_v = e.u in _sketched(st, e.v)
        # invariant 1: at least one endpoint's sketch holds the edge
        if not in_u and not in_v:
            out.append(f"live edge {e} is in neither sketch")
        # invariant 3: in both sketches exactly when T lists it
        if (in_u and in_v) != (e in st.tdict):
            out.append(f"edge {e}: both-sketches={in_u and in_v} but "
                       f"T-listed={e in st.tdict}")
        # invariant 2: both matched, not in T: only the earlier-matched
        # endpoint's sketch holds the edge
        if (e.u in st.matched and e.v in st.matched
                and e not in st.tdict and in_u != in_v):
            early = e.u if st.ts[e.u] < st.ts[e.v] else e.v
            holder = e.u if in_u else e.v
            if holder != early:
                out.append(f"edge {e} held only by later endpoint {holder}")

    # T must list only live edges present in both sketches
    for e in st.tdict:
        if not shadow.has_edge(e):
            out.append(f"T lists dead edge {e}")

    # sketched support counters agree with the mirrors
    for v, sk in st.sketches.items():
        if sk.mirror is not None and st.sup[v] != len(_sketched(st, v)):
            out.append(f"support counter for {v} is {st.sup[v]}, mirror "
                       f"has {len(_sketched(st, v))}")

    # no sketched phantom: every mirrored entry is a live edge or dead
    # residue is at least weight-consistent (weights must be +1)
    for v, sk in st.sketches.items():
        if sk.mirror is None:
            continue
        for i, w in sk.mirror.items():
            if w != 1:
                out.append(f"sketch of {v} holds index {i} with net "
                           f"weight {w}")
            elif not shadow.has_edge(Edge(v, i)):
                out.append(f"sketch of {v} holds dead edge ({v},{i})")

    return out
