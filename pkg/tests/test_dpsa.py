"""Unrestricted dynamic mode: global sketch, edge gate, estimator."""

import itertools
import random

from vcstream.core import (Config, Edge, ShadowGraph, StreamUpdate, covers,
                           INSERT, DELETE)
from vcstream.dpsa import (DistinctEdgeEstimator, DpsaState,
                           distinct_edge_estimate, dpsa_query, dpsa_update)
from vcstream.harness.generators import gen_random_stream
from vcstream.harness.oracles import oracle_vc


def mk(n=8, k=2, **kw):
    return DpsaState(Config(n=n, k=k, seed=kw.pop("seed", 0), **kw))


def test_insert_delete_cancels():
    a, b = mk(), mk()
    dpsa_update(a, StreamUpdate(INSERT, Edge(1, 2)))
    dpsa_update(a, StreamUpdate(DELETE, Edge(1, 2)))
    assert a.live == 0
    assert a.sketch.state_equals(b.sketch)


def test_live_counter_counts():
    st = mk(n=6, k=2)
    for i, (u, v) in enumerate(itertools.combinations(range(1, 7), 2)):
        if i == 13:
            break
        dpsa_update(st, StreamUpdate(INSERT, Edge(u, v)))
    assert st.live == 13


def test_permutation_invariance():
    rng = random.Random(3)
    updates = gen_random_stream(10, 120, 0.4, rng)
    a, b = mk(n=10, k=3), mk(n=10, k=3)
    for upd in updates:
        dpsa_update(a, upd)
    # net multiset replayed in sorted order gives an identical state
    net = {}
    for upd in updates:
        delta = 1 if upd.op == INSERT else -1
        net[upd.edge] = net.get(upd.edge, 0) + delta
    for e in sorted(net):
        for _ in range(abs(net[e])):
            dpsa_update(b, StreamUpdate(INSERT if net[e] > 0 else DELETE, e))
    assert a.sketch.state_equals(b.sketch)
    assert a.live == b.live


def test_empty_stream_yes():
    assert dpsa_query(mk(), 2).is_yes


def test_k6_gate_rejects_without_recovery():
    st = mk(n=6, k=2)
    for u, v in itertools.combinations(range(1, 7), 2):
        dpsa_update(st, StreamUpdate(INSERT, Edge(u, v)))
    assert st.live == 15 > 6 * 2
    assert dpsa_query(st, 2).is_no


def test_random_streams_match_oracle():
    rng = random.Random(7)
    for t in range(60):
        n = rng.randint(5, 18)
        k = rng.randint(0, 4)
        st = DpsaState(Config(n=n, k=k, seed=t))
        sh = ShadowGraph(n)
        for upd in gen_random_stream(n, rng.randint(5, 60), 0.35, rng):
            sh.apply(upd)
            dpsa_update(st, upd)
        ans = dpsa_query(st, k)
        oracle = oracle_vc(sh.edges(), k)
        assert ans.kind == oracle.kind
        if ans.is_yes:
            assert covers(ans.cover, sh.edges())


def test_estimator_zero_and_exact_small():
    est = DistinctEdgeEstimator(10_000, seed=1)
    assert est.estimate() == 0
    for i in range(1, 201):
        est.update(i, +1)
    assert est.estimate() == 200
    for i in range(1, 101):
        est.update(i, -1)
    assert est.estimate() == 100


def test_approx_mode_tolerates_duplicates():
    st = DpsaState(Config(n=8, k=2, seed=3), approx_mode=True)
    e = Edge(1, 2)
    for _ in range(3):
        dpsa_update(st, StreamUpdate(INSERT, e))
    for _ in range(2):
        dpsa_update(st, StreamUpdate(DELETE, e))
    assert distinct_edge_estimate(st) == 1
    ans = dpsa_query(st, 1)
    assert ans.is_yes


def test_gate_exact_at_boundary():
    # exactly nk live edges must still take the recovery path
    n, k = 6, 2
    st = mk(n=n, k=k)
    sh = ShadowGraph(n)
    for i, (u, v) in enumerate(itertools.combinations(range(1, 7), 2)):
        if i == n * k:
            break
        dpsa_update(st, StreamUpdate(INSERT, Edge(u, v)))
        sh.insert(Edge(u, v))
    assert st.live == n * k
    assert dpsa_query(st, k).kind == oracle_vc(sh.edges(), k).kind
