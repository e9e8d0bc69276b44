"""Insertion-only streaming vertex cover."""

import random

from vcstream.core import Edge, ShadowGraph, StreamUpdate, covers, INSERT
from vcstream.psa import PsaState, psa_insert, psa_query
from vcstream.harness.oracles import oracle_vc


def replay(edges, k):
    st = PsaState(k=k)
    for e in edges:
        psa_insert(st, e)
    return st


def test_first_edge_matches():
    st = replay([Edge(1, 2)], 2)
    assert st.matching == {Edge(1, 2)}


def test_three_disjoint_edges_kill_k2():
    st = replay([Edge(1, 2), Edge(3, 4), Edge(5, 6)], 2)
    assert st.dead
    assert psa_query(st, 2).is_no
    assert st.stored_edges() == set()


def test_star_caps_stored_edges():
    # center 1 matched by (1,2); cap holds matching edge + k witnesses
    k = 3
    st = replay([Edge(1, j) for j in range(2, 2 + k + 3)], k)
    assert st.matching == {Edge(1, 2)}
    center = st.stored[1]
    assert len(center) == k + 1
    assert sum(1 for e in center if e not in st.matching) == k


def test_fresh_query_k0():
    assert psa_query(PsaState(k=0), 0).is_yes


def test_triangle_k1_is_no():
    # with a cap of only k stored edges this instance answers wrongly
    st = replay([Edge(1, 2), Edge(1, 3), Edge(2, 3)], 1)
    assert psa_query(st, 1).is_no
    assert oracle_vc([Edge(1, 2), Edge(1, 3), Edge(2, 3)], 1).is_no


def _random_insertion_stream(rng, n, length):
    seen = set()
    out = []
    while len(out) < length:
        u, v = rng.sample(range(1, n + 1), 2)
        e = Edge(u, v)
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def test_anytime_oracle_equality():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(4, 18)
        k = rng.randint(0, 5)
        st = PsaState(k=k)
        sh = ShadowGraph(n)
        length = rng.randint(1, min(30, n * (n - 1) // 2))
        for e in _random_insertion_stream(rng, n, length):
            sh.apply(StreamUpdate(INSERT, e))
            psa_insert(st, e)
            ans = psa_query(st, k)
            oracle = oracle_vc(sh.edges(), k)
            assert ans.kind == oracle.kind
            if ans.is_yes:
                assert len(ans.cover) <= k
                assert covers(ans.cover, sh.edges())


def test_once_no_always_no():
    rng = random.Random(9)
    for _ in range(30):
        n, k = 12, rng.randint(1, 3)
        st = PsaState(k=k)
        went_no = False
        for e in _random_insertion_stream(rng, n, 25):
            psa_insert(st, e)
            if went_no:
                assert psa_query(st, k).is_no
            elif psa_query(st, k).is_no:
                went_no = True


def test_determinism():
    edges = _random_insertion_stream(random.Random(4), 10, 20)
    a, b = replay(edges, 3), replay(edges, 3)
    assert a.matching == b.matching
    assert a.stored == b.stored
    assert a.dead == b.dead


def test_space_bounds_each_step():
    rng = random.Random(6)
    for _ in range(40):
        n, k = 16, rng.randint(1, 5)
        st = PsaState(k=k)
        for e in _random_insertion_stream(rng, n, 40):
            psa_insert(st, e)
            if st.dead:
                assert not st.stored
                continue
            non_matching = {e for e in st.stored_edges()
                            if e not in st.matching}
            assert len(non_matching) <= 2 * k * k
            assert len(st.matched) <= 2 * k
