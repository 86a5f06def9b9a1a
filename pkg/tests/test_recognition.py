from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indom.enumerate import enumerate_cubic
from indom.families import (
    FIVE_UNIT_SPEC,
    BadGraphSpec,
    base_b1,
    build_bad,
    build_troublesome,
    diamond,
    embed_template,
    example_graph,
    k23,
    k33,
    k4,
    prism,
    random_bad_spec,
    random_subcubic,
    template_vertices,
)
from indom.graph import NotConnected, disjoint_union, induced_subgraph
from indom.recognition import (
    count_bad_components,
    find_subgraph,
    find_troublesome,
    is_bad_graph,
    tc,
    troublesome_packing,
    weight_report,
)
from indom.sweeps import random_isolate_free_host

from oracles import count_k23_subgraphs
from strategies import subcubic_graphs


# -- subgraph search ------------------------------------------------------


def test_k23_copies():
    assert len(find_subgraph(k23(), k23())) == 1
    # brute force over vertex bipartitions gives 6 copies in K_{3,3}
    assert count_k23_subgraphs(6, list(k33().edges)) == 6
    assert len(find_subgraph(k33(), k23())) == 6


@settings(max_examples=150, deadline=None)
@given(subcubic_graphs(max_n=11))
def test_k23_count_matches_oracle(G):
    assert len(find_subgraph(G, k23())) == count_k23_subgraphs(G.n, list(G.edges))


def test_embeddings_are_subgraphs():
    G = prism(5)
    P = prism(4).without_edges([(0, 1)])
    for emb in find_subgraph(G, P):
        assert len(set(emb)) == P.n
        assert all(G.has_edge(emb[u], emb[v]) for u, v in P.edges)


def test_diamond_count_in_k4():
    # K4 contains 6 diamonds (drop any one edge)
    assert len(find_subgraph(k4(), diamond())) == 6


# -- bad graphs -----------------------------------------------------------


def test_b1_recognised():
    cls = is_bad_graph(base_b1().graph)
    assert cls and (cls.subfamily, cls.k, cls.root) == (1, 1, 0)


def test_five_unit_graph_recognised():
    A = build_bad(FIVE_UNIT_SPEC)
    cls = is_bad_graph(A.graph)
    assert cls and (cls.subfamily, cls.k) == (2, 5)
    rebuilt = build_bad(cls.spec).graph
    mapped = sorted(tuple(sorted((cls.to_input(u), cls.to_input(v)))) for u, v in rebuilt.edges)
    assert mapped == list(A.graph.edges)


def test_non_bad_graphs():
    for G in (k23(), k33(), prism(5)):
        assert not is_bad_graph(G)
    with pytest.raises(NotConnected):
        is_bad_graph(disjoint_union(k23(), k23()))


def test_negative_reasons():
    B = base_b1().graph
    # extra pendant vertex: wrong order
    from indom.graph import SubcubicGraph

    G = SubcubicGraph(7, list(B.edges) + [(2, 6)])
    assert not is_bad_graph(G) and "5k+1" in is_bad_graph(G).reason
    # two units hanging off a fresh vertex form a star-shaped member of B_2
    two = disjoint_union(k23(), k23(), SubcubicGraph(1, []))
    star = is_bad_graph(two.with_edges([(2, 10), (7, 10)]))
    assert star and (star.subfamily, star.k, star.root) == (2, 2, 10) and star.is_star
    # a chain: the second unit hangs off a small vertex of the first
    chain = is_bad_graph(two.with_edges([(2, 7), (3, 10)]))
    assert chain and (chain.subfamily, chain.k, chain.root) == (1, 2, 10) and not chain.is_star
    # eleven vertices, fourteen edges, but the second unit is a 5-cycle with chords
    C = build_bad(BadGraphSpec(2, (3,))).graph
    moved = C.without_edges([(7, 9)]).with_edges([(7, 8)])
    assert not is_bad_graph(moved)


def test_count_bad_components():
    B = base_b1().graph
    assert count_bad_components(disjoint_union(B, k4())) == 1
    assert count_bad_components(disjoint_union(B, B)) == 2
    for G in enumerate_cubic(8):
        assert count_bad_components(G) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_bad_round_trip_after_relabelling(k, rnd):
    A = build_bad(random_bad_spec(k, rnd))
    perm = list(range(A.graph.n))
    rnd.shuffle(perm)
    G = A.graph.relabel(perm)
    cls = is_bad_graph(G)
    assert cls and (cls.subfamily, cls.k) == (A.subfamily, k)
    assert cls.root == perm[A.root]
    rebuilt = build_bad(cls.spec).graph
    mapped = sorted(tuple(sorted((cls.to_input(u), cls.to_input(v)))) for u, v in rebuilt.edges)
    assert mapped == list(G.edges)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False), st.data())
def test_near_misses_are_rejected(k, rnd, data):
    # dropping or adding one edge leaves the family
    A = build_bad(random_bad_spec(k, rnd))
    G = A.graph
    e = data.draw(st.sampled_from(list(G.edges)))
    H = G.without_edges([e])
    from indom.graph import is_connected

    if is_connected(H):
        assert not is_bad_graph(H)
    free = [v for v in range(G.n) if G.degree(v) < 3]
    pairs = [(a, b) for a in free for b in free if a < b and not G.has_edge(a, b)]
    if pairs:
        a, b = data.draw(st.sampled_from(pairs))
        assert not is_bad_graph(G.with_edges([(a, b)]))


# -- troublesome configurations ----------------------------------------------


def test_fig9a_has_two_disjoint_configurations():
    G = example_graph("fig9a")
    occ = find_troublesome(G)
    assert len(occ) == 2 and tc(G) == 2
    assert not occ[0].vertices.mask & occ[1].vertices.mask
    assert all(o.kind == 2 for o in occ)


@pytest.mark.parametrize("name,expect", [("fig9a", 2), ("fig9b", 2), ("f1", 1), ("f2", 1), ("f3", 1), ("fig11", 2)])
def test_tc_on_examples(name, expect):
    assert tc(example_graph(name)) == expect


def test_f1_occurrences_overlap():
    occ = find_troublesome(example_graph("f1"))
    assert len(occ) >= 1 and tc(example_graph("f1")) == 1


def test_no_configurations_in_cubic_graphs():
    for n in (4, 6, 8, 10):
        for G in enumerate_cubic(n):
            assert find_troublesome(G) == [] and tc(G) == 0


def _check_occurrence(G, o):
    """Independent restatement of the occurrence conditions."""
    V = set(o.vertices)
    v1, v2 = o.link_pair
    assert G.has_edge(v1, v2) and G.has_edge(v2, o.w2)
    for v in V - {v1, v2}:
        assert all(u in V for u in G.neighbors(v))
    exits = o.exit_edges(G)
    assert len(exits) == o.kind
    assert (G.degree(v1) == 2) == (o.kind == 1)
    B, _ = induced_subgraph(G, o.bad_part)
    cls = is_bad_graph(B)
    assert cls and cls.subfamily == 1 and cls.k == o.k
    assert set(o.bad_part) == V - {v2}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_planted_template_is_recalled(seed):
    rng = random.Random(seed)
    kind = rng.choice((1, 2))
    spec = random_bad_spec(rng.randint(1, 3), rng, root_degree=1)
    T = build_troublesome(kind, spec)
    host, v = random_isolate_free_host(rng, max_n=8)
    slots = [u for u in range(host.n) if host.degree(u) <= 2]
    targets = [v] if kind == 1 else rng.sample(slots, 2) if len(slots) >= 2 else None
    if targets is None:
        targets = [v, v] if host.degree(v) <= 1 else None
    if targets is None:
        return
    G = embed_template(host, T, targets)
    planted = template_vertices(host, T)
    occ = find_troublesome(G)
    assert any(o.vertices == planted for o in occ)
    for o in occ:
        _check_occurrence(G, o)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_occurrences_sound_on_random_graphs(seed):
    G = random_subcubic(random.Random(seed).randint(6, 16), random.Random(seed))
    for o in find_troublesome(G):
        _check_occurrence(G, o)


def test_packing_is_disjoint():
    G = example_graph("fig11")
    pack = troublesome_packing(G)
    seen = 0
    for o in pack:
        assert not seen & o.vertices.mask
        seen |= o.vertices.mask
    assert len(pack) == tc(G)


# -- weight report ----------------------------------------------------------


@pytest.mark.parametrize(
    "name,i,w,theta",
    [("fig9a", 6, 44, 4), ("fig9b", 9, 68, 4), ("f1", 5, 38, 2), ("f2", 4, 30, 2), ("f3", 5, 38, 2), ("fig11", 18, 140, 4)],
)
def test_example_reports(name, i, w, theta):
    r = weight_report(example_graph(name))
    assert (r.i, r.w, r.theta, r.omega, r.margin) == (i, w, theta, w + theta, 0)


def test_report_for_bad_graph():
    A = build_bad(BadGraphSpec(3, (0, 3)))
    r = weight_report(A.graph)
    assert (r.w, r.theta, r.omega, r.i, r.margin) == (54, 2, 56, 7, 0)


def test_report_for_three_prism():
    r = weight_report(prism(3))
    assert (r.w, r.theta, r.i, r.margin) == (18, 0, 2, 2)


def test_report_json_schema():
    data = weight_report(k23()).to_json()
    assert set(data) == {
        "n", "n0", "n1", "n2", "n3", "w", "b", "tc", "theta", "omega", "i", "gamma", "margin", "certificates",
    }
    assert data["certificates"]["i"] == sorted(data["certificates"]["i"])
    json.dumps(data)


@settings(max_examples=100, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_report_identities(G):
    r = weight_report(G)
    assert r.theta == 2 * r.tc + 2 * r.b
    assert r.omega == r.w + r.theta
    assert r.margin == r.omega - 8 * r.i
    assert r.gamma <= r.i
    if G.is_cubic():
        assert r.theta == 0 and r.omega == 3 * G.n
