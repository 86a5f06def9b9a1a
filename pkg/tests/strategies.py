"""Hypothesis strategies for subcubic graphs."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from indom.graph import SubcubicGraph


@st.composite
def subcubic_graphs(draw, min_n: int = 1, max_n: int = 10, isolate_free: bool = False) -> SubcubicGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    order = draw(st.permutations(pairs)) if pairs else []
    keep = draw(st.lists(st.booleans(), min_size=len(order), max_size=len(order)))
    deg = [0] * n
    edges = []
    for (u, v), k in zip(order, keep):
        if k and deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    if isolate_free:
        for v in range(n):
            if deg[v] == 0:
                for w in range(n):
                    if w != v and deg[w] < 3 and (min(v, w), max(v, w)) not in edges:
                        edges.append((min(v, w), max(v, w)))
                        deg[v] += 1
                        deg[w] += 1
                        break
    return SubcubicGraph(n, edges)


@st.composite
def graph_and_proper_subset(draw, max_n: int = 10, isolate_free: bool = False):
    G = draw(subcubic_graphs(min_n=2 if isolate_free else 1, max_n=max_n, isolate_free=isolate_free))
    members = draw(st.lists(st.booleans(), min_size=G.n, max_size=G.n))
    X = [v for v, b in enumerate(members) if b]
    if len(X) == G.n:
        X = X[1:]
    return G, X
