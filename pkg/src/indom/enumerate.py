"""Isomorphism-free generation of connected cubic and connected subcubic graphs.

Cubic graphs of order ``n`` are grown by two operations: edge insertion
(subdivide two distinct edges of a graph of order ``n - 2`` and join the two
new vertices) and diamond insertion (replace an edge of a graph of order
``n - 4`` by a path through a copy of K_4 minus an edge).  Edge insertion
also runs on two-component parents, so children that only reduce to
disconnected graphs are still reached; diamond insertion covers graphs in
which every edge reduction would create a parallel edge.  Subcubic graphs grow by
adding one vertex joined to one, two or three vertices of degree at most 2.
Duplicates are removed by canonical form, and output is sorted by it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import TooLarge, canonical_form, canonical_graph
from .graph import GraphError, SubcubicGraph, disjoint_union, is_connected

MAX_CUBIC_N = 14
MAX_SUBCUBIC_N = 10


class OddOrder(GraphError):
    pass


def insert_edge(G: SubcubicGraph, e: tuple[int, int], f: tuple[int, int]) -> SubcubicGraph:
    """Subdivide ``e`` and ``f`` by new vertices ``n`` and ``n+1`` and join them."""
    a, b = G.n, G.n + 1
    keep = [x for x in G.edges if x != e and x != f]
    keep += [(e[0], a), (a, e[1]), (f[0], b), (b, f[1]), (a, b)]
    return SubcubicGraph(G.n + 2, keep)


def insert_diamond(G: SubcubicGraph, e: tuple[int, int]) -> SubcubicGraph:
    """Replace ``e = xy`` by ``x - p``, ``q - y`` where ``p, q`` are the degree-2 tips of a new diamond."""
    p, s1, s2, q = range(G.n, G.n + 4)
    keep = [x for x in G.edges if x != e]
    keep += [(e[0], p), (q, e[1]), (p, s1), (p, s2), (s1, s2), (q, s1), (q, s2)]
    return SubcubicGraph(G.n + 4, keep)


def _check_cubic_order(n: int) -> None:
    if n % 2:
        raise OddOrder(f"cubic graphs have even order, got {n}")
    if n < 4 or n > MAX_CUBIC_N:
        raise TooLarge(f"cubic enumeration supports 4 <= n <= {MAX_CUBIC_N}")


def _cubic_parents(n: int) -> list[SubcubicGraph]:
    """All cubic graphs of order ``n`` with at most two components."""
    if n < 4:
        return []
    parents = list(_connected_cubic(n))
    for a in range(4, n // 2 + 1, 2):
        b = n - a
        if b < 4:
            continue
        left, right = _connected_cubic(a), _connected_cubic(b)
        for i, G in enumerate(left):
            for j, H in enumerate(right):
                if a == b and j < i:
                    continue
                parents.append(disjoint_union(G, H))
    return parents


def _children(P: SubcubicGraph, reverse: bool) -> Iterator[SubcubicGraph]:
    pairs = list(combinations(P.edges, 2))
    if reverse:
        pairs.reverse()
    for e, f in pairs:
        yield insert_edge(P, e, f)


def _diamond_children(P: SubcubicGraph, reverse: bool) -> Iterator[SubcubicGraph]:
    edges = list(P.edges)
    if reverse:
        edges.reverse()
    for e in edges:
        yield insert_diamond(P, e)


def _grow_cubic(
    parents: list[SubcubicGraph],
    small_parents: list[SubcubicGraph],
    reverse: bool = False,
) -> dict[bytes, SubcubicGraph]:
    out: dict[bytes, SubcubicGraph] = {}
    jobs = [(P, _children) for P in parents] + [(P, _diamond_children) for P in small_parents]
    if reverse:
        jobs.reverse()
    for P, grow in jobs:
        for C in grow(P, reverse):
            if not is_connected(C):
                continue
            key = canonical_form(C)
            if key not in out:
                out[key] = C
    return out


def _diamond_parents(n: int) -> list[SubcubicGraph]:
    return list(_connected_cubic(n - 4)) if n - 4 >= 4 else []


@lru_cache(maxsize=None)
def _connected_cubic(n: int) -> tuple[SubcubicGraph, ...]:
    if n == 4:
        K4 = SubcubicGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        return (K4,)
    found = _grow_cubic(_cubic_parents(n - 2), _diamond_parents(n))
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def enumerate_cubic(n: int) -> Iterator[SubcubicGraph]:
    """One graph per isomorphism class of connected cubic graphs of order ``n``.

    Graphs are canonically labelled and yielded in canonical-form order.

    Raises:
        OddOrder: for odd ``n``.
        TooLarge: outside ``4 <= n <= 14``.
    """
    _check_cubic_order(n)
    yield from _connected_cubic(n)


def enumerate_cubic_shard(n: int, shard: int, shards: int, reverse: bool = False) -> dict[bytes, SubcubicGraph]:
    """Children of the parents with index ``= shard (mod shards)``; merge shards by key."""
    _check_cubic_order(n)
    if not 0 <= shard < shards:
        raise ValueError("shard index out of range")
    if n == 4:
        G = next(enumerate_cubic(4))
        return {canonical_form(G): G} if shard == 0 else {}
    parents = _cubic_parents(n - 2)
    small = _diamond_parents(n)
    mine = [P for j, P in enumerate(parents) if j % shards == shard]
    mine_small = [P for j, P in enumerate(small) if (j + len(parents)) % shards == shard]
    return _grow_cubic(mine, mine_small, reverse=reverse)


def _grow_subcubic(parents: tuple[SubcubicGraph, ...]) -> dict[bytes, SubcubicGraph]:
    out: dict[bytes, SubcubicGraph] = {}
    for P in parents:
        slots = [v for v in range(P.n) if P.degree(v) <= 2]
        new = P.n
        for size in (1, 2, 3):
            for nbrs in combinations(slots, size):
                C = SubcubicGraph(P.n + 1, list(P.edges) + [(v, new) for v in nbrs])
                key = canonical_form(C)
                if key not in out:
                    out[key] = C
    return out


@lru_cache(maxsize=None)
def _connected_subcubic(n: int) -> tuple[SubcubicGraph, ...]:
    if n == 1:
        return (SubcubicGraph(1, []),)
    found = _grow_subcubic(_connected_subcubic(n - 1))
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def enumerate_subcubic_connected(n: int) -> Iterator[SubcubicGraph]:
    """One graph per isomorphism class of connected graphs of order ``n`` with maximum degree 3.

    Raises:
        TooLarge: outside ``1 <= n <= 10``.
    """
    if n < 1 or n > MAX_SUBCUBIC_N:
        raise TooLarge(f"subcubic enumeration supports 1 <= n <= {MAX_SUBCUBIC_N}")
    yield from _connected_subcubic(n)


__all__ = [
    "OddOrder",
    "TooLarge",
    "enumerate_cubic",
    "enumerate_cubic_shard",
    "enumerate_subcubic_connected",
    "insert_edge",
]
