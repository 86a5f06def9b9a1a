"""Canonical labelling by colour refinement and individualisation.

The search explores the individualisation tree, keeps the leaf whose
relabelled adjacency is lexicographically largest, and prunes sibling
subtrees with automorphisms discovered on the way (only generators that
fix the current prefix pointwise are used, so pruning is always sound).
"""

from __future__ import annotations

from .graph import GraphError, SubcubicGraph
from .graph6 import encode_graph6

MAX_CANON_N = 64


class TooLarge(GraphError):
    pass


def refine(adj: tuple[tuple[int, ...], ...], colour: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colour``.

    Colours are cell start positions, so the result is an ordered partition
    that depends only on the isomorphism type of the coloured graph.
    """
    n = len(adj)
    cells = len(set(colour))
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in range(n)]
        order = sorted(range(n), key=sig.__getitem__)
        new = [0] * n
        start = 0
        for pos, v in enumerate(order):
            if pos and sig[v] != sig[order[pos - 1]]:
                start = pos
            new[v] = start
        count = len(set(new))
        colour = new
        if count == cells:
            return colour
        cells = count


def _target_cell(colour: list[int]) -> list[int]:
    """Vertices of the first non-singleton cell (lowest colour)."""
    by_colour: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        by_colour.setdefault(c, []).append(v)
    for c in sorted(by_colour):
        if len(by_colour[c]) > 1:
            return by_colour[c]
    return []


def _individualise(colour: list[int], v: int) -> list[int]:
    c = colour[v]
    out = [x + 1 if x == c else x for x in colour]
    out[v] = c
    return out


class _Orbits:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Canon:
    def __init__(self, G: SubcubicGraph) -> None:
        self.G = G
        self.adj = G.adj
        self.n = G.n
        self.best_key: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.autos: list[list[int]] = []

    def leaf_key(self, perm: list[int]) -> tuple[int, ...]:
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            pv = perm[v]
            m = 0
            for u in row:
                m |= 1 << (self.n - 1 - perm[u])
            rows[pv] = m
        return tuple(rows)

    def search(self, colour: list[int], prefix: list[int]) -> None:
        cell = _target_cell(colour)
        if not cell:
            key = self.leaf_key(colour)
            if self.best_key is None or key > self.best_key:
                self.best_key, self.best_perm = key, colour
            elif key == self.best_key:
                # colour o best^-1 maps the graph onto itself
                inv = [0] * self.n
                for v, p in enumerate(self.best_perm):
                    inv[p] = v
                auto = [inv[colour[v]] for v in range(self.n)]
                if any(auto[v] != v for v in range(self.n)):
                    self.autos.append(auto)
            return
        done: list[int] = []
        for v in cell:
            if done and self._same_orbit(v, done, prefix):
                continue
            done.append(v)
            self.search(refine(self.adj, _individualise(colour, v)), prefix + [v])

    def _same_orbit(self, v: int, done: list[int], prefix: list[int]) -> bool:
        orbits = _Orbits(self.n)
        for a in self.autos:
            if all(a[p] == p for p in prefix):
                for x in range(self.n):
                    orbits.union(x, a[x])
        rv = orbits.find(v)
        return any(orbits.find(d) == rv for d in done)


def canonical_labelling(G: SubcubicGraph) -> list[int]:
    """Permutation ``perm`` with ``G.relabel(perm)`` canonical for the isomorphism class."""
    if G.n > MAX_CANON_N:
        raise TooLarge(f"canonical labelling supports n <= {MAX_CANON_N}")
    if G.n == 0:
        return []
    c = _Canon(G)
    c.search(refine(G.adj, [0] * G.n), [])
    assert c.best_perm is not None
    return list(c.best_perm)


def canonical_form(G: SubcubicGraph) -> bytes:
    """Relabel-invariant certificate: graph6 bytes of the canonical relabelling.

    Raises:
        TooLarge: for graphs with more than 64 vertices.
    """
    perm = canonical_labelling(G)
    H = SubcubicGraph(G.n, [(perm[u], perm[v]) for u, v in G.edges])
    return encode_graph6(H).encode("ascii")


def canonical_graph(G: SubcubicGraph) -> SubcubicGraph:
    perm = canonical_labelling(G)
    return SubcubicGraph(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def are_isomorphic(G: SubcubicGraph, H: SubcubicGraph) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


__all__ = ["TooLarge", "are_isomorphic", "canonical_form", "canonical_graph", "canonical_labelling", "refine"]
