"""Immutable subcubic graphs and bitmask vertex sets.

Vertices are the dense indices ``0..n-1``.  Every "modified" graph is a new
value; nothing here mutates a graph after construction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_DEGREE = 3

#: Returned by :func:`girth` for forests.
ACYCLIC = math.inf


class GraphError(ValueError):
    """Base class for graph construction and argument errors."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DegreeExceedsThree(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class XIsFullVertexSet(GraphError):
    """Raised when an operation needs a proper subset of the vertices."""


class NotConnected(GraphError):
    pass


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of an ``n``-vertex graph, stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise VertexOutOfRange(f"mask {self.mask:#x} has members >= {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} not in range(0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


VertexLike = Union[VertexSet, Iterable[int]]


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SubcubicGraph:
    """Simple undirected graph with maximum degree at most three.

    Use :func:`build_graph` (or :meth:`from_edges`) to construct one; the
    constructor validates every invariant.
    """

    __slots__ = ("n", "adj", "labels", "_nbr", "_edges", "_key")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside range(0, {n})")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge {key} given twice")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        for v, row in enumerate(nbrs):
            if len(row) > MAX_DEGREE:
                raise DegreeExceedsThree(f"vertex {v} has degree {len(row)}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("one label per vertex required")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(r)) for r in nbrs)
        self.labels: tuple[str, ...] | None = labels
        self._nbr = tuple(sum(1 << u for u in r) for r in self.adj)
        self._edges = tuple(sorted(seen))
        self._key = (n, self._edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "SubcubicGraph":
        return cls(n, edges, labels)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def nbr_masks(self) -> tuple[int, ...]:
        """Open-neighbourhood bitmask of every vertex."""
        return self._nbr

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_mask(self, v: int) -> int:
        return self._nbr[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._nbr[u] >> v & 1)

    def vertex_set(self, vertices: VertexLike) -> VertexSet:
        if isinstance(vertices, VertexSet):
            if vertices.n != self.n:
                raise VertexOutOfRange("vertex set belongs to a graph of another order")
            return vertices
        return VertexSet.of(self.n, vertices)

    def mask_of(self, vertices: VertexLike) -> int:
        return self.vertex_set(vertices).mask

    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def is_cubic(self) -> bool:
        return all(len(r) == 3 for r in self.adj)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    # -- derived graphs ------------------------------------------------

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "SubcubicGraph":
        """``G + e`` for every ``e`` in ``extra``."""
        return SubcubicGraph(self.n, list(self._edges) + list(extra), self.labels)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "SubcubicGraph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        missing = drop.difference(self._edges)
        if missing:
            raise GraphError(f"edges not in graph: {sorted(missing)}")
        return SubcubicGraph(self.n, [e for e in self._edges if e not in drop], self.labels)

    def relabel(self, perm: Sequence[int]) -> "SubcubicGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation")
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v, p in enumerate(perm):
                labels[p] = self.labels[v]
        return SubcubicGraph(self.n, [(perm[u], perm[v]) for u, v in self._edges], labels)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubcubicGraph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SubcubicGraph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> SubcubicGraph:
    """Validate and construct a subcubic graph.

    Raises:
        LoopEdge, DuplicateEdge, DegreeExceedsThree, VertexOutOfRange.
    """
    return SubcubicGraph(n, edges, labels)


def disjoint_union(*graphs: SubcubicGraph, prefixes: Sequence[str] | None = None) -> SubcubicGraph:
    """Disjoint union; the vertices of ``graphs[j]`` follow those of ``graphs[:j]``."""
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    offset = 0
    for j, g in enumerate(graphs):
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        pre = prefixes[j] if prefixes is not None else ""
        labels.extend(pre + g.label(v) for v in range(g.n))
        offset += g.n
    keep_labels = prefixes is not None or any(g.labels is not None for g in graphs)
    return SubcubicGraph(offset, edges, labels if keep_labels else None)


def induced_subgraph(G: SubcubicGraph, vertices: VertexLike) -> tuple[SubcubicGraph, list[int]]:
    """``G[S]`` together with the list mapping new indices to old ones."""
    keep = G.vertex_set(vertices).sorted()
    new_index = {v: i for i, v in enumerate(keep)}
    edges = [(new_index[u], new_index[v]) for u, v in G.edges if u in new_index and v in new_index]
    labels = [G.labels[v] for v in keep] if G.labels is not None else None
    return SubcubicGraph(len(keep), edges, labels), keep


def delete_vertices(G: SubcubicGraph, S: VertexLike) -> tuple[SubcubicGraph, dict[int, int]]:
    """``G - S``; the map sends each surviving old index to its new index."""
    mask = G.mask_of(S)
    sub, keep = induced_subgraph(G, VertexSet(G.n, G.all_mask() & ~mask))
    return sub, {old: new for new, old in enumerate(keep)}


def edges_between(G: SubcubicGraph, X: VertexLike, Y: VertexLike) -> list[tuple[int, int]]:
    """The edge set ``[X, Y]``, each edge once, as sorted pairs."""
    xm, ym = G.mask_of(X), G.mask_of(Y)
    out = []
    for u, v in G.edges:
        if (xm >> u & 1 and ym >> v & 1) or (xm >> v & 1 and ym >> u & 1):
            out.append((u, v))
    return out


def components(G: SubcubicGraph) -> list[VertexSet]:
    """Connected components ordered by their smallest vertex."""
    comps = []
    left = G.all_mask()
    nbr = G.nbr_masks
    while left:
        frontier = left & -left
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= nbr[v]
            frontier = nxt & ~comp
        comps.append(VertexSet(G.n, comp))
        left &= ~comp
    return comps


def component_masks(G: SubcubicGraph, within: int) -> list[int]:
    """Components of ``G[within]`` as bitmasks."""
    out = []
    nbr = G.nbr_masks
    left = within
    while left:
        frontier = left & -left
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= nbr[v]
            frontier = nxt & within & ~comp
        out.append(comp)
        left &= ~comp
    return out


def is_connected(G: SubcubicGraph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def girth(G: SubcubicGraph) -> float:
    """Length of a shortest cycle, or :data:`ACYCLIC`."""
    best = ACYCLIC
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bridges(G: SubcubicGraph) -> set[tuple[int, int]]:
    """Bridges of ``G`` as sorted pairs (iterative Tarjan low-link)."""
    disc = [-1] * G.n
    low = [0] * G.n
    out: set[tuple[int, int]] = set()
    t = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(G.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.add((min(v, parent), max(v, parent)))
    return out
