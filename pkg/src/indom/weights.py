"""Degree-sensitive vertex weights and the cost of deleting a vertex set."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SubcubicGraph, VertexLike, VertexSet, XIsFullVertexSet, delete_vertices, iter_bits

#: Weight of a vertex indexed by its degree.
DEGREE_WEIGHT = (8, 5, 4, 3)


@dataclass(frozen=True)
class DegreeProfile:
    n0: int
    n1: int
    n2: int
    n3: int

    @property
    def n(self) -> int:
        return self.n0 + self.n1 + self.n2 + self.n3

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3)

    def weight(self) -> int:
        return 8 * self.n0 + 5 * self.n1 + 4 * self.n2 + 3 * self.n3


def degree_profile(G: SubcubicGraph) -> DegreeProfile:
    counts = [0, 0, 0, 0]
    for row in G.adj:
        counts[len(row)] += 1
    return DegreeProfile(*counts)


def vertex_weight(G: SubcubicGraph, v: int) -> int:
    return DEGREE_WEIGHT[len(G.adj[v])]


def graph_weight(G: SubcubicGraph) -> int:
    return sum(DEGREE_WEIGHT[len(row)] for row in G.adj)


def set_weight(G: SubcubicGraph, X: VertexLike) -> int:
    return sum(DEGREE_WEIGHT[len(G.adj[v])] for v in G.vertex_set(X))


def _proper_mask(G: SubcubicGraph, X: VertexLike) -> int:
    mask = G.mask_of(X)
    if mask == G.all_mask():
        raise XIsFullVertexSet("X must be a proper subset of V(G)")
    return mask


def exit_edge_count(G: SubcubicGraph, X: VertexLike) -> int:
    """Number of edges joining ``X`` to its complement."""
    mask = _proper_mask(G, X)
    nbr = G.nbr_masks
    return sum(bin(nbr[v] & ~mask).count("1") for v in iter_bits(mask))


def removal_cost(G: SubcubicGraph, X: VertexLike) -> int:
    """Total weight increase, over the surviving vertices, caused by deleting ``X``.

    Computed directly from the definition (it is *not* derived from the exit
    edge count), so the two can be checked against each other.
    """
    mask = _proper_mask(G, X)
    H, mapping = delete_vertices(G, VertexSet(G.n, mask))
    return sum(vertex_weight(H, new) - vertex_weight(G, old) for old, new in mapping.items())

