"""Structural detectors: small-pattern search, bad-graph membership,
troublesome configurations and the structural weights."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from .families import BadGraphSpec, build_bad, validate_spec
from .graph import (
    NotConnected,
    SubcubicGraph,
    VertexSet,
    bridges,
    component_masks,
    components,
    induced_subgraph,
    is_connected,
    iter_bits,
    popcount,
)
from .solver import domination_number, independent_domination_number
from .weights import DegreeProfile, degree_profile, graph_weight

# ---------------------------------------------------------------------------
# subgraph search


def _pattern_order(P: SubcubicGraph) -> list[int]:
    """Match order: each vertex after the first is adjacent to an earlier one when possible."""
    order: list[int] = []
    placed = 0
    remaining = set(range(P.n))
    while remaining:
        start = max(remaining, key=lambda v: (P.degree(v), -v))
        frontier = [start]
        while frontier:
            v = max(frontier, key=lambda u: (popcount(P.nbr_masks[u] & placed), P.degree(u), -u))
            frontier.remove(v)
            if v not in remaining:
                continue
            order.append(v)
            placed |= 1 << v
            remaining.discard(v)
            frontier.extend(u for u in P.neighbors(v) if u in remaining and u not in frontier)
    return order


def find_subgraph(G: SubcubicGraph, pattern: SubcubicGraph) -> list[tuple[int, ...]]:
    """Subgraph (not necessarily induced) copies of ``pattern`` in ``G``.

    One embedding per copy, where a copy is its image edge set on its image
    vertex set; ``emb[p]`` is the host vertex playing pattern vertex ``p``.
    Embeddings are returned in lexicographic order.
    """
    P = pattern
    if P.n == 0:
        return [()]
    if P.n > G.n or P.m > G.m:
        return []
    order = _pattern_order(P)
    back = [[u for u in P.neighbors(v) if order.index(u) < pos] for pos, v in enumerate(order)]
    emb = [-1] * P.n
    used = 0
    seen: set[tuple[int, frozenset]] = set()
    found: list[tuple[int, ...]] = []

    def extend(pos: int) -> None:
        nonlocal used
        if pos == len(order):
            vm = sum(1 << x for x in emb)
            edges = frozenset((min(emb[a], emb[b]), max(emb[a], emb[b])) for a, b in P.edges)
            key = (vm, edges)
            if key not in seen:
                seen.add(key)
                found.append(tuple(emb))
            return
        p = order[pos]
        need = P.degree(p)
        if back[pos]:
            cand = G.nbr_masks[emb[back[pos][0]]]
            for q in back[pos][1:]:
                cand &= G.nbr_masks[emb[q]]
        else:
            cand = G.all_mask()
        cand &= ~used
        for x in iter_bits(cand):
            if G.degree(x) < need:
                continue
            emb[p] = x
            used |= 1 << x
            extend(pos + 1)
            used &= ~(1 << x)
        emb[p] = -1

    extend(0)
    found.sort()
    return found


def contains_subgraph(G: SubcubicGraph, pattern: SubcubicGraph) -> bool:
    return bool(find_subgraph(G, pattern))


# ---------------------------------------------------------------------------
# bad-graph membership


@dataclass(frozen=True)
class NotBad:
    """Negative answer of :func:`is_bad_graph`, with the first failed test."""

    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class BadClassification:
    """A recognised bad graph.

    ``placement[c]`` is the vertex of the input graph that plays
    construction-order vertex ``c`` of ``build_bad(spec)``.
    """

    subfamily: int
    k: int
    root: int
    spec: BadGraphSpec
    placement: tuple[int, ...]

    @property
    def is_star(self) -> bool:
        """All units hang directly off the root (the shape with ``k`` equal to the root degree)."""
        return self.k == self.subfamily

    def to_input(self, c: int) -> int:
        return self.placement[c]


def _is_unit(G: SubcubicGraph, mask: int) -> tuple[list[int], list[int]] | None:
    """Split a five-vertex K_{2,3} into (small, large) sides using edges inside ``mask``."""
    if popcount(mask) != 5:
        return None
    verts = list(iter_bits(mask))
    inner = {v: G.nbr_masks[v] & mask for v in verts}
    large = [v for v in verts if popcount(inner[v]) == 3]
    small = [v for v in verts if popcount(inner[v]) == 2]
    if len(large) != 2 or len(small) != 3:
        return None
    lm = (1 << large[0]) | (1 << large[1])
    if any(inner[v] != lm for v in small):
        return None
    return small, large


def is_bad_graph(G: SubcubicGraph) -> BadClassification | NotBad:
    """Decide membership of a connected graph in the bad family by peeling units.

    Raises:
        NotConnected: if ``G`` is not connected.
    """
    if not is_connected(G):
        raise NotConnected("is_bad_graph expects a connected graph")
    n = G.n
    if n < 6 or n % 5 != 1:
        return NotBad("order is not 5k+1")
    k = (n - 1) // 5
    if G.m != 7 * k:
        return NotBad("size is not 7k")
    br = bridges(G)
    on_bridge_only = [v for v in range(n) if all((min(v, u), max(v, u)) in br for u in G.neighbors(v))]
    if len(on_bridge_only) != 1:
        return NotBad(f"{len(on_bridge_only)} vertices lie on no cycle")
    root = on_bridge_only[0]
    if len(br) != k:
        return NotBad("bridge count differs from unit count")

    # units are the bridgeless pieces other than the root
    cut = G.without_edges(br)
    pieces = [m for m in component_masks(cut, cut.all_mask() & ~(1 << root))]
    if len(pieces) != k:
        return NotBad("wrong number of bridgeless pieces")
    unit_of = [-1] * n
    sides: list[tuple[list[int], list[int]]] = []
    for j, m in enumerate(pieces):
        split = _is_unit(cut, m)
        if split is None:
            return NotBad("a bridgeless piece is not K_{2,3}")
        sides.append(split)
        for v in iter_bits(m):
            unit_of[v] = j
    for u, v in br:
        for x in (u, v):
            if x != root and x not in sides[unit_of[x]][0]:
                return NotBad("a bridge ends at a large vertex")

    # peel pendant units, smallest minimum index first
    alive = set(range(k))
    active = set(br)
    peel: list[tuple[int, tuple[int, int]]] = []
    while len(alive) > 1:
        pendant = []
        for j in alive:
            touching = [e for e in active if unit_of[e[0]] == j or unit_of[e[1]] == j]
            if len(touching) == 1:
                pendant.append((min(iter_bits(pieces[j])), j, touching[0]))
        if not pendant:
            return NotBad("no pendant unit")
        _, j, e = min(pendant)
        alive.remove(j)
        active.remove(e)
        peel.append((j, e))
    last = alive.pop()
    if len(active) != 1:
        return NotBad("peeling does not end at the base graph")
    final_edge = next(iter(active))
    if root not in final_edge:
        return NotBad("last unit is not joined to the root")
    peel.append((last, final_edge))

    # rebuild in construction order and compare
    placement = [root]
    new_index = {root: 0}
    attachments: list[int] = []
    for step, (j, (a, b)) in enumerate(reversed(peel)):
        inside, outside = (a, b) if unit_of[a] == j else (b, a)
        if outside not in new_index:
            return NotBad("bridge target not yet built")
        if step:
            attachments.append(new_index[outside])
        small, large = sides[j]
        others = sorted(s for s in small if s != inside)
        for v in [inside] + others + sorted(large):
            new_index[v] = len(placement)
            placement.append(v)
    spec = BadGraphSpec(k, tuple(attachments))
    try:
        validate_spec(spec)
    except ValueError as exc:
        return NotBad(f"recovered construction is invalid: {exc}")
    rebuilt = build_bad(spec).graph
    mapped = sorted((min(placement[u], placement[v]), max(placement[u], placement[v])) for u, v in rebuilt.edges)
    if mapped != list(G.edges):
        return NotBad("recovered construction does not reproduce the graph")
    return BadClassification(G.degree(root), k, root, spec, tuple(placement))


def count_bad_components(G: SubcubicGraph) -> int:
    total = 0
    for comp in components(G):
        H, _ = induced_subgraph(G, comp)
        if is_bad_graph(H):
            total += 1
    return total


# ---------------------------------------------------------------------------
# troublesome configurations


@dataclass(frozen=True)
class TroublesomeOccurrence:
    """A troublesome configuration inside a host graph.

    ``vertices`` is the whole configuration, ``bad_part`` the member of B_1
    (rooted at ``v1``) it is built from.  One vertex set can admit several
    link pairs (the two links of a symmetric fragment may swap roles); the
    smallest is ``link_pair`` and ``link_pairs`` lists them all.
    """

    vertices: VertexSet
    link_pair: tuple[int, int]
    kind: int
    k: int
    w2: int
    bad_part: VertexSet = field(compare=False)
    link_pairs: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def v1(self) -> int:
        return self.link_pair[0]

    @property
    def v2(self) -> int:
        return self.link_pair[1]

    def exit_edges(self, G: SubcubicGraph) -> list[tuple[int, int]]:
        mask = self.vertices.mask
        out = []
        for v in (self.v1, self.v2):
            for u in G.neighbors(v):
                if not mask >> u & 1:
                    out.append((min(u, v), max(u, v)))
        return sorted(out)


def _b1_rooted_at(G: SubcubicGraph, X: int, v1: int) -> BadClassification | None:
    H, keep = induced_subgraph(G, VertexSet(G.n, X))
    if not is_connected(H):
        return None
    cls = is_bad_graph(H)
    if not cls or cls.subfamily != 1 or keep[cls.root] != v1:
        return None
    return cls


def find_troublesome(G: SubcubicGraph) -> list[TroublesomeOccurrence]:
    """Every troublesome configuration of ``G``, one per vertex set, sorted by vertex mask."""
    found: dict[int, TroublesomeOccurrence] = {}
    links: dict[int, list[tuple[int, int]]] = {}
    nbr = G.nbr_masks
    for v1 in range(G.n):
        if G.degree(v1) < 2:
            continue
        for v2 in G.neighbors(v1):
            if G.degree(v2) != 3:
                continue
            rest = G.all_mask() & ~(1 << v1) & ~(1 << v2)
            for b in G.neighbors(v1):
                if b == v2:
                    continue
                comp = next(c for c in component_masks(G, rest) if c >> b & 1)
                X = comp | 1 << v1
                size = popcount(X)
                if size < 6 or size % 5 != 1:
                    continue
                # v1 keeps one edge to B; any other edge of v1 leaves the configuration
                if popcount(nbr[v1] & comp) != 1:
                    continue
                into = nbr[v2] & comp
                if popcount(into) != 1:
                    continue
                w2 = into.bit_length() - 1
                if popcount(nbr[w2] & X) != 2:
                    continue
                cls = _b1_rooted_at(G, X, v1)
                if cls is None:
                    continue
                T = X | 1 << v2
                kind = 1 if G.degree(v1) == 2 else 2
                links.setdefault(T, [])
                if (v1, v2) not in links[T]:
                    links[T].append((v1, v2))
                if T not in found or (v1, v2) < found[T].link_pair:
                    found[T] = TroublesomeOccurrence(
                        VertexSet(G.n, T), (v1, v2), kind, cls.k, w2, VertexSet(G.n, X)
                    )
    out = []
    for T in sorted(found):
        occ = found[T]
        out.append(replace(occ, link_pairs=tuple(sorted(links[T]))))
    return out


def _max_packing(masks: list[int]) -> list[int]:
    """Indices of a maximum family of pairwise disjoint masks (exact search)."""
    masks_sorted = sorted(range(len(masks)), key=lambda j: popcount(masks[j]))
    best: list[int] = []

    def go(pos: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen[:]
        if len(chosen) + len(masks_sorted) - pos <= len(best):
            return
        for q in range(pos, len(masks_sorted)):
            j = masks_sorted[q]
            if not masks[j] & used:
                chosen.append(j)
                go(q + 1, used | masks[j], chosen)
                chosen.pop()

    go(0, 0, [])
    return sorted(best)


def tc(G: SubcubicGraph, occurrences: list[TroublesomeOccurrence] | None = None) -> int:
    """Maximum number of pairwise vertex-disjoint troublesome configurations."""
    occ = find_troublesome(G) if occurrences is None else occurrences
    return len(_max_packing([o.vertices.mask for o in occ]))


def troublesome_packing(G: SubcubicGraph) -> list[TroublesomeOccurrence]:
    occ = find_troublesome(G)
    return [occ[j] for j in _max_packing([o.vertices.mask for o in occ])]


# ---------------------------------------------------------------------------
# weight report


@dataclass(frozen=True)
class WeightReport:
    profile: DegreeProfile
    w: int
    b: int
    tc: int
    theta: int
    omega: int
    i: int
    gamma: int
    i_certificate: VertexSet
    gamma_certificate: VertexSet

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def margin(self) -> int:
        """``Omega - 8 i``; negative means the bound fails."""
        return self.omega - 8 * self.i

    def to_json(self) -> dict[str, Any]:
        p = self.profile
        return {
            "n": p.n,
            "n0": p.n0,
            "n1": p.n1,
            "n2": p.n2,
            "n3": p.n3,
            "w": self.w,
            "b": self.b,
            "tc": self.tc,
            "theta": self.theta,
            "omega": self.omega,
            "i": self.i,
            "gamma": self.gamma,
            "margin": self.margin,
            "certificates": {
                "i": self.i_certificate.sorted(),
                "gamma": self.gamma_certificate.sorted(),
            },
        }


def structural_weight(G: SubcubicGraph) -> int:
    return 2 * tc(G) + 2 * count_bad_components(G)


def weight_report(G: SubcubicGraph) -> WeightReport:
    profile = degree_profile(G)
    w = graph_weight(G)
    b = count_bad_components(G)
    t = tc(G)
    theta = 2 * t + 2 * b
    ir = independent_domination_number(G)
    gr = domination_number(G)
    if gr.value > ir.value:
        raise AssertionError("gamma exceeds i; solver bug")
    return WeightReport(profile, w, b, t, theta, w + theta, ir.value, gr.value, ir.certificate, gr.certificate)


__all__ = [
    "BadClassification",
    "NotBad",
    "TroublesomeOccurrence",
    "WeightReport",
    "contains_subgraph",
    "count_bad_components",
    "find_subgraph",
    "find_troublesome",
    "is_bad_graph",
    "structural_weight",
    "tc",
    "troublesome_packing",
    "weight_report",
]
