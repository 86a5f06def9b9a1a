"""Builders for the named graphs and parametric families.

Bad-graph layout
----------------
Every K_{2,3} unit occupies five consecutive indices ``b .. b+4``:

* ``b``      the small vertex joined to the rest of the graph (core vertex),
* ``b+1``, ``b+2``  the other two small vertices (canonical vertices),
* ``b+3``, ``b+4``  the two large vertices (non-canonical vertices).

The root of a bad graph is vertex 0 and the first unit starts at 1, so unit
``j`` (1-based) starts at ``5*j - 4``.  Attachment targets in a
:class:`BadGraphSpec` refer to these construction-order indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    DegreeExceedsThree,
    GraphError,
    SubcubicGraph,
    VertexSet,
    disjoint_union,
    is_connected,
)


class InvalidSpec(GraphError):
    pass


class AttachmentDegreeTooHigh(GraphError):
    pass


class SpecNotInB1(GraphError):
    pass


class InvalidBlockCount(GraphError):
    pass


class ReconstructionFailure(RuntimeError):
    """A figure-reconstructed generator emitted a graph that fails its self-check."""


def _named(names: str, edges: str) -> SubcubicGraph:
    """Graph from whitespace-separated vertex names and ``a-b`` edge tokens."""
    labels = names.split()
    index = {name: i for i, name in enumerate(labels)}
    pairs = []
    for token in edges.split():
        a, b = token.split("-")
        pairs.append((index[a], index[b]))
    return SubcubicGraph(len(labels), pairs, labels)


# ---------------------------------------------------------------------------
# small named graphs

def k23() -> SubcubicGraph:
    """K_{2,3}: vertices 0, 1 are the large side, 2, 3, 4 the small side."""
    return _named("x1 x2 y1 y2 y3", "x1-y1 x1-y2 x1-y3 x2-y1 x2-y2 x2-y3")


def k33() -> SubcubicGraph:
    return SubcubicGraph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def k4() -> SubcubicGraph:
    return SubcubicGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def diamond() -> SubcubicGraph:
    """K_4 minus an edge."""
    return SubcubicGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def cycle(m: int) -> SubcubicGraph:
    if m < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return SubcubicGraph(m, [(i, (i + 1) % m) for i in range(m)])


def path(m: int) -> SubcubicGraph:
    return SubcubicGraph(m, [(i, i + 1) for i in range(m - 1)])


def edgeless(m: int) -> SubcubicGraph:
    return SubcubicGraph(m, [])


def prism(m: int) -> SubcubicGraph:
    """C_m box K_2: outer cycle ``0..m-1``, inner cycle ``m..2m-1``, spokes ``i - m+i``."""
    if m < 3:
        raise GraphError("prism needs m >= 3")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    labels = [f"x{i}" for i in range(m)] + [f"y{i}" for i in range(m)]
    return SubcubicGraph(2 * m, edges, labels)


def g7() -> SubcubicGraph:
    """The seven-vertex graph: K_{2,3} on {x1,x2} x {v1,v2,v3} plus the path v1-u1-u2-v2."""
    return _named(
        "v1 v2 v3 x1 x2 u1 u2",
        "v1-x1 x1-v3 v3-x2 x2-v2 v2-x1 u1-v1 u2-v2 v1-x2 u1-u2",
    )


def g82() -> SubcubicGraph:
    """K_{2,3} on {x1,x2} x {v1,v2,v3} with a pendant vertex u_j at each v_j."""
    return _named(
        "x1 x2 v1 v2 v3 u1 u2 u3",
        "x1-v1 x1-v2 x1-v3 x2-v1 x2-v2 x2-v3 u1-v1 u2-v2 u3-v3",
    )


def random_subcubic(n: int, rng: random.Random, density: float | None = None) -> SubcubicGraph:
    """Random graph of order ``n`` with maximum degree 3 (edges added greedily in random order)."""
    p = rng.random() if density is None else density
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for a, b in pairs:
        if deg[a] < 3 and deg[b] < 3 and rng.random() < p:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return SubcubicGraph(n, edges)


NAMED = {
    "k23": k23,
    "k33": k33,
    "k4": k4,
    "diamond": diamond,
    "g7": g7,
    "g82": g82,
    "prism5": lambda: prism(5),
    "prism3": lambda: prism(3),
}


# ---------------------------------------------------------------------------
# the bad family

_UNIT_EDGES = [(3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)]


def _unit_edges(base: int) -> list[tuple[int, int]]:
    return [(base + a, base + b) for a, b in _UNIT_EDGES]


def _unit_labels(j: int) -> list[str]:
    return [f"u{j}.c", f"u{j}.s1", f"u{j}.s2", f"u{j}.L1", f"u{j}.L2"]


def unit_base(j: int) -> int:
    """First index of unit ``j`` (1-based) in a constructed bad graph."""
    return 5 * j - 4


def apply_o1(G: SubcubicGraph, v: int) -> SubcubicGraph:
    """Add a fresh K_{2,3} and join ``v`` to one of its small vertices.

    The new unit occupies ``G.n .. G.n+4`` in the bad-graph layout, joined at
    ``G.n``.
    """
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in graph")
    if G.degree(v) > 2:
        raise AttachmentDegreeTooHigh(f"vertex {v} has degree {G.degree(v)}")
    base = G.n
    edges = list(G.edges) + _unit_edges(base) + [(v, base)]
    labels = None
    if G.labels is not None:
        j = 1
        while f"u{j}.c" in G.labels:
            j += 1
        labels = list(G.labels) + _unit_labels(j)
    return SubcubicGraph(G.n + 5, edges, labels)


@dataclass(frozen=True)
class BadGraphSpec:
    """Construction sequence of a bad graph.

    ``attachments[j - 2]`` is the construction-order index of the vertex that
    unit ``j`` is joined to, for ``j = 2..k``.
    """

    k: int
    attachments: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "attachments", tuple(self.attachments))


@dataclass(frozen=True)
class BadGraphArtifacts:
    graph: SubcubicGraph
    root: int
    canonical_id_set: VertexSet
    non_canonical_set: VertexSet
    core_set: VertexSet
    spec: BadGraphSpec
    unit_bases: tuple[int, ...] = field(default=())

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def subfamily(self) -> int:
        return self.graph.degree(self.root)


#: Five units: the second hangs off a canonical vertex of the first, the third
#: off the root, the fourth and fifth off the two canonical vertices of the
#: second.  The root ends with degree 2.
FIVE_UNIT_SPEC = BadGraphSpec(5, (3, 0, 7, 8))


def validate_spec(spec: BadGraphSpec) -> None:
    if spec.k < 1:
        raise InvalidSpec("k must be at least 1")
    if len(spec.attachments) != spec.k - 1:
        raise InvalidSpec(f"need {spec.k - 1} attachments, got {len(spec.attachments)}")
    degree = [1, 3, 2, 2, 3, 3]
    for j, target in enumerate(spec.attachments, start=2):
        if not 0 <= target < len(degree):
            raise InvalidSpec(f"unit {j}: target {target} does not exist yet")
        if degree[target] > 2:
            raise InvalidSpec(f"unit {j}: target {target} already has degree {degree[target]}")
        degree[target] += 1
        degree += [3, 2, 2, 3, 3]


def base_b1() -> BadGraphArtifacts:
    return build_bad(BadGraphSpec(1))


def build_bad(spec: BadGraphSpec) -> BadGraphArtifacts:
    """Build the bad graph of ``spec`` with its three distinguished sets."""
    validate_spec(spec)
    edges = [(0, 1)] + _unit_edges(1)
    labels = ["r"] + _unit_labels(1)
    canonical, non_canonical, core = [0, 2, 3], [4, 5], [1]
    bases = [1]
    for j, target in enumerate(spec.attachments, start=2):
        base = unit_base(j)
        edges += _unit_edges(base) + [(target, base)]
        labels += _unit_labels(j)
        canonical += [base + 1, base + 2]
        non_canonical += [base + 3, base + 4]
        core.append(base)
        bases.append(base)
    n = 5 * spec.k + 1
    G = SubcubicGraph(n, edges, labels)
    return BadGraphArtifacts(
        G,
        0,
        VertexSet.of(n, canonical),
        VertexSet.of(n, non_canonical),
        VertexSet.of(n, core),
        spec,
        tuple(bases),
    )


def eligible_targets(spec_prefix: Sequence[int], k_so_far: int) -> list[int]:
    """Vertices of degree <= 2 after building ``k_so_far`` units with ``spec_prefix``."""
    degree = [1, 3, 2, 2, 3, 3]
    for target in spec_prefix:
        degree[target] += 1
        degree += [3, 2, 2, 3, 3]
    assert len(degree) == 5 * k_so_far + 1
    return [v for v, d in enumerate(degree) if d <= 2]


def random_bad_spec(k: int, rng: random.Random, root_degree: int | None = None) -> BadGraphSpec:
    """Uniformly choose each attachment among the currently eligible vertices.

    With ``root_degree`` set, the root receives exactly ``root_degree - 1``
    extra units (requires ``k >= root_degree``).
    """
    if k < 1:
        raise InvalidSpec("k must be at least 1")
    if root_degree is not None and not (1 <= root_degree <= 3 and k >= root_degree):
        raise InvalidSpec(f"root degree {root_degree} impossible with k={k}")
    attachments: list[int] = []
    root_slots = None if root_degree is None else root_degree - 1
    for j in range(2, k + 1):
        options = eligible_targets(attachments, j - 1)
        if root_slots is not None:
            remaining = k - j + 1
            if root_slots >= remaining:
                options = [0]
            else:
                options = [v for v in options if v != 0] if root_slots == 0 else options
        target = rng.choice(options)
        if target == 0 and root_slots is not None:
            root_slots -= 1
        attachments.append(target)
    return BadGraphSpec(k, tuple(attachments))


def star_bad(units: int) -> BadGraphArtifacts:
    """The bad graph whose ``units`` K_{2,3} copies all hang off the root (1 <= units <= 3)."""
    if not 1 <= units <= 3:
        raise InvalidSpec("a star-shaped bad graph has 1, 2 or 3 units")
    return build_bad(BadGraphSpec(units, (0,) * (units - 1)))


# ---------------------------------------------------------------------------
# troublesome configurations

@dataclass(frozen=True)
class TroublesomeTemplate:
    """A T-configuration fragment: a member of B_1 rooted at ``v1`` plus ``v2``.

    ``stubs`` lists the fragment vertices that receive one external edge each.
    """

    graph: SubcubicGraph
    v1: int
    v2: int
    w2: int
    kind: int
    bad: BadGraphArtifacts
    stubs: tuple[int, ...]

    @property
    def spec(self) -> BadGraphSpec:
        return self.bad.spec


def build_troublesome(kind: int, spec: BadGraphSpec, w2: int | None = None) -> TroublesomeTemplate:
    """Type-1 (one stub at v2) or type-2 (stubs at v1 and v2) template.

    ``w2`` defaults to the highest-index degree-2 vertex of the bad graph.
    """
    if kind not in (1, 2):
        raise InvalidSpec("kind must be 1 or 2")
    B = build_bad(spec)
    if B.graph.degree(B.root) != 1:
        raise SpecNotInB1("the bad graph's root must have degree 1")
    deg2 = [v for v in range(B.graph.n) if B.graph.degree(v) == 2 and v != B.root]
    if w2 is None:
        w2 = deg2[-1]
    elif w2 not in deg2:
        raise InvalidSpec(f"w2={w2} is not a degree-2 vertex of the bad graph")
    v1, v2 = B.root, B.graph.n
    labels = list(B.graph.labels or []) + ["v2"]
    labels[v1] = "v1"
    T = SubcubicGraph(B.graph.n + 1, list(B.graph.edges) + [(v1, v2), (w2, v2)], labels)
    stubs = (v2,) if kind == 1 else (v1, v2)
    return TroublesomeTemplate(T, v1, v2, w2, kind, B, stubs)


def embed_template(
    host: SubcubicGraph,
    template: TroublesomeTemplate,
    stub_targets: Sequence[int],
    prefix: str = "T:",
) -> SubcubicGraph:
    """Disjoint union of ``host`` and the template, plus one edge per stub.

    Template vertex ``t`` becomes ``host.n + t`` and is labelled ``prefix + label``.

    Raises:
        DegreeExceedsThree: if a stub target has no spare degree.
    """
    if len(stub_targets) != len(template.stubs):
        raise InvalidSpec(f"template has {len(template.stubs)} stubs, got {len(stub_targets)} targets")
    for t in stub_targets:
        if not 0 <= t < host.n:
            raise InvalidSpec(f"stub target {t} not in host")
    union = disjoint_union(host, template.graph, prefixes=("", prefix))
    extra = [(host.n + s, t) for s, t in zip(template.stubs, stub_targets)]
    return union.with_edges(extra)


def template_vertices(host: SubcubicGraph, template: TroublesomeTemplate) -> VertexSet:
    """Where :func:`embed_template` places the template's vertices."""
    n = host.n + template.graph.n
    return VertexSet.of(n, range(host.n, n))


# ---------------------------------------------------------------------------
# equality examples

_UNIT_V = "v1-v2 v2-v5 v5-v4 v4-v1 v1-v3 v3-v5"
_UNIT_U = "u1-u2 u2-u5 u5-u4 u4-u1 u1-u3 u3-u5"


def _fig9a() -> SubcubicGraph:
    return _named(
        "v1 v2 v3 v4 v5 w1 w2 z1 z2 u1 u2 u3 u4 u5",
        f"{_UNIT_V} {_UNIT_U} v2-w1 w1-z1 z1-u2 v4-w2 w2-z2 z2-u4 w1-w2 z1-z2",
    )


def _fig9b() -> SubcubicGraph:
    return _named(
        "v1 v2 v3 v4 v5 w1 w2 z1 z2 x1 x2 x3 x4 y1 y2 y3 y4 u1 u2 u3 u4 u5",
        f"{_UNIT_V} {_UNIT_U} v2-w1 w1-z1 z1-x1 x1-x2 x2-x3 x3-x4 x4-u2 "
        "v4-w2 w2-z2 z2-y1 y1-y2 y2-y3 y3-y4 y4-u4 "
        "w1-w2 x1-y2 x2-y1 x3-y3 x4-y4 z1-z2",
    )


def _f1() -> SubcubicGraph:
    return _named(
        "v1 v2 v3 v4 v5 w1 w2 u1 u2 u3 u4 u5",
        f"{_UNIT_V} {_UNIT_U} v2-w1 w1-u2 v4-w2 w2-u4 w1-w2",
    )


def _f2() -> SubcubicGraph:
    return _named(
        "v1 v2 w1 w2 u1 u2 u3 u4 u5",
        f"w1-v1 v1-v2 v2-w2 {_UNIT_U} w1-u2 w2-u4 w1-w2",
    )


def _f3() -> SubcubicGraph:
    return _named(
        "v01 v1 w1 w2 v4 v04 u1 u2 u3 u4 u5",
        f"w1-v1 w2-v4 v1-v4 {_UNIT_U} w1-u2 w2-u4 w1-w2 v1-v01 v4-v04",
    )


def _fig11() -> SubcubicGraph:
    names = " ".join(
        [f"a{i}" for i in range(1, 5)] + [f"b{i}" for i in range(1, 7)] + [f"c{i}" for i in range(1, 5)]
        + [f"d{i}" for i in range(1, 7)] + [f"e{i}" for i in range(1, 7)] + [f"f{i}" for i in range(1, 7)]
        + [f"g{i}" for i in range(1, 5)] + [f"h{i}" for i in range(1, 7)] + [f"i{i}" for i in range(1, 5)]
    )
    edges = """
        a1-a2 a2-a3 a3-a4 b1-b2 b2-b3 b4-b5 b5-b6 c1-c2 c2-c3 c3-c4
        a1-b1 b1-c1 c1-b3 b3-a1 a2-c2 a3-c3 a4-b4 b4-c4 c4-b6 b6-a4
        d1-d2 d2-d3 d4-d5 d5-d6 e1-e2 e2-e3 e4-e5 e5-e6 f1-f2 f2-f3 f4-f5 f5-f6
        d1-f1 d2-f2 d5-f5 d6-f6
        d3-e1 e1-f3 f3-e3 e3-d3 d4-e4 e4-f4 f4-e6 e6-d4
        g1-g2 g2-g3 g3-g4 h1-h2 h2-h3 h4-h5 h5-h6 i1-i2 i2-i3 i3-i4
        g1-h1 h1-i1 i1-h3 h3-g1 g2-i2 g3-i3 g4-h4 h4-i4 i4-h6 h6-g4
        d1-b2 f1-h2 d6-b5 f6-h5
    """
    return _named(names, edges)


EXAMPLES = {
    "fig9a": _fig9a,
    "fig9b": _fig9b,
    "f1": _f1,
    "f2": _f2,
    "f3": _f3,
    "fig11": _fig11,
}
EXAMPLE_ALIASES = {"fig10a": "f1", "fig10b": "f2", "fig10c": "f3"}


def example_graph(name: str) -> SubcubicGraph:
    key = EXAMPLE_ALIASES.get(name, name)
    if key not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    return EXAMPLES[key]()


# ---------------------------------------------------------------------------
# extremal cubic families (reconstructed from the drawings)

def _fig2a(blocks: int) -> SubcubicGraph:
    edges = []
    for j in range(blocks):
        L = [8 * j + t for t in range(4)]
        R = [8 * j + 4 + t for t in range(4)]
        edges += [(L[0], L[1]), (L[1], L[2]), (L[2], L[3])]
        edges += [(R[0], R[1]), (R[1], R[2]), (R[2], R[3])]
        edges += [(L[0], R[1]), (L[1], R[0]), (L[2], R[2]), (L[3], R[3])]
        nxt = 8 * ((j + 1) % blocks)
        edges += [(L[3], nxt), (R[3], nxt + 4)]
    return SubcubicGraph(8 * blocks, edges)


def _fig2b(blocks: int) -> SubcubicGraph:
    edges = []
    for j in range(blocks):
        a = [8 * j + t for t in range(3)]
        b = [8 * j + 3 + t for t in range(3)]
        c = [8 * j + 6, 8 * j + 7]
        edges += [(a[0], a[1]), (a[1], a[2])]
        for t in range(3):
            edges += [(a[t], b[t]), (b[t], c[0]), (b[t], c[1])]
        edges.append((a[2], 8 * ((j + 1) % blocks)))
    return SubcubicGraph(8 * blocks, edges)


def _fig3(blocks: int) -> SubcubicGraph:
    edges = []

    def group(base: int) -> list[tuple[int, int]]:
        # base = hub vertex, base+1..base+5 = the K_{2,3} part
        a, a1, a2, a3, a4, a5 = range(base, base + 6)
        return [(a, a1), (a1, a2), (a2, a4), (a4, a3), (a3, a5), (a5, a2), (a1, a3)]

    for j in range(blocks):
        s = 16 * j
        A, Bq, C = s, s + 6, s + 10
        edges += group(A) + group(C)
        b1, b2, b3, b4 = Bq, Bq + 1, Bq + 2, Bq + 3
        edges += [(b1, b2), (b2, b4), (b4, b3), (b3, b1)]
        edges += [(A + 4, b2), (A + 5, b1), (b3, C + 4), (b4, C + 5)]
        edges.append((A, C))
        edges.append((C, 16 * ((j + 1) % blocks)))
    return SubcubicGraph(16 * blocks, edges)


EXTREMAL = {"fig2a": _fig2a, "fig2b": _fig2b, "fig3": _fig3}


def extremal_family(name: str, blocks: int, *, validate: bool = True) -> SubcubicGraph:
    """Connected cubic graph with i = 3n/8 from one of the drawn infinite families.

    With ``validate`` (the default) the graph is checked for connectivity,
    3-regularity and ``8 i(G) = 3 n`` before it is returned.

    Raises:
        InvalidBlockCount: for ``blocks < 2``.
        ReconstructionFailure: if the self-check fails.
    """
    if name not in EXTREMAL:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(EXTREMAL)}")
    if blocks < 2:
        raise InvalidBlockCount("at least two blocks are required")
    G = EXTREMAL[name](blocks)
    if validate:
        from .solver import i_number

        if not is_connected(G) or not G.is_cubic():
            raise ReconstructionFailure(f"{name}[{blocks}] is not a connected cubic graph")
        i = i_number(G)
        if 8 * i != 3 * G.n:
            raise ReconstructionFailure(f"{name}[{blocks}]: i={i}, n={G.n}, 8i != 3n")
    return G


__all__ = [
    "AttachmentDegreeTooHigh",
    "BadGraphArtifacts",
    "BadGraphSpec",
    "DegreeExceedsThree",
    "FIVE_UNIT_SPEC",
    "InvalidBlockCount",
    "InvalidSpec",
    "ReconstructionFailure",
    "SpecNotInB1",
    "TroublesomeTemplate",
    "apply_o1",
    "base_b1",
    "build_bad",
    "cycle",
    "diamond",
    "edgeless",
    "g7",
    "g82",
    "k23",
    "k33",
    "k4",
    "path",
    "prism",
    "star_bad",
    "build_troublesome",
    "embed_template",
    "example_graph",
    "extremal_family",
    "random_bad_spec",
    "random_subcubic",
]
