"""Instance-level checkers for the domination bounds on (sub)cubic graphs.

Every checker compares integers: a bound ``i <= c n`` with rational ``c = p/q``
is tested as ``q * i <= p * n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form
from .families import k23, k33, prism
from .graph import SubcubicGraph, components, induced_subgraph, is_connected
from .recognition import contains_subgraph, weight_report
from .solver import i_number, gamma_number
from .weights import graph_weight


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one bound on one graph: ``lhs <= rhs`` when ``applies``."""

    bound: str
    applies: bool
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return not self.applies or self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.applies and self.lhs == self.rhs


@lru_cache(maxsize=None)
def _forms() -> dict[str, bytes]:
    return {"k33": canonical_form(k33()), "prism5": canonical_form(prism(5))}


def is_k33(G: SubcubicGraph) -> bool:
    return G.n == 6 and G.m == 9 and canonical_form(G) == _forms()["k33"]


def is_prism5(G: SubcubicGraph) -> bool:
    return G.n == 10 and G.m == 15 and canonical_form(G) == _forms()["prism5"]


def has_exceptional_component(G: SubcubicGraph) -> bool:
    """Some component is K_{3,3} or the 5-prism."""
    for comp in components(G):
        if len(comp) in (6, 10):
            H, _ = induced_subgraph(G, comp)
            if is_k33(H) or is_prism5(H):
                return True
    return False


def has_prism5_component(G: SubcubicGraph) -> bool:
    for comp in components(G):
        if len(comp) == 10:
            H, _ = induced_subgraph(G, comp)
            if is_prism5(H):
                return True
    return False


def _connected_cubic(G: SubcubicGraph) -> bool:
    return G.n > 0 and G.is_cubic() and is_connected(G)


def check_domination_cubic(G: SubcubicGraph, gamma: int | None = None) -> BoundCheck:
    """gamma <= 3n/8 for cubic graphs."""
    applies = G.n > 0 and G.is_cubic()
    g = gamma if gamma is not None else (gamma_number(G) if applies else 0)
    return BoundCheck("gamma<=3n/8", applies, 8 * g, 3 * G.n)


def check_two_fifths(G: SubcubicGraph, i: int | None = None) -> BoundCheck:
    """i <= 2n/5 for connected cubic graphs other than K_{3,3}."""
    applies = _connected_cubic(G) and not is_k33(G)
    v = i if i is not None else (i_number(G) if applies else 0)
    return BoundCheck("i<=2n/5", applies, 5 * v, 2 * G.n)


def check_three_eighths(G: SubcubicGraph, i: int | None = None) -> BoundCheck:
    """i <= 3n/8 for connected cubic graphs other than K_{3,3} and the 5-prism."""
    applies = _connected_cubic(G) and not is_k33(G) and not is_prism5(G)
    v = i if i is not None else (i_number(G) if applies else 0)
    return BoundCheck("i<=3n/8", applies, 8 * v, 3 * G.n)


def check_three_eighths_k23_free(G: SubcubicGraph, i: int | None = None) -> BoundCheck:
    """i <= 3n/8 for connected cubic K_{2,3}-free graphs other than the 5-prism."""
    applies = _connected_cubic(G) and not is_prism5(G) and not contains_subgraph(G, k23())
    v = i if i is not None else (i_number(G) if applies else 0)
    return BoundCheck("i<=3n/8 (K23-free)", applies, 8 * v, 3 * G.n)


def check_weight_k23_free(G: SubcubicGraph, i: int | None = None) -> BoundCheck:
    """8i <= w for subcubic graphs with no K_{2,3} subgraph and no 5-prism component."""
    applies = not contains_subgraph(G, k23()) and not has_prism5_component(G)
    v = i if i is not None else (i_number(G) if applies else 0)
    return BoundCheck("8i<=w", applies, 8 * v, graph_weight(G))


def check_total_weight(G: SubcubicGraph) -> BoundCheck:
    """8i <= Omega for subcubic graphs with no K_{3,3} and no 5-prism component."""
    applies = not has_exceptional_component(G)
    if not applies:
        return BoundCheck("8i<=Omega", False, 0, 0)
    r = weight_report(G)
    return BoundCheck("8i<=Omega", True, 8 * r.i, r.omega)


__all__ = [
    "BoundCheck",
    "check_domination_cubic",
    "check_three_eighths",
    "check_three_eighths_k23_free",
    "check_total_weight",
    "check_two_fifths",
    "check_weight_k23_free",
    "has_exceptional_component",
    "is_k33",
    "is_prism5",
]
