"""Exact independent domination number i(G) and domination number gamma(G).

The search kernel is compiled with Cython when the extension is available and
falls back to a pure-Python implementation otherwise.  ``KERNEL`` names the
active one; set ``INDOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from ..graph import SubcubicGraph, VertexLike, VertexSet, iter_bits
from . import _pykernel

try:
    if os.environ.get("INDOM_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

KERNEL = "cython" if _ckernel is not None else "python"

_C_MAX_N = 64


class InfeasibleConstraints(ValueError):
    """No ID-set satisfies the forced inclusions/exclusions."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: VertexSet
    node_count: int


def _closed(G: SubcubicGraph) -> list[int]:
    return [G.closed_mask(v) for v in range(G.n)]


def is_independent(G: SubcubicGraph, S: VertexLike) -> bool:
    mask = G.mask_of(S)
    nbr = G.nbr_masks
    return all(not nbr[v] & mask for v in iter_bits(mask))


def is_dominating(G: SubcubicGraph, S: VertexLike) -> bool:
    mask = G.mask_of(S)
    covered = mask
    for v in iter_bits(mask):
        covered |= G.nbr_masks[v]
    return covered == G.all_mask()


def is_independent_dominating(G: SubcubicGraph, S: VertexLike) -> bool:
    return is_independent(G, S) and is_dominating(G, S)


def is_maximal_independent(G: SubcubicGraph, S: VertexLike) -> bool:
    """Independent and no vertex can be added; checked without the domination test."""
    mask = G.mask_of(S)
    if not is_independent(G, mask_set(G, mask)):
        return False
    for v in range(G.n):
        if not mask >> v & 1 and not G.nbr_masks[v] & mask:
            return False
    return True


def mask_set(G: SubcubicGraph, mask: int) -> VertexSet:
    return VertexSet(G.n, mask)


def _kernel_solve(G, free, undom, independent, budget, pure):
    if not pure and _ckernel is not None and G.n <= _C_MAX_N:
        return _ckernel.solve(_closed(G), free, undom, independent, budget)
    return _pykernel.solve(_closed(G), free, undom, independent, budget)


def _greedy_ids(G: SubcubicGraph, free: int, undom: int) -> int | None:
    """Greedy maximal independent set, smallest residual degree first."""
    chosen = 0
    nbr = G.nbr_masks
    while undom:
        best = None
        for u in iter_bits(undom):
            cands = (nbr[u] | 1 << u) & free
            if not cands:
                return None
            for x in iter_bits(cands):
                key = (bin(nbr[x] & free).count("1"), x)
                if best is None or key < best[0]:
                    best = (key, x)
        x = best[1]
        cm = nbr[x] | 1 << x
        chosen |= 1 << x
        free &= ~cm
        undom &= ~cm
    return chosen


def _greedy_ds(G: SubcubicGraph, free: int, undom: int) -> int | None:
    chosen = 0
    while undom:
        best = max(
            (bin(G.closed_mask(x) & undom).count("1"), -x) for x in iter_bits(free)
        ) if free else (0, 0)
        if best[0] == 0:
            return None
        x = -best[1]
        chosen |= 1 << x
        free &= ~(1 << x)
        undom &= ~G.closed_mask(x)
    return chosen


def independent_domination_number(
    G: SubcubicGraph,
    include: Iterable[int] = (),
    exclude: Iterable[int] = (),
    *,
    pure_python: bool = False,
) -> SolveResult:
    """Minimum ID-set of ``G``, optionally forcing vertices in or out.

    Raises:
        InfeasibleConstraints: if no ID-set honours ``include``/``exclude``.
    """
    inc = G.mask_of(include)
    exc = G.mask_of(exclude)
    if inc & exc or not is_independent(G, mask_set(G, inc)):
        raise InfeasibleConstraints("forced set is not independent or overlaps exclusions")
    blocked = inc
    for v in iter_bits(inc):
        blocked |= G.nbr_masks[v]
    free = G.all_mask() & ~blocked & ~exc
    undom = G.all_mask() & ~blocked
    seed = _greedy_ids(G, free, undom)
    budget = _pykernel.INF
    if seed is not None:
        budget = bin(seed).count("1") + 1
    value, mask, nodes = _kernel_solve(G, free, undom, True, budget, pure_python)
    if value < 0:
        if seed is None:
            raise InfeasibleConstraints("no independent dominating set satisfies the constraints")
        value, mask = bin(seed).count("1"), seed
    mask |= inc
    value += bin(inc).count("1")
    cert = mask_set(G, mask)
    assert is_independent_dominating(G, cert) and len(cert) == value
    return SolveResult(value, cert, nodes)


def domination_number(G: SubcubicGraph, *, pure_python: bool = False) -> SolveResult:
    full = G.all_mask()
    seed = _greedy_ds(G, full, full)
    budget = bin(seed).count("1") + 1 if seed is not None else _pykernel.INF
    value, mask, nodes = _kernel_solve(G, full, full, False, budget, pure_python)
    if value < 0:
        value, mask = bin(seed).count("1"), seed
    cert = mask_set(G, mask)
    assert is_dominating(G, cert) and len(cert) == value
    return SolveResult(value, cert, nodes)


def i_number(G: SubcubicGraph) -> int:
    return independent_domination_number(G).value


def gamma_number(G: SubcubicGraph) -> int:
    return domination_number(G).value


__all__ = [
    "KERNEL",
    "InfeasibleConstraints",
    "SolveResult",
    "domination_number",
    "gamma_number",
    "i_number",
    "independent_domination_number",
    "is_dominating",
    "is_independent",
    "is_independent_dominating",
    "is_maximal_independent",
]
