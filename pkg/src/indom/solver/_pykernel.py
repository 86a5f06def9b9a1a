"""Pure-Python branch-and-bound kernel for minimum (independent) dominating sets.

A residual problem is a pair of bitmasks: ``free`` (vertices that may still be
chosen) and ``undom`` (vertices not yet dominated).  The kernel branches on
the undominated vertex with the fewest remaining dominators, splits the
residual into independent components, and prunes with a packing bound.
"""

from __future__ import annotations

from typing import Sequence

INF = 1 << 30
_CACHE_LIMIT = 200_000


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _pop(x: int) -> int:
    return bin(x).count("1")


class _Search:
    def __init__(self, closed: Sequence[int], independent: bool) -> None:
        self.closed = list(closed)
        self.independent = independent
        self.nodes = 0
        # (free, undom) -> (exact, value, mask); inexact entries store a lower bound.
        self.cache: dict[tuple[int, int], tuple[bool, int, int]] = {}

    def lower_bound(self, free: int, undom: int) -> int:
        closed = self.closed
        cands = []
        best_cover = 0
        for u in _bits(undom):
            c = closed[u] & free
            if not c:
                return INF
            cands.append((_pop(c), c))
        for x in _bits(free):
            cover = _pop(closed[x] & undom)
            if cover > best_cover:
                best_cover = cover
        count = len(cands)
        lb = -(-count // best_cover)
        cands.sort()
        used = 0
        packing = 0
        for _, c in cands:
            if not c & used:
                packing += 1
                used |= c
        return max(lb, packing)

    def components(self, within: int) -> list[int]:
        closed = self.closed
        out = []
        left = within
        while left:
            frontier = left & -left
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in _bits(frontier):
                    nxt |= closed[v]
                frontier = nxt & within & ~comp
            out.append(comp)
            left &= ~comp
        return out

    def search(self, free: int, undom: int, budget: int) -> tuple[int, int] | None:
        """Optimal solution of size < ``budget`` for the residual, or ``None``."""
        if not undom:
            return (0, 0) if budget > 0 else None
        self.nodes += 1
        closed = self.closed
        reach = 0
        for u in _bits(undom):
            reach |= closed[u]
        free &= reach
        key = (free, undom)
        hit = self.cache.get(key)
        if hit is not None:
            exact, value, mask = hit
            if exact:
                return (value, mask) if value < budget else None
            if value >= budget:
                return None
        lb = self.lower_bound(free, undom)
        if lb >= budget:
            self._store(key, False, lb, 0)
            return None
        comps = self.components(free | undom)
        if len(comps) > 1:
            result = self._split(free, undom, comps, budget)
        else:
            result = self._branch(free, undom, budget)
        if result is None:
            self._store(key, False, budget, 0)
        else:
            self._store(key, True, result[0], result[1])
        return result

    def _store(self, key, exact, value, mask):
        if len(self.cache) >= _CACHE_LIMIT:
            self.cache.clear()
        old = self.cache.get(key)
        if old is not None and not exact and not old[0] and old[1] >= value:
            return
        self.cache[key] = (exact, value, mask)

    def _split(self, free, undom, comps, budget):
        parts = [(free & c, undom & c) for c in comps]
        lbs = [self.lower_bound(f, u) for f, u in parts]
        if sum(lbs) >= budget:
            return None
        order = sorted(range(len(parts)), key=lambda j: _pop(comps[j]))
        lbs_sorted = [lbs[j] for j in order]
        total = 0
        mask = 0
        for pos, j in enumerate(order):
            f, u = parts[j]
            allowed = budget - total - sum(lbs_sorted[pos + 1:])
            r = self.search(f, u, allowed)
            if r is None:
                return None
            total += r[0]
            mask |= r[1]
        return total, mask

    def _branch(self, free, undom, budget):
        closed = self.closed
        pivot = -1
        pivot_c = 0
        pivot_k = INF
        for u in _bits(undom):
            c = closed[u] & free
            k = _pop(c)
            if k < pivot_k:
                pivot, pivot_c, pivot_k = u, c, k
                if k <= 1:
                    break
        if pivot_k == 0:
            return None
        order = sorted(_bits(pivot_c), key=lambda x: (-_pop(closed[x] & undom), x))
        best = None
        for x in order:
            bx = 1 << x
            if self.independent:
                r = self.search(free & ~closed[x], undom & ~closed[x], budget - 1)
            else:
                r = self.search(free & ~bx, undom & ~closed[x], budget - 1)
            if r is not None:
                best = (r[0] + 1, r[1] | bx)
                budget = best[0]
            free &= ~bx
            if budget <= 1:
                break
        return best


def solve(
    closed: Sequence[int],
    free: int,
    undom: int,
    independent: bool,
    budget: int = INF,
) -> tuple[int, int, int]:
    """Return ``(value, certificate_mask, node_count)``; value is -1 if infeasible.

    ``closed[v]`` is the closed-neighbourhood bitmask of ``v``.  Only solutions
    strictly smaller than ``budget`` are searched for.
    """
    s = _Search(closed, independent)
    r = s.search(free, undom, budget)
    if r is None:
        return -1, 0, s.nodes
    return r[0], r[1], s.nodes
