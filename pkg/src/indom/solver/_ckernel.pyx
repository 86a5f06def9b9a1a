# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel (graphs with at most 64 vertices).

Same search as ``_pykernel``: masks are ``uint64`` and the residual cache is
a Python dict keyed on the packed pair of masks.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    CACHE_LIMIT = 200000

cdef int INF = 1 << 30


cdef inline int pop(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int low(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef class _Search:
    cdef uint64_t closed[MAXN]
    cdef int n
    cdef bint independent
    cdef public long nodes
    cdef dict cache

    def __init__(self, closed, bint independent):
        cdef int v
        self.n = len(closed)
        for v in range(self.n):
            self.closed[v] = <uint64_t>closed[v]
        self.independent = independent
        self.nodes = 0
        self.cache = {}

    cdef int lower_bound(self, uint64_t free, uint64_t undom):
        cdef uint64_t cands[MAXN]
        cdef int sizes[MAXN]
        cdef int count = 0, best_cover = 0, cover, i, j, k, packing = 0
        cdef uint64_t x = undom, c, used = 0, tmp
        cdef int u
        while x:
            u = low(x)
            x &= x - 1
            c = self.closed[u] & free
            if not c:
                return INF
            cands[count] = c
            sizes[count] = pop(c)
            count += 1
        x = free
        while x:
            u = low(x)
            x &= x - 1
            cover = pop(self.closed[u] & undom)
            if cover > best_cover:
                best_cover = cover
        # insertion sort by (size, mask), matching the Python kernel
        for i in range(1, count):
            k = sizes[i]
            tmp = cands[i]
            j = i - 1
            while j >= 0 and (sizes[j] > k or (sizes[j] == k and cands[j] > tmp)):
                sizes[j + 1] = sizes[j]
                cands[j + 1] = cands[j]
                j -= 1
            sizes[j + 1] = k
            cands[j + 1] = tmp
        for i in range(count):
            if not cands[i] & used:
                packing += 1
                used |= cands[i]
        i = (count + best_cover - 1) // best_cover
        return i if i > packing else packing

    cdef list components(self, uint64_t within):
        cdef list out = []
        cdef uint64_t left = within, frontier, comp, nxt, f
        cdef int v
        while left:
            frontier = left & (~left + 1)
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    v = low(f)
                    f &= f - 1
                    nxt |= self.closed[v]
                frontier = nxt & within & ~comp
            out.append(comp)
            left &= ~comp
        return out

    cdef void store(self, object key, bint exact, int value, uint64_t mask):
        if len(self.cache) >= CACHE_LIMIT:
            self.cache.clear()
        old = self.cache.get(key)
        if old is not None and not exact and not old[0] and old[1] >= value:
            return
        self.cache[key] = (exact, value, mask)

    cdef object search(self, uint64_t free, uint64_t undom, int budget):
        cdef uint64_t reach = 0, x
        cdef int u, lb
        if not undom:
            return (0, 0) if budget > 0 else None
        self.nodes += 1
        x = undom
        while x:
            u = low(x)
            x &= x - 1
            reach |= self.closed[u]
        free &= reach
        key = (<object>free) << 64 | <object>undom
        hit = self.cache.get(key)
        if hit is not None:
            if hit[0]:
                return (hit[1], hit[2]) if hit[1] < budget else None
            if hit[1] >= budget:
                return None
        lb = self.lower_bound(free, undom)
        if lb >= budget:
            self.store(key, False, lb, 0)
            return None
        comps = self.components(free | undom)
        if len(comps) > 1:
            result = self.split(free, undom, comps, budget)
        else:
            result = self.branch(free, undom, budget)
        if result is None:
            self.store(key, False, budget, 0)
        else:
            self.store(key, True, result[0], result[1])
        return result

    cdef object split(self, uint64_t free, uint64_t undom, list comps, int budget):
        cdef int m = len(comps), j, pos, total = 0, rest, allowed
        cdef uint64_t c, mask = 0
        parts = []
        lbs = []
        for c in comps:
            parts.append((free & c, undom & c))
            lbs.append(self.lower_bound(free & c, undom & c))
        if sum(lbs) >= budget:
            return None
        order = sorted(range(m), key=[pop(<uint64_t>q) for q in comps].__getitem__)
        lbs_sorted = [lbs[q] for q in order]
        for pos in range(m):
            j = order[pos]
            rest = sum(lbs_sorted[pos + 1:])
            allowed = budget - total - rest
            r = self.search(parts[j][0], parts[j][1], allowed)
            if r is None:
                return None
            total += r[0]
            mask |= <uint64_t>r[1]
        return (total, mask)

    cdef object branch(self, uint64_t free, uint64_t undom, int budget):
        cdef uint64_t x = undom, c, pivot_c = 0, bx, cx
        cdef int u, k, pivot_k = INF, cnt = 0, i, j, xv
        cdef int order[MAXN]
        cdef int gain[MAXN]
        cdef int tg, tv
        while x:
            u = low(x)
            x &= x - 1
            c = self.closed[u] & free
            k = pop(c)
            if k < pivot_k:
                pivot_c = c
                pivot_k = k
                if k <= 1:
                    break
        if pivot_k == 0:
            return None
        x = pivot_c
        while x:
            u = low(x)
            x &= x - 1
            order[cnt] = u
            gain[cnt] = pop(self.closed[u] & undom)
            cnt += 1
        # sort by (-gain, index)
        for i in range(1, cnt):
            tg = gain[i]
            tv = order[i]
            j = i - 1
            while j >= 0 and (gain[j] < tg or (gain[j] == tg and order[j] > tv)):
                gain[j + 1] = gain[j]
                order[j + 1] = order[j]
                j -= 1
            gain[j + 1] = tg
            order[j + 1] = tv
        best = None
        for i in range(cnt):
            xv = order[i]
            bx = (<uint64_t>1) << xv
            cx = self.closed[xv]
            if self.independent:
                r = self.search(free & ~cx, undom & ~cx, budget - 1)
            else:
                r = self.search(free & ~bx, undom & ~cx, budget - 1)
            if r is not None:
                best = (r[0] + 1, (<uint64_t>r[1]) | bx)
                budget = best[0]
            free &= ~bx
            if budget <= 1:
                break
        return best


def solve(closed, free, undom, bint independent, int budget=1 << 30):
    """Return ``(value, certificate_mask, node_count)``; value is -1 if infeasible."""
    if len(closed) > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s = _Search(closed, independent)
    r = s.search(<uint64_t>free, <uint64_t>undom, budget)
    if r is None:
        return -1, 0, s.nodes
    return r[0], int(r[1]), s.nodes
