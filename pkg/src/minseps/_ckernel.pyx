# cython: language_level=3
"""Compiled bitset kernels for graphs with at most 64 vertices.

Mirrors ``minseps._pykernel.PyKernel`` method for method; masks cross the
boundary as Python ints and are held as ``uint64_t`` words inside.
"""

from libc.stdint cimport uint64_t, int64_t
from minseps._pykernel import BudgetExceeded


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)

cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline bint c_lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t d = a ^ b
    cdef uint64_t t, above
    if d == 0:
        return False
    t = d & (~d + 1)
    above = ~((t << 1) - 1) if t != (<uint64_t>1 << 63) else 0
    if a & t:
        return (b & above) != 0
    return (a & above) == 0


cdef class CKernel:
    cdef public int n
    cdef uint64_t full
    cdef uint64_t adj[64]
    cdef public tuple adj_py

    backend = "cython"

    def __init__(self, adj):
        cdef int i
        adj = tuple(adj)
        if len(adj) > 64:
            raise ValueError("compiled kernel supports at most 64 vertices")
        self.n = len(adj)
        self.adj_py = adj
        self.full = (<uint64_t>1 << self.n) - 1 if self.n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        for i in range(self.n):
            self.adj[i] = <uint64_t>adj[i]

    @property
    def adj(self):
        return self.adj_py

    cdef inline uint64_t c_reach(self, uint64_t seeds, uint64_t allowed) nogil:
        cdef uint64_t seen = seeds & allowed
        cdef uint64_t frontier = seen
        cdef uint64_t nxt, f
        while frontier:
            nxt = 0
            f = frontier
            while f:
                nxt |= self.adj[lowbit(f)]
                f &= f - 1
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    cdef inline uint64_t c_nbhd(self, uint64_t s) nogil:
        cdef uint64_t out = 0
        cdef uint64_t f = s
        while f:
            out |= self.adj[lowbit(f)]
            f &= f - 1
        return out & ~s

    cdef int c_components(self, uint64_t removed, uint64_t* out) nogil:
        cdef uint64_t allowed = self.full & ~removed
        cdef uint64_t rest = allowed
        cdef uint64_t comp
        cdef int count = 0
        while rest:
            comp = self.c_reach(rest & (~rest + 1), allowed)
            out[count] = comp
            count += 1
            rest &= ~comp
        return count

    cdef int c_count_full(self, uint64_t sep) nogil:
        cdef uint64_t comps[64]
        cdef int k = self.c_components(sep, comps)
        cdef int i, count = 0
        for i in range(k):
            if (sep & ~self.c_nbhd(comps[i])) == 0:
                count += 1
        return count

    cdef bint c_is_pmc(self, uint64_t k) nogil:
        cdef uint64_t comps[64]
        cdef uint64_t nbs[64]
        cdef int nc, i
        cdef uint64_t f, low, need, cover
        cdef int x
        if k == 0:
            return False
        nc = self.c_components(k, comps)
        for i in range(nc):
            nbs[i] = self.c_nbhd(comps[i])
            if nbs[i] == k:
                return False
        f = k
        while f:
            x = lowbit(f)
            low = <uint64_t>1 << x
            f &= f - 1
            need = k & ~self.adj[x] & ~low
            if need == 0:
                continue
            cover = 0
            for i in range(nc):
                if nbs[i] & low:
                    cover |= nbs[i]
            if need & ~cover:
                return False
        return True

    def reach(self, seeds, allowed):
        return self.c_reach(<uint64_t>(seeds & self.full), <uint64_t>(allowed & self.full))

    def neighborhood(self, s):
        return self.c_nbhd(<uint64_t>(s & self.full))

    def components(self, removed):
        cdef uint64_t comps[64]
        cdef int k = self.c_components(<uint64_t>(removed & self.full), comps)
        return [comps[i] for i in range(k)]

    def full_components(self, sep):
        cdef uint64_t s = <uint64_t>(sep & self.full)
        cdef uint64_t comps[64]
        cdef int k = self.c_components(s, comps)
        return [comps[i] for i in range(k) if (s & ~self.c_nbhd(comps[i])) == 0]

    def count_full(self, sep):
        return self.c_count_full(<uint64_t>(sep & self.full))

    def shortest_path(self, int src, int dst, forbidden):
        cdef uint64_t allowed = self.full & ~(<uint64_t>(forbidden & self.full))
        cdef uint64_t layers[65]
        cdef int nl = 1
        cdef uint64_t seen, target, nxt, f, cand
        cdef int v, i
        if not (allowed >> src) & 1 or not (allowed >> dst) & 1:
            return None
        if src == dst:
            return [src]
        layers[0] = <uint64_t>1 << src
        seen = layers[0]
        target = <uint64_t>1 << dst
        while not (seen & target):
            nxt = 0
            f = layers[nl - 1]
            while f:
                nxt |= self.adj[lowbit(f)]
                f &= f - 1
            nxt &= allowed & ~seen
            if nxt == 0:
                return None
            seen |= nxt
            layers[nl] = nxt
            nl += 1
        path = [dst]
        v = dst
        for i in range(nl - 2, -1, -1):
            cand = self.adj[v] & layers[i]
            v = lowbit(cand)
            path.append(v)
        path.reverse()
        return path

    def holes(self, int max_len, long long budget):
        cdef int n = self.n
        cdef int s, p1, k, last, w, top
        cdef uint64_t above, ns, cand, low
        cdef long long steps = 0
        cdef int path[64]
        cdef uint64_t inner[64]
        cdef uint64_t pending[64]
        out = []
        for s in range(n):
            above = self.full & ~((<uint64_t>1 << (s + 1)) - 1) if s < 63 else 0
            ns = self.adj[s]
            cand = ns & above
            while cand:
                p1 = lowbit(cand)
                cand &= cand - 1
                # iterative DFS; pending[d] holds untried extensions at depth d
                path[0] = s
                path[1] = p1
                inner[1] = 0
                k = 2
                pending[1] = self.adj[p1] & above
                while k >= 2:
                    if pending[k - 1] == 0:
                        k -= 1
                        continue
                    w = lowbit(pending[k - 1])
                    pending[k - 1] &= pending[k - 1] - 1
                    low = <uint64_t>1 << w
                    steps += 1
                    if budget >= 0 and steps > budget:
                        raise BudgetExceeded(f"hole enumeration exceeded {budget} steps")
                    if ns & low:
                        if k >= 3 and p1 < w:
                            out.append(tuple([path[i] for i in range(k)]) + (w,))
                        continue
                    if k + 1 < max_len:
                        last = path[k - 1]
                        path[k] = w
                        inner[k] = inner[k - 1] | self.adj[last] | (<uint64_t>1 << last)
                        pending[k] = self.adj[w] & above & ~inner[k]
                        k += 1
        out.sort(key=lambda h: (len(h), h))
        return out

    def minimal_separators_bruteforce(self):
        cdef uint64_t mask
        cdef uint64_t top = self.full
        out = []
        if self.n == 0:
            return out
        mask = 1
        while True:
            if self.c_count_full(mask) >= 2:
                out.append(mask)
            if mask == top:
                break
            mask += 1
        return out

    def is_pmc(self, k):
        return self.c_is_pmc(<uint64_t>(k & self.full))

    def pmc_scan(self):
        cdef uint64_t mask
        cdef uint64_t top = self.full
        out = []
        if self.n == 0:
            return out
        mask = 1
        while True:
            if self.c_is_pmc(mask):
                out.append(mask)
            if mask == top:
                break
            mask += 1
        return out

    def mwis(self, weights):
        cdef int64_t w[64]
        cdef int i
        cdef int64_t total = 0
        for i in range(self.n):
            w[i] = weights[i]
            total += w[i]
        cdef int64_t best_w = -1
        cdef uint64_t best_set = 0
        self._mwis_rec(w, self.full, 0, 0, &best_w, &best_set)
        return best_w, best_set

    cdef void _mwis_rec(self, int64_t* w, uint64_t cand, int64_t cur, uint64_t chosen,
                        int64_t* best_w, uint64_t* best_set) nogil:
        cdef int64_t bound
        cdef uint64_t f, low
        cdef int v
        if cand == 0:
            if cur > best_w[0] or (cur == best_w[0] and c_lex_less(chosen, best_set[0])):
                best_w[0] = cur
                best_set[0] = chosen
            return
        bound = cur
        f = cand
        while f:
            bound += w[lowbit(f)]
            f &= f - 1
        if bound < best_w[0]:
            return
        v = lowbit(cand)
        low = <uint64_t>1 << v
        self._mwis_rec(w, cand & ~self.adj[v] & ~low, cur + w[v], chosen | low, best_w, best_set)
        self._mwis_rec(w, cand & ~low, cur, chosen, best_w, best_set)
