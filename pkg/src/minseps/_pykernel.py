"""Pure-Python bitset kernels.

Every vertex set is a Python ``int`` used as a bitmask (bit ``v`` set means
vertex ``v`` is a member).  The compiled kernel in ``_ckernel.pyx`` exposes
the same class with the same method signatures and results; this module is
the reference and the fallback for graphs with more than 64 vertices.
"""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its configured budget."""


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lex_less(a: int, b: int) -> bool:
    """True iff the ascending member list of ``a`` is lexicographically below ``b``'s."""
    d = a ^ b
    if not d:
        return False
    t = d & -d
    above = ~((t << 1) - 1)
    if a & t:
        return bool(b & above)
    return not (a & above)


class PyKernel:
    backend = "python"

    def __init__(self, adj):
        self.adj = tuple(adj)
        self.n = len(self.adj)
        self.full = (1 << self.n) - 1

    def reach(self, seeds: int, allowed: int) -> int:
        adj = self.adj
        seen = seeds & allowed
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def neighborhood(self, s: int) -> int:
        adj = self.adj
        out = 0
        f = s
        while f:
            low = f & -f
            out |= adj[low.bit_length() - 1]
            f ^= low
        return out & ~s

    def components(self, removed: int) -> list:
        allowed = self.full & ~removed
        rest = allowed
        out = []
        while rest:
            comp = self.reach(rest & -rest, allowed)
            out.append(comp)
            rest &= ~comp
        return out

    def full_components(self, sep: int) -> list:
        return [c for c in self.components(sep)
                if not sep & ~self.neighborhood(c)]

    def count_full(self, sep: int) -> int:
        count = 0
        for c in self.components(sep):
            if not sep & ~self.neighborhood(c):
                count += 1
        return count

    def shortest_path(self, src: int, dst: int, forbidden: int):
        """BFS path; parent of each vertex is its lowest-id predecessor one layer closer."""
        allowed = self.full & ~forbidden
        if not (allowed >> src) & 1 or not (allowed >> dst) & 1:
            return None
        if src == dst:
            return [src]
        adj = self.adj
        layers = [1 << src]
        seen = 1 << src
        target = 1 << dst
        while not seen & target:
            nxt = 0
            f = layers[-1]
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            if not nxt:
                return None
            seen |= nxt
            layers.append(nxt)
        path = [dst]
        v = dst
        for layer in reversed(layers[:-1]):
            cand = adj[v] & layer
            v = (cand & -cand).bit_length() - 1
            path.append(v)
        path.reverse()
        return path

    def holes(self, max_len: int, budget: int) -> list:
        """All holes of length <= max_len, each as its canonical vertex tuple.

        Canonical form starts at the smallest vertex and continues toward
        its smaller hole-neighbour.  Raises BudgetExceeded when more than
        ``budget`` extension steps are needed (budget < 0 disables).
        """
        adj = self.adj
        out = []
        steps = 0
        for s in range(self.n):
            above = self.full & ~((1 << (s + 1)) - 1)
            ns = adj[s]
            for p1 in iter_bits(ns & above):
                # inner = closed neighbourhood of the path minus its two ends
                stack = [([s, p1], 0)]
                while stack:
                    path, inner = stack.pop()
                    k = len(path)
                    last = path[-1]
                    cand = adj[last] & above & ~inner
                    while cand:
                        low = cand & -cand
                        cand ^= low
                        w = low.bit_length() - 1
                        steps += 1
                        if 0 <= budget < steps:
                            raise BudgetExceeded(f"hole enumeration exceeded {budget} steps")
                        if ns & low:
                            if k >= 3 and p1 < w:
                                out.append(tuple(path) + (w,))
                            continue
                        if k + 1 < max_len:
                            stack.append((path + [w], inner | adj[last] | (1 << last)))
        out.sort(key=lambda h: (len(h), h))
        return out

    def minimal_separators_bruteforce(self) -> list:
        out = []
        for mask in range(1, self.full + 1):
            if self.count_full(mask) >= 2:
                out.append(mask)
        return out

    def is_pmc(self, k: int) -> bool:
        if not k:
            return False
        comps = self.components(k)
        nbhds = [self.neighborhood(c) for c in comps]
        for nb in nbhds:
            if nb == k:
                return False
        adj = self.adj
        f = k
        while f:
            low = f & -f
            x = low.bit_length() - 1
            f ^= low
            need = k & ~adj[x] & ~low
            if not need:
                continue
            cover = 0
            for nb in nbhds:
                if nb & low:
                    cover |= nb
            if need & ~cover:
                return False
        return True

    def pmc_scan(self) -> list:
        return [mask for mask in range(1, self.full + 1) if self.is_pmc(mask)]

    def mwis(self, weights):
        """Exact maximum-weight independent set by branch and bound.

        ``weights`` are non-negative integers.  Among optimal sets the one
        with the lexicographically least ascending member list is returned.
        Returns ``(weight, mask)``.
        """
        adj = self.adj
        w = list(weights)
        best = [-1, 0]

        def total(mask):
            t = 0
            while mask:
                low = mask & -mask
                t += w[low.bit_length() - 1]
                mask ^= low
            return t

        def rec(cand, cur, chosen):
            if not cand:
                if cur > best[0] or (cur == best[0] and lex_less(chosen, best[1])):
                    best[0] = cur
                    best[1] = chosen
                return
            if cur + total(cand) < best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            rec(cand & ~adj[v] & ~low, cur + w[v], chosen | low)
            rec(cand & ~low, cur, chosen)

        rec(self.full, 0, 0)
        return best[0], best[1]
