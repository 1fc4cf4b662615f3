"""Separators of graphs without a large semi-induced matching.

If ``g`` has no k-semi-induced matching, every minimal separator equals
``N(A) & N(B)`` for two vertex sets of size below ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from minseps.graph import Graph
from minseps.separators import record_from_mask


@dataclass(frozen=True)
class SemiMatchingWitness:
    X: tuple
    Y: tuple

    def is_valid(self, g: Graph) -> bool:
        if len(self.X) != len(self.Y) or len(set(self.X) | set(self.Y)) != 2 * len(self.X):
            return False
        for i, x in enumerate(self.X):
            for j, y in enumerate(self.Y):
                if g.has_edge(x, y) != (i == j):
                    return False
        return True


def find_semi_induced_matching(g: Graph, k: int) -> SemiMatchingWitness | None:
    """Backtracking search; pairs are added with increasing x and x_1 minimal."""
    if k <= 0:
        return SemiMatchingWitness((), ())
    adj = g.adj
    arcs = [(x, y) for x in range(g.n) for y in g.neighbors(x)]
    xs, ys = [], []

    def rec(start, used, xmask, ymask):
        if len(xs) == k:
            return True
        for i in range(start, len(arcs)):
            x, y = arcs[i]
            if xs and x <= xs[-1]:
                continue
            if not xs and y < x:
                continue
            if (used >> x) & 1 or (used >> y) & 1:
                continue
            if adj[x] & ymask or adj[y] & xmask:
                continue
            xs.append(x)
            ys.append(y)
            if rec(i + 1, used | 1 << x | 1 << y, xmask | 1 << x, ymask | 1 << y):
                return True
            xs.pop()
            ys.pop()
        return False

    if rec(0, 0, 0, 0):
        return SemiMatchingWitness(tuple(xs), tuple(ys))
    return None


def _neighbourhoods(g: Graph, k: int) -> list:
    nb = g.kernel.neighborhood
    out = []
    for size in range(1, k):
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(nb(m))
    return out


def _scan(g: Graph, nbhds: list, lo: int, hi: int) -> set:
    seen = set()
    for i in range(lo, hi):
        a = nbhds[i]
        for j in range(i, len(nbhds)):
            seen.add(a & nbhds[j])
    return seen


def enumerate_separators_semimatching(g: Graph, k: int, jobs: int = 1,
                                      stats: dict | None = None) -> list:
    """Every ``N(A) & N(B)`` with ``1 <= |A|, |B| <= k-1`` that is a minimal separator."""
    if k < 2:
        raise ValueError("k must be at least 2")
    nbhds = _neighbourhoods(g, k)
    if jobs > 1 and len(nbhds) > 1:
        from concurrent.futures import ProcessPoolExecutor
        step = -(-len(nbhds) // jobs)
        candidates = set()
        with ProcessPoolExecutor(jobs) as pool:
            futs = [pool.submit(_scan, g, nbhds, lo, min(lo + step, len(nbhds)))
                    for lo in range(0, len(nbhds), step)]
            for f in futs:
                candidates |= f.result()
    else:
        candidates = _scan(g, nbhds, 0, len(nbhds))
    out = []
    for c in candidates:
        rec = record_from_mask(g, c)
        if rec is not None:
            out.append(rec)
    if stats is not None:
        stats["set_pairs"] = len(nbhds) * (len(nbhds) + 1) // 2
        stats["distinct_candidates"] = len(candidates)
        stats["separators"] = len(out)
    return sorted(out)
