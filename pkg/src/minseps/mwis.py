"""Maximum weighted independent set: exhaustive oracle and the PMC dynamic program.

Weights are exact ``Fraction`` values.  Internally they are scaled to
integers by their common denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from minseps._backend import make_kernel
from minseps._pykernel import PyKernel
from minseps.graph import Graph, WeightedGraph, is_independent, mask_of, members

BRUTE_LIMIT = 24


class IntegrityError(RuntimeError):
    """The separator or PMC lists do not cover a block the DP needs."""


@dataclass(frozen=True, order=True)
class PotentialMaximalClique:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


@dataclass(frozen=True)
class MwisResult:
    vertices: tuple
    weight: Fraction

    def to_json(self, offset: int = 0) -> dict:
        w = self.weight
        return {"weight": str(w) if w.denominator != 1 else w.numerator,
                "set": [v + offset for v in self.vertices]}


def _scaled(weights) -> tuple:
    """Integer weights and the common denominator."""
    fr = [Fraction(w) for w in weights]
    den = 1
    for w in fr:
        den = den * w.denominator // math.gcd(den, w.denominator)
    return [int(w * den) for w in fr], den


def _check(wg: WeightedGraph, res: MwisResult) -> MwisResult:
    if not is_independent(wg.graph, res.vertices):
        raise AssertionError(f"returned set {res.vertices} is not independent")
    if sum((wg.weights[v] for v in res.vertices), Fraction(0)) != res.weight:
        raise AssertionError("returned weight does not match the set")
    return res


def brute_force_mwis(wg: WeightedGraph) -> MwisResult:
    """Branch and bound; ties go to the lexicographically least vertex list."""
    g = wg.graph
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"exhaustive MWIS limited to n <= {BRUTE_LIMIT} (got {g.n})")
    ints, den = _scaled(wg.weights)
    if sum(ints) < 2 ** 62:
        kernel = g.kernel
    else:
        kernel = PyKernel(g.adj)
    best, mask = kernel.mwis(ints)
    return _check(wg, MwisResult(members(mask), Fraction(best, den)))


# --- potential maximal cliques ----------------------------------------------

def is_pmc(g: Graph, k: Iterable[int]) -> bool:
    """No full component, and every non-adjacent pair of ``k`` is seen by one component."""
    return g.kernel.is_pmc(mask_of(k))


def _bfs_order(g: Graph, comp: int) -> list:
    start = (comp & -comp).bit_length() - 1
    order = [start]
    seen = 1 << start
    for v in order:
        for u in members(g.adj[v] & comp & ~seen):
            seen |= 1 << u
            order.append(u)
    return order


def _pmcs_connected(g: Graph, comp: int, sep_masks: set) -> set:
    """PMCs inside one connected component, adding one vertex at a time."""
    order = _bfs_order(g, comp)
    first = order[0]
    pmcs = {1 << first}
    prev_seps = set()
    prefix = 1 << first
    for a in order[1:]:
        low = 1 << a
        nxt = prefix | low
        sub = make_kernel([adj & nxt if (nxt >> v) & 1 else 0
                           for v, adj in enumerate(g.adj)])
        removed = g.full & ~nxt

        def is_sep(s, sub=sub, removed=removed):
            return s and sum(1 for c in sub.components(s | removed)
                             if not s & ~sub.neighborhood(c)) >= 2

        seps = {s & nxt for s in sep_masks}
        seps = {s for s in seps if is_sep(s)}
        cands = set()
        for om in pmcs:
            cands.add(om)
            cands.add(om | low)
        for s in seps:
            cands.add(s | low)
            comps = sub.components(s | removed)
            for t in prev_seps | seps:
                for c in comps:
                    cands.add(s | (t & c))
        pmcs = {c for c in cands if c and sub.is_pmc(c)}
        prev_seps = seps
        prefix = nxt
    return pmcs


def enumerate_pmcs(g: Graph, seps) -> list:
    """All potential maximal cliques, given all minimal separators of ``g``.

    Each connected component is grown one vertex at a time in BFS order; the
    separators of every prefix are traces of the given separators.
    """
    sep_masks = {s.mask if hasattr(s, "mask") else mask_of(s) for s in seps}
    found = set()
    for comp in g.kernel.components(0):
        inside = {s for s in sep_masks if not s & ~comp}
        found |= _pmcs_connected(g, comp, inside)
    return sorted(PotentialMaximalClique(members(m)) for m in found)


def pmc_scan(g: Graph) -> list:
    """Exhaustive PMC list over all vertex subsets (small n only)."""
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"exhaustive PMC scan limited to n <= {BRUTE_LIMIT}")
    return sorted(PotentialMaximalClique(members(m)) for m in g.kernel.pmc_scan())


# --- dynamic program ----------------------------------------------------------

def mwis_via_pmc(wg: WeightedGraph, pmcs, seps) -> MwisResult:
    """Exact MWIS by dynamic programming over (separator, component) blocks.

    Some minimal triangulation keeps the optimum independent, so every PMC
    and separator on the way holds at most one chosen vertex; a block's
    state is which separator vertex (if any) is chosen.
    """
    g = wg.graph
    if g.n == 0:
        return MwisResult((), Fraction(0))
    k = g.kernel
    ints, den = _scaled(wg.weights)
    n = g.n
    # ties: strictly positive weights prefer the smaller vertex
    wt = [(w << n) + (1 << (n - 1 - v)) if w > 0 else (w << n) for v, w in enumerate(ints)]
    pmc_masks = sorted({p.mask if hasattr(p, "mask") else mask_of(p) for p in pmcs})
    sep_masks = {s.mask if hasattr(s, "mask") else mask_of(s) for s in seps}
    memo = {}
    NONE = -1

    def components_of(c, omega):
        rest = c & ~omega
        return k.components(g.full & ~rest)

    def combine(omega, parts, y):
        val, chosen = 0, 0
        if y != NONE:
            chosen = 1 << y
        for s, d in parts:
            v, m = block(s, d)[y if y != NONE and (s >> y) & 1 else NONE]
            val += v
            chosen |= m
        return val, chosen

    def best_in(omega, parts, options, base_weight):
        best = None
        for y in options:
            v, m = combine(omega, parts, y)
            if y != NONE and base_weight:
                v += wt[y]
            if best is None or v > best[0]:
                best = (v, m)
        return best

    def parts_for(c, omega):
        out = []
        for d in components_of(c, omega):
            s = k.neighborhood(d)
            if s and s not in sep_masks:
                raise IntegrityError(f"separator {members(s)} missing from the input list")
            out.append((s, d))
        return out

    def block(s, c):
        key = (s, c)
        if key in memo:
            return memo[key]
        inside = s | c
        table = {}
        found = False
        for omega in pmc_masks:
            if omega & ~inside or omega == s or s & ~omega:
                continue
            found = True
            parts = parts_for(c, omega)
            for x in [NONE] + list(members(s)):
                if x == NONE:
                    opts = [NONE] + list(members(omega & ~s))
                    cand = best_in(omega, parts, opts, True)
                else:
                    cand = best_in(omega, parts, [x], False)
                if x not in table or cand[0] > table[x][0]:
                    table[x] = cand
        if not found:
            raise IntegrityError(f"no PMC covers block {members(s)} | {members(c)}")
        memo[key] = table
        return table

    best = None
    for omega in pmc_masks:
        parts = parts_for(g.full, omega)
        cand = best_in(omega, parts, [NONE] + list(members(omega)), True)
        if best is None or cand[0] > best[0]:
            best = cand
    if best is None:
        raise IntegrityError("no potential maximal clique supplied")
    chosen = best[1]
    weight = Fraction(sum(ints[v] for v in members(chosen)), den)
    return _check(wg, MwisResult(members(chosen), weight))


def mwis_classC(wg: WeightedGraph, jobs: int = 1) -> MwisResult:
    """Class-C pipeline: separators, then PMCs, then the block DP."""
    from minseps.classc import enumerate_all_minimal_separators_classC

    seps = enumerate_all_minimal_separators_classC(wg.graph, jobs=jobs)
    pmcs = enumerate_pmcs(wg.graph, seps)
    return mwis_via_pmc(wg, pmcs, seps)
