"""Enumeration of all minimal separators of graphs in class C.

Two enumerators (``LL`` and ``LR``) each guess a pair of non-adjacent
separator vertices, a 4-tuple of their hole neighbours and two more
"anchor" vertices, then grow a candidate set deterministically and keep it
if it is a proper separator.  Their union with the clique minimal
separators is every minimal separator of a class-C graph.  On other graphs
every output is still a genuine minimal separator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from minseps.configs import Hole
from minseps.graph import Graph, mask_of, members
from minseps.separators import clique_minimal_separators, record_from_mask

VARIANTS = ("LL", "LR")


@dataclass
class CHoleContext:
    """Branch-local state at one leaf of the enumeration (masks throughout)."""

    c1: int
    c2: int
    l1: int
    r1: int
    l2: int
    r2: int
    heavy: int = 0
    hole: Hole | None = None
    majors: int = 0
    L1: int = 0
    R1: int = 0
    L2: int = 0
    R2: int = 0
    C1: int = 0
    C2: int = 0
    base: int = 0  # C after step 5
    anchors: tuple = ()
    closure1: int = 0
    closure2: int = 0
    added1: int = 0
    added2: int = 0
    C: int = 0
    variant: str = "LL"


def _is_clique_mask(adj, m: int) -> bool:
    f = m
    while f:
        low = f & -f
        f ^= low
        if (m & ~low) & ~adj[low.bit_length() - 1]:
            return False
    return True


def step3_heavy_closure(g: Graph, c1: int, c2: int) -> tuple:
    """Vertices v outside {c1, c2} whose closed neighbourhood, minus c1 and c2,
    separates c1 from c2."""
    return members(_heavy_mask(g, c1, c2))


def _heavy_mask(g: Graph, c1: int, c2: int) -> int:
    adj = g.adj
    k = g.kernel
    keep = (1 << c1) | (1 << c2)
    out = 0
    for v in range(g.n):
        if v == c1 or v == c2:
            continue
        removed = (adj[v] | (1 << v)) & ~keep
        if not (k.reach(1 << c1, g.full & ~removed) >> c2) & 1:
            out |= 1 << v
    return out


def _hole_from_paths(g: Graph, c1, c2, hl, hr):
    cycle = [c1] + list(hr) + [c2] + list(reversed(hl))
    if len(set(cycle)) != len(cycle) or len(cycle) < 4:
        return None
    adj = g.adj
    m = mask_of(cycle)
    k = len(cycle)
    for i, v in enumerate(cycle):
        want = (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % k])
        if adj[v] & m != want:
            return None
    return Hole.from_cycle(cycle)


def step4_clean_hole(g: Graph, C, c1: int, c2: int, l1: int, r1: int, l2: int, r2: int):
    """The hole c1 r1 .. r2 c2 l2 .. l1 built from two shortest paths, or None."""
    cmask = C if isinstance(C, int) else mask_of(C)
    return _step4(g, cmask, c1, c2, l1, r1, l2, r2)


def _step4(g, cmask, c1, c2, l1, r1, l2, r2):
    adj = g.adj
    k = g.kernel
    tup = (1 << l1) | (1 << r1) | (1 << l2) | (1 << r2)
    forbidden = (cmask | adj[c1] | adj[c2]) & ~tup
    hl = k.shortest_path(l1, l2, forbidden)
    if hl is None:
        return None
    hr = k.shortest_path(r1, r2, forbidden)
    if hr is None:
        return None
    return _hole_from_paths(g, c1, c2, hl, hr)


def _majors_and_profiles(g: Graph, hole: Hole):
    """Mask of vertices major w.r.t. the hole, and N_H for every vertex."""
    adj = g.adj
    hm = hole.mask
    cyc = hole.cycle
    L = len(cyc)
    windows = [(1 << cyc[i - 1]) | (1 << cyc[i]) | (1 << cyc[(i + 1) % L]) for i in range(L)]
    majors = 0
    prof = [adj[v] & hm for v in range(g.n)]
    for v in range(g.n):
        if (hm >> v) & 1:
            continue
        nh = prof[v]
        if all(nh & ~w for w in windows):
            majors |= 1 << v
    return majors, prof, windows


def _clone_mask(g, hole, prof, y) -> int:
    i = hole.index(y)
    cyc = hole.cycle
    want = (1 << cyc[i - 1]) | (1 << y) | (1 << cyc[(i + 1) % len(cyc)])
    hm = hole.mask
    out = 1 << y
    for v in range(g.n):
        if not (hm >> v) & 1 and prof[v] == want:
            out |= 1 << v
    return out


def _touching_both(g, a: int, b: int, exclude: int) -> int:
    adj = g.adj
    out = 0
    for v in range(g.n):
        if adj[v] & a and adj[v] & b and not (exclude >> v) & 1:
            out |= 1 << v
    return out


def _cliques_ok(adj, L1, C1, R1, L2, C2, R2) -> bool:
    eq_l = L1 == L2
    eq_r = R1 == R2
    if eq_l and eq_r:
        return False
    sets = [L1, C1, R1, L2, C2, R2]
    for s in sets:
        if not _is_clique_mask(adj, s):
            return False
    for i, j in combinations(range(6), 2):
        if (i, j) == (0, 3) and eq_l or (i, j) == (2, 5) and eq_r:
            continue
        if sets[i] & sets[j]:
            return False
    return True


def _monotone_closure(adj, cands: int, side: int, anchor: int) -> int:
    need = adj[anchor] & side
    out = 0
    f = cands
    while f:
        low = f & -f
        f ^= low
        x = low.bit_length() - 1
        if not need & ~adj[x]:
            out |= low
    return out


def _path_starts(g, C: int, hole_mask: int, ci: int, starts: int, targets: int,
                 avoid: int, trace_paths: list | None = None) -> int:
    """Vertices c of ``starts - C`` joined to ``targets - C`` by a path whose
    interior avoids C, the hole and ``avoid``, and has no neighbour on the
    hole except ``ci`` and the path's own two ends."""
    adj = g.adj
    k = g.kernel
    free = g.full & ~(C | hole_mask | avoid)
    tgt = targets & ~C
    out = 0
    f = starts & ~C
    while f:
        low = f & -f
        f ^= low
        c = low.bit_length() - 1
        rest = hole_mask & ~(1 << ci) & ~low
        for group in (tgt & ~hole_mask & ~low, tgt & hole_mask & ~low):
            g_rest = rest & ~group
            # an on-hole target is a single vertex; off-hole ones share a search
            touch = _adj_union(adj, g_rest)
            interior = free & ~touch
            if not group:
                continue
            reach = k.reach(adj[c] & interior, interior)
            hit = (adj[c] | k.neighborhood(reach)) & group
            if hit:
                out |= low
                if trace_paths is not None:
                    t = (hit & -hit).bit_length() - 1
                    p = k.shortest_path(c, t, g.full & ~(interior | low | (1 << t)))
                    trace_paths.append((c, tuple(p)))
                break
    return out


def _adj_union(adj, m: int) -> int:
    out = 0
    while m:
        low = m & -m
        m ^= low
        out |= adj[low.bit_length() - 1]
    return out


def _pair_tuples(g: Graph, c1: int, c2: int):
    adj = g.adj
    n1 = members(adj[c1])
    n2 = members(adj[c2])
    p1 = [(l, r) for l in n1 for r in n1 if l != r and not (adj[l] >> r) & 1]
    p2 = [(l, r) for l in n2 for r in n2 if l != r and not (adj[l] >> r) & 1]
    for l1, r1 in p1:
        for l2, r2 in p2:
            ls = (1 << l1) | (1 << l2)
            rs = (1 << r1) | (1 << r2)
            if ls & rs:
                continue
            if adj[l1] & rs or adj[l2] & rs:
                continue
            yield l1, r1, l2, r2


def _run_pair(g: Graph, c1: int, c2: int, variants, stats: dict, trace=None) -> set:
    adj = g.adj
    found = set()
    heavy = _heavy_mask(g, c1, c2)
    start = (1 << c1) | (1 << c2) | heavy
    for l1, r1, l2, r2 in _pair_tuples(g, c1, c2):
        stats["tuples"] += 1
        tup = (1 << l1) | (1 << r1) | (1 << l2) | (1 << r2)
        if tup & start:
            stats["discard_heavy"] += 1
            continue
        hole = _step4(g, start, c1, c2, l1, r1, l2, r2)
        if hole is None:
            stats["discard_hole"] += 1
            continue
        majors, prof, _ = _majors_and_profiles(g, hole)
        base = start | majors
        L1 = _clone_mask(g, hole, prof, l1)
        R1 = _clone_mask(g, hole, prof, r1)
        L2 = _clone_mask(g, hole, prof, l2)
        R2 = _clone_mask(g, hole, prof, r2)
        C1 = _touching_both(g, L1, R1, majors)
        C2 = _touching_both(g, L2, R2, majors)
        if not _cliques_ok(adj, L1, C1, R1, L2, C2, R2):
            stats["discard_cliques"] += 1
            continue
        hm = hole.mask
        for variant in variants:
            side2 = L2 if variant == "LL" else R2
            for a1 in members(C1):
                clos1 = _monotone_closure(adj, C1, L1, a1)
                for a2 in members(C2):
                    stats["leaves"] += 1
                    clos2 = _monotone_closure(adj, C2, side2, a2)
                    C = base | clos1 | clos2
                    paths = [] if trace is not None else None
                    add1 = _path_starts(g, C, hm, c1, L1, R1, L1 | R1, paths)
                    C |= add1
                    if variant == "LL":
                        add2 = _path_starts(g, C, hm, c2, L2, R2, L2 | R2, paths)
                    else:
                        add2 = _path_starts(g, C, hm, c2, R2, L2, L2 | R2, paths)
                    C |= add2
                    rec = record_from_mask(g, C)
                    ok = rec is not None and not _is_clique_mask(adj, C)
                    if trace is not None:
                        ctx = CHoleContext(c1, c2, l1, r1, l2, r2, heavy, hole, majors,
                                           L1, R1, L2, R2, C1, C2, base, (a1, a2),
                                           clos1, clos2, add1, add2, C, variant)
                        trace("leaf", ctx, {"proper": ok, "paths": paths})
                    if not ok:
                        stats["discard_not_proper"] += 1
                        continue
                    stats["emitted"] += 1
                    found.add(C)
    return found


def _new_stats() -> dict:
    return {"pairs": 0, "tuples": 0, "discard_heavy": 0, "discard_hole": 0,
            "discard_cliques": 0, "leaves": 0, "discard_not_proper": 0, "emitted": 0}


def _merge(into: dict, other: dict):
    for key, val in other.items():
        into[key] = into.get(key, 0) + val


def _pairs(g: Graph):
    adj = g.adj
    return [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if not (adj[a] >> b) & 1]


def _run_chunk(g: Graph, pairs, variants):
    stats = _new_stats()
    found = set()
    for c1, c2 in pairs:
        stats["pairs"] += 1
        found |= _run_pair(g, c1, c2, variants, stats)
    return found, stats


def _run(g: Graph, variants, jobs: int, stats: dict | None, trace) -> set:
    pairs = _pairs(g)
    local = _new_stats()
    found = set()
    if jobs > 1 and trace is None and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        chunks = [pairs[i::jobs * 4] for i in range(min(len(pairs), jobs * 4))]
        with ProcessPoolExecutor(jobs) as pool:
            for part, st in pool.map(_run_chunk, [g] * len(chunks), chunks,
                                     [variants] * len(chunks)):
                found |= part
                _merge(local, st)
    else:
        for c1, c2 in pairs:
            local["pairs"] += 1
            found |= _run_pair(g, c1, c2, variants, local, trace)
    n = g.n
    assert len(found) <= max(n, 1) ** 8, "output exceeds the n^8 bound"
    if stats is not None:
        local["unique"] = len(found)
        local["dedup_ratio"] = (local["emitted"] / len(found)) if found else 0.0
        _merge(stats, local)
    return found


def run_A(g: Graph, variant: str = "LL", trace=None, stats: dict | None = None,
          jobs: int = 1) -> list:
    """One enumerator.  ``trace(event, ctx, info)`` is called at every leaf."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    found = _run(g, (variant,), jobs, stats, trace)
    return sorted(record_from_mask(g, m) for m in found)


def enumerate_all_minimal_separators_classC(g: Graph, jobs: int = 1,
                                            stats: dict | None = None,
                                            trace=None) -> list:
    """Both enumerators plus the clique minimal separators, deduplicated."""
    found = _run(g, VARIANTS, jobs, stats, trace)
    clique = clique_minimal_separators(g)
    if stats is not None:
        stats["clique_separators"] = len(clique)
    out = {record_from_mask(g, m) for m in found}
    out.update(clique)
    return sorted(out)
