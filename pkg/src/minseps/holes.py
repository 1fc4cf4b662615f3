"""Vertices relative to a hole: classification, sectors, nesting, clones.

Also the decomposition check around a major vertex: every component of
``G - N[w]`` attaches to the hole only at the two ends of one ``w``-sector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from minseps.configs import Hole, enumerate_holes
from minseps.graph import Graph, mask_of, members

NO_NEIGHBOR = "no-neighbor"
PENDING = "pending"
CAP = "cap"
CLONE = "clone"
MAJOR = "major"
IRREGULAR = "irregular"


@dataclass(frozen=True)
class HoleRelativeClass:
    tag: str
    neighbors: tuple
    center: int | None = None  # set for clones only


class Sector(NamedTuple):
    path: tuple

    @property
    def ends(self):
        return self.path[0], self.path[-1]


def _as_hole(h) -> Hole:
    return h if isinstance(h, Hole) else Hole(tuple(h))


def _inside_three_path(h: Hole, nh: int) -> bool:
    cyc = h.cycle
    k = len(cyc)
    for i in range(k):
        window = (1 << cyc[i - 1]) | (1 << cyc[i]) | (1 << cyc[(i + 1) % k])
        if not nh & ~window:
            return True
    return False


def is_major(g: Graph, h, u: int) -> bool:
    h = _as_hole(h)
    if u in h:
        return False
    return not _inside_three_path(h, g.adj[u] & h.mask)


def classify(g: Graph, h, u: int) -> HoleRelativeClass:
    h = _as_hole(h)
    if u in h:
        raise ValueError(f"vertex {u} lies on the hole")
    nh = g.adj[u] & h.mask
    nbrs = members(nh)
    cnt = len(nbrs)
    if cnt == 0:
        return HoleRelativeClass(NO_NEIGHBOR, nbrs)
    if cnt == 1:
        return HoleRelativeClass(PENDING, nbrs)
    if not _inside_three_path(h, nh):
        return HoleRelativeClass(MAJOR, nbrs)
    if cnt == 2 and g.has_edge(*nbrs):
        return HoleRelativeClass(CAP, nbrs)
    if cnt == 3:
        cyc = h.cycle
        k = len(cyc)
        for i, y in enumerate(cyc):
            if nh == (1 << cyc[i - 1]) | (1 << y) | (1 << cyc[(i + 1) % k]):
                return HoleRelativeClass(CLONE, nbrs, y)
    return HoleRelativeClass(IRREGULAR, nbrs)


def sectors(g: Graph, h, u: int) -> list:
    h = _as_hole(h)
    cyc = h.cycle
    pos = [i for i, v in enumerate(cyc) if g.has_edge(u, v)]
    if u in h or len(pos) < 2:
        raise ValueError("sectors need a vertex off the hole with at least two hole neighbours")
    out = []
    for a, b in zip(pos, pos[1:] + pos[:1]):
        out.append(Sector(h.arc(a, b)))
    return out


def are_nested(g: Graph, h, u: int, v: int) -> bool:
    """Some split of the hole at two vertices puts N_H(u) and N_H(v) on opposite sides."""
    h = _as_hole(h)
    nu = g.adj[u] & h.mask
    nv = g.adj[v] & h.mask
    k = len(h)
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            one = mask_of(h.arc(i, j))
            other = mask_of(h.arc(j, i))
            if not nu & ~one and not nv & ~other:
                return True
    return False


def clones_of(g: Graph, h, y: int) -> tuple:
    h = _as_hole(h)
    if y not in h:
        raise ValueError(f"vertex {y} is not on the hole")
    out = [y]
    for u in range(g.n):
        if u not in h:
            c = classify(g, h, u)
            if c.tag == CLONE and c.center == y:
                out.append(u)
    return tuple(sorted(out))


class DecompositionCheck(NamedTuple):
    ok: bool
    failing_component: tuple | None


def check_decomposition(g: Graph, h, w: int) -> DecompositionCheck:
    """Each component C of G - N[w] must satisfy N(C) <= {x, y} + (N(w) - V(H))
    for some w-sector x..y of the hole."""
    h = _as_hole(h)
    if not is_major(g, h, w):
        raise ValueError(f"vertex {w} is not major w.r.t. the hole")
    k = g.kernel
    closed = g.adj[w] | (1 << w)
    off_hole = g.adj[w] & ~h.mask
    ends = [mask_of(s.ends) for s in sectors(g, h, w)]
    for comp in k.components(closed):
        nc = k.neighborhood(comp)
        if not any(not nc & ~(e | off_hole) for e in ends):
            return DecompositionCheck(False, members(comp))
    return DecompositionCheck(True, None)


def verify_decomposition(g: Graph, max_len: int = 12, budget: int | None = None) -> dict:
    """Run the decomposition check over every (hole, major vertex) pair."""
    checked = 0
    failures = []
    for h in enumerate_holes(g, max_len, budget):
        for w in range(g.n):
            if is_major(g, h, w):
                checked += 1
                res = check_decomposition(g, h, w)
                if not res.ok:
                    failures.append({"hole": h.cycle, "major": w,
                                     "component": res.failing_component})
    return {"checked": checked, "failures": failures}
