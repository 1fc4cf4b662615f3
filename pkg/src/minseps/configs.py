"""Detection of holes and Truemper-type configurations with explicit witnesses.

Everything here is exhaustive: holes are enumerated by DFS over induced
paths, and every 3-path configuration is found as a hole plus one extra path
whose interior is anticomplete to the hole.  Intended for graphs of a few
dozen vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from minseps._pykernel import BudgetExceeded, iter_bits
from minseps.graph import Graph, mask_of

__all__ = [
    "BudgetExceeded", "Hole", "ConfigurationWitness", "ClassReport", "KINDS",
    "enumerate_holes", "is_hole", "find_config", "verify_witness", "is_in_class_C",
    "default_budget",
]

KINDS = ("square", "theta", "pyramid", "prism", "wheel", "even-wheel", "turtle", "even-hole")
CLASS_C_OBSTRUCTIONS = ("square", "prism", "pyramid", "theta", "even-wheel")


def default_budget() -> int:
    return int(os.environ.get("MINSEPS_HOLE_BUDGET", "20000000"))


@dataclass(frozen=True, order=True)
class Hole:
    """Induced cycle on at least four vertices, stored in canonical rotation."""

    cycle: tuple

    @classmethod
    def from_cycle(cls, cycle) -> "Hole":
        cyc = list(cycle)
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
        if len(cyc) > 2 and cyc[-1] < cyc[1]:
            cyc = [cyc[0]] + cyc[:0:-1]
        return cls(tuple(cyc))

    def __len__(self):
        return len(self.cycle)

    def __iter__(self):
        return iter(self.cycle)

    def __contains__(self, v):
        return v in self.cycle

    @property
    def mask(self) -> int:
        return mask_of(self.cycle)

    def index(self, v: int) -> int:
        return self.cycle.index(v)

    def arc(self, i: int, j: int) -> tuple:
        """Vertices from position i forward to position j, inclusive."""
        k = len(self.cycle)
        out = [self.cycle[i]]
        while i != j:
            i = (i + 1) % k
            out.append(self.cycle[i])
        return tuple(out)

    def edges(self):
        k = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]


def is_hole(g: Graph, cycle) -> bool:
    cyc = list(cycle)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    m = mask_of(cyc)
    for i, v in enumerate(cyc):
        want = (1 << cyc[i - 1]) | (1 << cyc[(i + 1) % k])
        if g.adj[v] & m != want:
            return False
    return True


def enumerate_holes(g: Graph, max_len: int | None = None, budget: int | None = None) -> list:
    """Every hole of length <= max_len exactly once, sorted by (length, cycle).

    Raises BudgetExceeded when the search needs more than ``budget`` steps.
    """
    if max_len is None:
        max_len = g.n
    if budget is None:
        budget = default_budget()
    return [Hole(c) for c in g.kernel.holes(max_len, budget)]


@dataclass
class ConfigurationWitness:
    kind: str
    parts: dict = field(default_factory=dict)

    def to_json(self, offset: int = 0) -> dict:
        def conv(value):
            if isinstance(value, int):
                return value + offset
            return [v + offset for v in value]
        return {"kind": self.kind, "parts": {k: conv(v) for k, v in self.parts.items()}}


@dataclass
class ClassReport:
    in_class: object  # True, False or "inconclusive"
    witness: ConfigurationWitness | None = None

    def to_json(self, offset: int = 0) -> dict:
        return {"in_class": self.in_class,
                "witness": None if self.witness is None else self.witness.to_json(offset)}


# --- searching ---------------------------------------------------------------

def _hole_profile(g: Graph, hole: Hole) -> list:
    """N_H(v) as a mask for every vertex (0 for hole vertices)."""
    hm = hole.mask
    return [0 if (hm >> v) & 1 else g.adj[v] & hm for v in range(g.n)]


def _attach_path(g: Graph, prof: list, hm: int, a_mask: int, b_mask: int,
                 single_ok: bool):
    """Induced path x..y with N_H(x)=A, N_H(y)=B and interior anticomplete to H.

    With ``single_ok`` a single vertex whose hole-neighbourhood is A|B also
    qualifies.  Returns the vertex list or None.
    """
    n = g.n
    if single_ok:
        for v in range(n):
            if not (hm >> v) & 1 and prof[v] == a_mask | b_mask:
                return [v]
    xs = [v for v in range(n) if not (hm >> v) & 1 and prof[v] == a_mask]
    ymask = mask_of(v for v in range(n) if not (hm >> v) & 1 and prof[v] == b_mask)
    if not xs or not ymask:
        return None
    zmask = mask_of(v for v in range(n) if not (hm >> v) & 1 and prof[v] == 0)
    adj = g.adj
    for x in xs:
        layers = [1 << x]
        seen = 1 << x
        while True:
            layer = layers[-1]
            reach = 0
            for u in iter_bits(layer):
                reach |= adj[u]
            hit = reach & ymask
            if hit:
                y = (hit & -hit).bit_length() - 1
                path = [y]
                v = y
                for lay in reversed(layers):
                    c = adj[v] & lay
                    v = (c & -c).bit_length() - 1
                    path.append(v)
                path.reverse()
                return path
            nxt = reach & zmask & ~seen
            if not nxt:
                break
            seen |= nxt
            layers.append(nxt)
    return None


def _find_theta(g, hole, prof):
    hm = hole.mask
    k = len(hole)
    cyc = hole.cycle
    pairs = sorted((min(cyc[i], cyc[j]), max(cyc[i], cyc[j]), i, j)
                   for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1))
    for _, _, i, j in pairs:
        a, b = cyc[i], cyc[j]
        p = _attach_path(g, prof, hm, 1 << a, 1 << b, True)
        if p is None:
            continue
        if prof[p[0]] != 1 << a:
            p = p[::-1]
        return ConfigurationWitness("theta", {
            "a": a, "b": b,
            "P1": hole.arc(i, j),
            "P2": hole.arc(j, i)[::-1],
            "P3": tuple([a] + p + [b]),
        })
    return None


def _find_pyramid(g, hole, prof):
    hm = hole.mask
    k = len(hole)
    cyc = hole.cycle
    for e in range(k):
        i1, i2 = e, (e + 1) % k
        b1, b2 = cyc[i1], cyc[i2]
        for ia in range(k):
            if ia in (i1, i2):
                continue
            a = cyc[ia]
            short = g.has_edge(a, b1) or g.has_edge(a, b2)
            p = _attach_path(g, prof, hm, 1 << a, (1 << b1) | (1 << b2), not short)
            if p is None:
                continue
            if len(p) > 1 and prof[p[0]] != 1 << a:
                p = p[::-1]
            # walking forward from a meets b1 before b2
            p1 = hole.arc(ia, i1)
            p2 = hole.arc(i2, ia)[::-1]
            return ConfigurationWitness("pyramid", {
                "a": a, "b": (b1, b2, p[-1]),
                "P1": tuple(p1), "P2": tuple(p2), "P3": tuple([a] + p),
            })
    return None


def _find_prism(g, hole, prof):
    hm = hole.mask
    k = len(hole)
    cyc = hole.cycle
    for i in range(k):
        for j in range(i + 2, k):
            if (j + 1) % k == i:
                continue
            a_pair = (1 << cyc[i]) | (1 << cyc[i + 1])
            b_pair = (1 << cyc[j]) | (1 << cyc[(j + 1) % k])
            p = _attach_path(g, prof, hm, a_pair, b_pair, False)
            if p is None:
                continue
            return ConfigurationWitness("prism", {
                "a": (cyc[i + 1], cyc[i], p[0]),
                "b": (cyc[j], cyc[(j + 1) % k], p[-1]),
                "P1": hole.arc(i + 1, j),
                "P2": hole.arc((j + 1) % k, i)[::-1],
                "P3": tuple(p),
            })
    return None


def _find_wheel(g, hole, prof, even):
    for v in range(g.n):
        c = bin(prof[v]).count("1")
        if c >= 3 and (not even or c % 2 == 0):
            return ConfigurationWitness("even-wheel" if even else "wheel",
                                        {"rim": hole.cycle, "center": v})
    return None


def _find_turtle(g, hole, prof):
    k = len(hole)
    cyc = hole.cycle
    hm = hole.mask
    for x in range(g.n):
        if (hm >> x) & 1 or bin(prof[x]).count("1") < 3:
            continue
        for y in iter_bits(g.adj[x] & ~hm):
            if bin(prof[y]).count("1") < 3 or prof[x] & prof[y]:
                continue
            for i in range(k):
                for j in range(i + 2, k):
                    arc1 = hole.arc(i, j)
                    arc2 = hole.arc(j, i)
                    in1 = mask_of(arc1[1:-1])
                    in2 = mask_of(arc2[1:-1])
                    if not prof[x] & ~in1 and not prof[y] & ~in2:
                        return ConfigurationWitness("turtle", {
                            "u": cyc[i], "v": cyc[j], "P1": arc1,
                            "P2": arc2[::-1], "x": x, "y": y})
    return None


def find_config(g: Graph, kind: str, budget: int | None = None, holes=None):
    """First witness of ``kind`` in hole order, or None.

    ``holes`` may pass a precomputed full hole list.  BudgetExceeded
    propagates when hole enumeration runs out of budget.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown configuration kind {kind!r}")
    if kind == "square":
        hs = holes if holes is not None else enumerate_holes(g, 4, budget)
        for h in hs:
            if len(h) == 4:
                return ConfigurationWitness("square", {"hole": h.cycle})
        return None
    if holes is None:
        holes = enumerate_holes(g, None, budget)
    if kind == "even-hole":
        for h in holes:
            if len(h) % 2 == 0:
                return ConfigurationWitness("even-hole", {"hole": h.cycle})
        return None
    finder = {
        "theta": _find_theta, "pyramid": _find_pyramid, "prism": _find_prism,
        "turtle": _find_turtle,
        "wheel": lambda g, h, p: _find_wheel(g, h, p, False),
        "even-wheel": lambda g, h, p: _find_wheel(g, h, p, True),
    }[kind]
    for h in holes:
        w = finder(g, h, _hole_profile(g, h))
        if w is not None:
            return w
    return None


def is_in_class_C(g: Graph, budget: int | None = None) -> ClassReport:
    """Membership in the (square, prism, pyramid, theta, even wheel)-free class."""
    try:
        holes = enumerate_holes(g, None, budget)
    except BudgetExceeded:
        return ClassReport("inconclusive", None)
    for kind in CLASS_C_OBSTRUCTIONS:
        w = find_config(g, kind, holes=holes)
        if w is not None:
            return ClassReport(False, w)
    return ClassReport(True, None)


# --- independent witness checking -------------------------------------------

def _path_edges(p):
    return {frozenset(e) for e in zip(p, p[1:])}


def _induced_edges(g, vs):
    vs = sorted(set(vs))
    return {frozenset((u, v)) for u, v in combinations(vs, 2) if g.has_edge(u, v)}


def _is_chordless_path(g, p):
    return len(set(p)) == len(p) and _induced_edges(g, p) == _path_edges(p)


def verify_witness(g: Graph, w: ConfigurationWitness) -> bool:
    """Re-check a witness literally against the definition of its kind."""
    p = w.parts
    try:
        if w.kind in ("square", "even-hole"):
            h = p["hole"]
            ok = is_hole(g, h)
            return ok and (len(h) == 4 if w.kind == "square" else len(h) % 2 == 0)
        if w.kind in ("wheel", "even-wheel"):
            rim, c = p["rim"], p["center"]
            if not is_hole(g, rim) or c in rim:
                return False
            cnt = sum(g.has_edge(c, v) for v in rim)
            return cnt >= 3 and (w.kind == "wheel" or cnt % 2 == 0)
        if w.kind == "theta":
            a, b = p["a"], p["b"]
            paths = [p["P1"], p["P2"], p["P3"]]
            if a == b or any(q[0] != a or q[-1] != b or len(q) < 3 for q in paths):
                return False
            interiors = [set(q[1:-1]) for q in paths]
            if any(interiors[i] & interiors[j] for i, j in ((0, 1), (0, 2), (1, 2))):
                return False
            if any(a in s or b in s for s in interiors):
                return False
            if not all(_is_chordless_path(g, q) for q in paths):
                return False
            verts = set().union(*map(set, paths))
            return _induced_edges(g, verts) == set().union(*map(_path_edges, paths))
        if w.kind == "pyramid":
            a, bs = p["a"], tuple(p["b"])
            paths = [p["P1"], p["P2"], p["P3"]]
            if any(q[0] != a or q[-1] != bs[i] or len(q) < 2 for i, q in enumerate(paths)):
                return False
            if sum(len(q) >= 3 for q in paths) < 2:
                return False
            rest = [set(q[1:]) for q in paths]
            if any(rest[i] & rest[j] for i, j in ((0, 1), (0, 2), (1, 2))):
                return False
            if not all(_is_chordless_path(g, q) for q in paths):
                return False
            verts = set().union(*map(set, paths))
            want = set().union(*map(_path_edges, paths)) | {
                frozenset(e) for e in combinations(bs, 2)}
            return _induced_edges(g, verts) == want
        if w.kind == "prism":
            a_s, b_s = tuple(p["a"]), tuple(p["b"])
            paths = [p["P1"], p["P2"], p["P3"]]
            if any(q[0] != a_s[i] or q[-1] != b_s[i] or len(q) < 2 for i, q in enumerate(paths)):
                return False
            sets = [set(q) for q in paths]
            if any(sets[i] & sets[j] for i, j in ((0, 1), (0, 2), (1, 2))):
                return False
            if not all(_is_chordless_path(g, q) for q in paths):
                return False
            verts = set().union(*sets)
            want = set().union(*map(_path_edges, paths)) | {
                frozenset(e) for e in combinations(a_s, 2)} | {
                frozenset(e) for e in combinations(b_s, 2)}
            return _induced_edges(g, verts) == want
        if w.kind == "turtle":
            u, v, p1, p2, x, y = p["u"], p["v"], p["P1"], p["P2"], p["x"], p["y"]
            if p1[0] != u or p2[0] != u or p1[-1] != v or p2[-1] != v:
                return False
            if set(p1[1:-1]) & set(p2[1:-1]):
                return False
            if not is_hole(g, list(p1) + list(p2[-2:0:-1])):
                return False
            if x in p1 or x in p2 or y in p1 or y in p2 or not g.has_edge(x, y):
                return False
            nx1 = sum(g.has_edge(x, t) for t in p1)
            ny2 = sum(g.has_edge(y, t) for t in p2)
            return (nx1 >= 3 and ny2 >= 3 and not any(g.has_edge(x, t) for t in p2)
                    and not any(g.has_edge(y, t) for t in p1))
    except (KeyError, TypeError, IndexError):
        return False
    return False
