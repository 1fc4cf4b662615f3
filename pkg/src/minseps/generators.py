"""Graph families: cycles, k-prisms, k-thetas, k-pyramids, k-turtles,
k-ladders, the G_k family, random chordal graphs, and the clique+path
pyramid surgery.

Every generator returns ``(graph, meta)`` where ``meta`` names the
distinguished vertices (0-indexed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from minseps.graph import Graph


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def gen_cycle(n: int):
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)]), {"family": "cycle", "n": n}


def gen_k_prism(k: int):
    """Cliques a_1..a_k (ids 0..k-1) and b_1..b_k (ids k..2k-1), matching a_i b_i."""
    _need(k >= 1, "k-prism needs k >= 1")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    meta = {"family": "kprism", "k": k, "A": list(range(k)), "B": list(range(k, 2 * k))}
    return Graph(2 * k, edges), meta


def gen_k_theta(k: int):
    """Ends a=0, b=1 joined by k paths a - s_i - t_i - b."""
    _need(k >= 2, "k-theta needs k >= 2")
    edges = []
    paths = []
    for i in range(k):
        s, t = 2 + 2 * i, 3 + 2 * i
        edges += [(0, s), (s, t), (t, 1)]
        paths.append([0, s, t, 1])
    return Graph(2 + 2 * k, edges), {"family": "ktheta", "k": k, "a": 0, "b": 1,
                                      "paths": paths}


def gen_k_pyramid(k: int):
    """Apex 0, clique b_1..b_k (ids 1..k), paths apex - s_i - b_i (s_i = k+i)."""
    _need(k >= 2, "k-pyramid needs k >= 2")
    edges = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    for i in range(1, k + 1):
        edges += [(0, k + i), (k + i, i)]
    return Graph(2 * k + 1, edges), {"family": "kpyramid", "k": k, "apex": 0,
                                      "clique": list(range(1, k + 1))}


def gen_k_turtle(k: int):
    """Hole made of two u-v paths with 8k interior vertices each, plus k
    adjacent pairs (x_j, y_j).

    ::

        u - a1 - a2 - ... - a8k - v        x_j ~ a(8j-6), a(8j-3), a(8j)
        u - b1 - b2 - ... - b8k - v        y_j ~ b(8j-6), b(8j-3), b(8j)
                                           x_j ~ y_j

    Ids: u=0, v=1, a_i=1+i, b_i=1+8k+i, x_j=1+16k+j, y_j=1+17k+j.
    """
    _need(k >= 1, "k-turtle needs k >= 1")
    m = 8 * k
    u, v = 0, 1
    a = [None] + [1 + i for i in range(1, m + 1)]
    b = [None] + [1 + m + i for i in range(1, m + 1)]
    x = [None] + [1 + 2 * m + j for j in range(1, k + 1)]
    y = [None] + [1 + 2 * m + k + j for j in range(1, k + 1)]
    edges = []
    for side in (a, b):
        seq = [u] + side[1:] + [v]
        edges += list(zip(seq, seq[1:]))
    for j in range(1, k + 1):
        for off in (6, 3, 0):
            edges.append((x[j], a[8 * j - off]))
            edges.append((y[j], b[8 * j - off]))
        edges.append((x[j], y[j]))
    meta = {"family": "kturtle", "k": k, "u": u, "v": v,
            "P1": [u] + a[1:] + [v], "P2": [u] + b[1:] + [v],
            "x": x[1:], "y": y[1:]}
    return Graph(2 + 2 * m + 2 * k, edges), meta


def gen_k_ladder(k: int):
    """Even-hole-free, maximum degree 3, at least 2^k minimal separators.

    One rail is a chain of triangles {p_i, q_i, t_i} (q_i - p_{i+1} edges),
    the other a path through b_1..b_k with one vertex m_i between b_i and
    b_{i+1}.  Rung i is t_i - c_i - d_i - b_i.  Every hole uses exactly two
    rungs i < j and has length 4(j - i) + 7.
    """
    _need(k >= 1, "k-ladder needs k >= 1")
    ids = {}

    def vid(name):
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    edges = []
    for i in range(k):
        p, q, t = vid(("p", i)), vid(("q", i)), vid(("t", i))
        edges += [(p, q), (q, t), (t, p)]
        if i:
            edges.append((vid(("q", i - 1)), p))
    for i in range(k):
        c, d, bb = vid(("c", i)), vid(("d", i)), vid(("b", i))
        edges += [(vid(("t", i)), c), (c, d), (d, bb)]
        if i:
            mid = vid(("m", i - 1))
            edges += [(vid(("b", i - 1)), mid), (mid, bb)]
    meta = {"family": "kladder", "k": k,
            "rungs": [[ids[("t", i)], ids[("c", i)], ids[("d", i)], ids[("b", i)]]
                      for i in range(k)]}
    return Graph(len(ids), edges), meta


def gen_Gk(k: int):
    """z=0, x_i=i, y_i=k+i, x'_i=2k+i, y'_i=3k+i for i in 1..k."""
    _need(k >= 1, "G_k needs k >= 1")
    z = 0
    X = [i for i in range(1, k + 1)]
    Y = [k + i for i in range(1, k + 1)]
    Xp = [2 * k + i for i in range(1, k + 1)]
    Yp = [3 * k + i for i in range(1, k + 1)]
    edges = set()
    for clique in (X, Y, Xp, Yp):
        edges |= {(u, v) for u in clique for v in clique if u < v}
    edges |= {(z, v) for v in X + Xp}
    edges |= {(u, v) for u in Y for v in Yp}
    for i in range(1, k + 1):
        for j in range(k - i + 1, k + 1):
            edges.add((X[i - 1], Y[j - 1]))
            edges.add((Xp[i - 1], Yp[j - 1]))
    meta = {"family": "gk", "k": k, "z": z, "X": X, "Y": Y, "Xp": Xp, "Yp": Yp,
            "y1": Y[0]}
    return Graph(4 * k + 1, sorted(edges)), meta


def gk_separator(k: int, i: int, j: int) -> tuple:
    """C_i | C'_j: {x_i..x_k} + {y_{k-i+2}..y_k} + the primed copy for j."""
    _need(1 <= i <= k and 1 <= j <= k, "indices must lie in 1..k")
    ci = [t for t in range(i, k + 1)] + [k + t for t in range(k - i + 2, k + 1)]
    cj = [2 * k + t for t in range(j, k + 1)] + [3 * k + t for t in range(k - j + 2, k + 1)]
    return tuple(sorted(ci + cj))


def gen_random_chordal(n: int, density: float = 0.3, seed: int = 0):
    """Random connected chordal graph.

    A random elimination order is drawn; every vertex gets a random set of
    later neighbours (at least one, except the last) and each such set is
    then completed into a clique.
    """
    _need(n >= 1, "n must be positive")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    adj = [set() for _ in range(n)]
    for i, v in enumerate(order[:-1]):
        later = order[i + 1:]
        picks = {u for u in later if rng.random() < density}
        picks.add(rng.choice(later))
        for u in picks:
            adj[v].add(u)
            adj[u].add(v)
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        for a in later:
            for b in later:
                if a != b:
                    adj[a].add(b)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Graph(n, edges), {"family": "chordal", "n": n, "density": density,
                             "seed": seed, "elimination_order": order}


def gen_clone_cycle(n: int, clones, seed: int = 0):
    """C_n with extra vertices, each adjacent to a 3-vertex arc centred at a
    hole vertex (a clone).  Clones of the same centre are pairwise adjacent."""
    _need(n >= 5, "clone cycles need n >= 5")
    edges = [(i, (i + 1) % n) for i in range(n)]
    by_centre = {}
    nxt = n
    for y in clones:
        y %= n
        v = nxt
        nxt += 1
        edges += [(v, (y - 1) % n), (v, y), (v, (y + 1) % n)]
        for w in by_centre.get(y, []):
            edges.append((v, w))
        by_centre.setdefault(y, []).append(v)
    return Graph(nxt, edges), {"family": "clonecycle", "n": n, "clones": list(clones)}


# --- clique + path partitions ---------------------------------------------------

@dataclass(frozen=True)
class CliquePathPartition:
    """A clique K = {0..k-1} and a chordless path P (ids k, k+1, ... in order).

    ``attach[i]`` is the K-neighbour of the i-th path vertex, or None.
    """

    k: int
    attach: tuple

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("clique size must be non-negative")
        for a in self.attach:
            if a is not None and not 0 <= a < self.k:
                raise ValueError(f"attachment {a} outside the clique")

    @property
    def clique(self) -> tuple:
        return tuple(range(self.k))

    @property
    def path(self) -> tuple:
        return tuple(range(self.k, self.k + len(self.attach)))

    def graph(self) -> Graph:
        k = self.k
        edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
        m = len(self.attach)
        edges += [(k + i, k + i + 1) for i in range(m - 1)]
        edges += [(k + i, a) for i, a in enumerate(self.attach) if a is not None]
        return Graph(k + m, edges)

    @classmethod
    def from_graph(cls, g: Graph, clique, path) -> "CliquePathPartition":
        """Validate an arbitrary labelling and convert it to the canonical one."""
        clique = list(clique)
        path = list(path)
        if sorted(clique + path) != list(range(g.n)):
            raise ValueError("clique and path must partition the vertex set")
        index = {v: i for i, v in enumerate(clique)}
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                if not g.has_edge(u, v):
                    raise ValueError("clique side is not complete")
        on_path = set(path)
        for i, u in enumerate(path):
            for v in g.neighbors(u):
                if v in on_path and abs(path.index(v) - i) != 1:
                    raise ValueError("path side has a chord")
            if i and not g.has_edge(path[i - 1], u):
                raise ValueError("path side is not a path")
        attach = []
        for u in path:
            ks = [index[v] for v in g.neighbors(u) if v in index]
            if len(ks) > 1:
                raise ValueError(f"path vertex {u} has more than one clique neighbour")
            attach.append(ks[0] if ks else None)
        return cls(len(clique), tuple(attach))


def qualifying_tuples(part: CliquePathPartition):
    """Yield (a, b, c, i_a, i_b, i_c) path-index tuples that form a pyramid:
    the subpath between i_a and i_c has no neighbour of a or c inside and
    exactly one neighbour (at i_b) of b."""
    att = part.attach
    m = len(att)
    for ia in range(m):
        a = att[ia]
        if a is None:
            continue
        for ic in range(ia + 2, m):
            c = att[ic]
            if c is None or c == a:
                continue
            inner = att[ia + 1:ic]
            if a in inner or c in inner:
                continue
            for b in range(part.k):
                if b in (a, c):
                    continue
                hits = [ia + 1 + t for t, v in enumerate(inner) if v == b]
                if len(hits) == 1:
                    yield a, b, c, ia, hits[0], ic


def pyramid_surgery(part: CliquePathPartition, max_rounds: int = 10_000) -> CliquePathPartition:
    """Replace the middle path vertex of each pyramid by a 7-vertex path whose
    1st, 4th and 7th vertices see the same clique vertex; repeat until none remain."""
    for _ in range(max_rounds):
        found = next(qualifying_tuples(part), None)
        if found is None:
            return part
        _, b, _, _, ib, _ = found
        att = list(part.attach)
        att[ib:ib + 1] = [b, None, None, b, None, None, b]
        part = CliquePathPartition(part.k, tuple(att))
    raise RuntimeError("surgery did not terminate within the round limit")


FAMILIES = {
    "cycle": lambda k=None, n=None, seed=0: gen_cycle(n if n is not None else k),
    "kprism": lambda k=None, n=None, seed=0: gen_k_prism(k),
    "ktheta": lambda k=None, n=None, seed=0: gen_k_theta(k),
    "kpyramid": lambda k=None, n=None, seed=0: gen_k_pyramid(k),
    "kturtle": lambda k=None, n=None, seed=0: gen_k_turtle(k),
    "kladder": lambda k=None, n=None, seed=0: gen_k_ladder(k),
    "gk": lambda k=None, n=None, seed=0: gen_Gk(k),
    "chordal": lambda k=None, n=None, seed=0: gen_random_chordal(n, 0.3, seed),
}
