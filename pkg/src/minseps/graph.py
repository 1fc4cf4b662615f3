"""Graph representation, file I/O and elementary set operations.

Vertices are ``0..n-1``.  Adjacency is stored as one bitmask per vertex;
vertex sets handed to and returned from the public functions are canonical
ascending tuples.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from minseps._backend import make_kernel
from minseps._pykernel import iter_bits

VertexSet = tuple  # canonical: strictly ascending tuple of vertex ids


class GraphFormatError(ValueError):
    """Malformed graph or weights file; the message names the line."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple:
    return tuple(iter_bits(mask))


def canonical(vertices: Iterable[int]) -> tuple:
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_kernel")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._kernel = None

    @classmethod
    def from_masks(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._kernel = None
        for v, m in enumerate(g.adj):
            if (m >> v) & 1 or m >> g.n:
                raise ValueError(f"bad adjacency mask at vertex {v}")
            for u in iter_bits(m):
                if not (g.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        return g

    @property
    def kernel(self):
        if self._kernel is None:
            self._kernel = make_kernel(self.adj)
        return self._kernel

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old ids."""
        old = canonical(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(old), edges), old

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __getstate__(self):
        return self.adj

    def __setstate__(self, state):
        self.n = len(state)
        self.adj = state
        self._kernel = None


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple = field(default=())

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, "weights", tuple(Fraction(1) for _ in range(self.graph.n)))
        else:
            object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if len(self.weights) != self.graph.n:
            raise ValueError("one weight per vertex required")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")


# --- file formats -----------------------------------------------------------

def load_graph(text) -> Graph:
    """Parse the DIMACS-like edge format (1-indexed endpoints)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if isinstance(text, str):
        lines = io.StringIO(text)
    else:
        lines = text
    n = None
    edges = set()
    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col") or not (
                    parts[2].isdigit() and parts[3].isdigit()):
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: vertex index out of range")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u + 1}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge <n> <m>' header")
    return Graph(n, sorted(edges))


def dump_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    edges = g.edges()
    out.append(f"p edge {g.n} {len(edges)}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


_NUMBER = re.compile(r"^-?\d+(\.\d+)?(/\d+)?$")


def load_weights(text, n: int) -> tuple:
    """Parse ``<v> <weight>`` lines; missing vertices weigh 1."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    weights = [Fraction(1)] * n
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2 or not parts[0].isdigit() or not _NUMBER.match(parts[1]):
            raise GraphFormatError(f"line {lineno}: malformed weight line {line!r}")
        v = int(parts[0]) - 1
        if not 0 <= v < n:
            raise GraphFormatError(f"line {lineno}: vertex index out of range")
        w = Fraction(parts[1])
        if w < 0:
            raise GraphFormatError(f"line {lineno}: negative weight")
        weights[v] = w
    return tuple(weights)


# --- elementary operations --------------------------------------------------

def connected_components(g: Graph, removed: Iterable[int] = ()) -> list:
    """Components of ``g - removed`` as canonical tuples, ordered by smallest member."""
    return [members(c) for c in g.kernel.components(mask_of(removed))]


def full_components(g: Graph, c: Iterable[int]) -> list:
    """Components of ``g - c`` in which every vertex of ``c`` has a neighbour."""
    return [members(d) for d in g.kernel.full_components(mask_of(c))]


def neighborhood(g: Graph, s: Iterable[int]) -> tuple:
    """Open neighbourhood N(S): vertices outside S with a neighbour in S."""
    return members(g.kernel.neighborhood(mask_of(s)))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    for v in iter_bits(m):
        if (m & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(not g.adj[v] & m for v in iter_bits(m))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(g.kernel.components(0)) == 1


def shortest_path(g: Graph, source: int, target: int, forbidden: Iterable[int] = ()):
    """Deterministic shortest path in ``g - forbidden`` or None.

    Ties go to the lowest-id optimal predecessor at every step.
    """
    path = g.kernel.shortest_path(source, target, mask_of(forbidden))
    return None if path is None else tuple(path)


def bfs_distances(g: Graph, source: int, forbidden: Iterable[int] = ()) -> dict:
    """Plain BFS distances, kept independent of the kernel for cross-checks."""
    banned = set(forbidden)
    if source in banned:
        return {}
    dist = {source: 0}
    queue = [source]
    for v in queue:
        for u in g.neighbors(v):
            if u not in banned and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist
