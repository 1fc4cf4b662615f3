"""Minimal separators: predicates, ground-truth oracles and clique separators."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable

from minseps.graph import Graph, is_clique, is_connected, mask_of, members

BRUTE_LIMIT = 20


@dataclass(frozen=True, order=True)
class SeparatorRecord:
    """A minimal separator with the evidence that makes it one.

    Equality, hashing and ordering use ``vertices`` only.
    """

    vertices: tuple
    witness: tuple = field(default=(), compare=False)
    fulls: tuple = field(default=(), compare=False)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def to_json(self, offset: int = 0) -> dict:
        return {"set": [v + offset for v in self.vertices],
                "witness": [v + offset for v in self.witness]}


def record_from_mask(g: Graph, mask: int) -> SeparatorRecord | None:
    if not mask:
        return None
    fulls = g.kernel.full_components(mask)
    if len(fulls) < 2:
        return None
    witness = tuple((f & -f).bit_length() - 1 for f in fulls[:2])
    return SeparatorRecord(members(mask), witness, tuple(members(f) for f in fulls))


def is_minimal_separator(g: Graph, c: Iterable[int]) -> SeparatorRecord | None:
    """Record iff ``g - c`` has at least two components that are full w.r.t. ``c``.

    The empty set is never reported, even for disconnected graphs.
    """
    return record_from_mask(g, mask_of(c))


def is_proper_separator(g: Graph, c: Iterable[int]) -> bool:
    c = tuple(c)
    return is_minimal_separator(g, c) is not None and not is_clique(g, c)


def _warn_disconnected(g: Graph):
    if not is_connected(g):
        warnings.warn("input graph is disconnected; the empty set is not reported",
                      stacklevel=3)


def _brute_masks(g: Graph) -> list:
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"exhaustive oracle limited to n <= {BRUTE_LIMIT} (got {g.n})")
    return g.kernel.minimal_separators_bruteforce()


def _expansion_masks(g: Graph) -> list:
    k = g.kernel
    adj = g.adj
    seen = set()
    queue = []

    def push(s):
        if s and s not in seen:
            seen.add(s)
            queue.append(s)

    for v in range(g.n):
        closed = adj[v] | (1 << v)
        for comp in k.components(closed):
            push(k.neighborhood(comp))
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        f = s
        while f:
            low = f & -f
            f ^= low
            x = low.bit_length() - 1
            for comp in k.components(s | adj[x]):
                push(k.neighborhood(comp))
    return list(seen)


def oracle_minimal_separators(g: Graph, method: str = "brute") -> list:
    """All minimal separators, sorted, by exhaustive scan or by expansion."""
    _warn_disconnected(g)
    if method == "brute":
        masks = _brute_masks(g)
    elif method == "expansion":
        masks = _expansion_masks(g)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    return sorted(record_from_mask(g, m) for m in masks)


def mcs_m(g: Graph) -> tuple:
    """Minimal elimination ordering by maximum cardinality search.

    Returns ``(order, fill_adj)`` where ``order[0]`` is eliminated first and
    ``fill_adj`` is the adjacency of the resulting minimal triangulation.
    """
    n = g.n
    adj = g.adj
    k = g.kernel
    weight = [0] * n
    unnumbered = g.full
    fill = list(adj)
    numbered = []
    while unnumbered:
        v = max(members(unnumbered), key=lambda u: (weight[u], -u))
        unnumbered &= ~(1 << v)
        bumped = []
        for w in sorted({weight[u] for u in members(unnumbered)}):
            lighter = mask_of(u for u in members(unnumbered) if weight[u] < w)
            reach = k.reach(adj[v] & lighter, lighter)
            for u in members(unnumbered):
                if weight[u] == w and (adj[v] >> u & 1 or adj[u] & reach):
                    bumped.append(u)
        for u in bumped:
            weight[u] += 1
            fill[u] |= 1 << v
            fill[v] |= 1 << u
        numbered.append(v)
    return tuple(reversed(numbered)), tuple(fill)


def clique_minimal_separators(g: Graph) -> list:
    """Minimal separators that are cliques, via a minimal triangulation.

    Every clique minimal separator of ``g`` is a minimal separator of any
    minimal triangulation, and those are among the sets of later neighbours
    in its elimination order; each candidate is then checked directly.
    """
    order, fill = mcs_m(g)
    pos = {v: i for i, v in enumerate(order)}
    found = set()
    for v in order:
        later = mask_of(u for u in members(fill[v]) if pos[u] > pos[v])
        if later and is_clique(g, members(later)):
            rec = record_from_mask(g, later)
            if rec is not None:
                found.add(rec)
    return sorted(found)
