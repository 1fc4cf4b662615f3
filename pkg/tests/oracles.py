"""Naive reference implementations used only by the tests.

Nothing here imports the package: every function works from an edge list
with plain Python sets so that agreement with the library is meaningful.
"""

from fractions import Fraction
from itertools import combinations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def components(adj, removed=()):
    removed = set(removed)
    left = [v for v in adj if v not in removed]
    seen, out = set(), []
    for s in left:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in removed and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def full_components(adj, c):
    c = set(c)
    return [d for d in components(adj, c)
            if all(adj[v] & d for v in c)]


def minimal_separators(n, edges):
    """Nonempty sets with at least two full components, by subset scan."""
    adj = adjacency(n, edges)
    out = set()
    for mask in range(1, 1 << n):
        c = [v for v in range(n) if mask >> v & 1]
        if len(full_components(adj, c)) >= 2:
            out.add(tuple(c))
    return out


def is_clique(adj, s):
    return all(v in adj[u] for u, v in combinations(s, 2))


def _induced_degrees(adj, s):
    s = set(s)
    return {v: len(adj[v] & s) for v in s}


def _sub_adj(adj, s):
    s = set(s)
    return {v: adj[v] & s for v in s}


def is_hole_set(adj, s):
    """Does G[s] induce a cycle on at least four vertices?"""
    if len(s) < 4:
        return False
    deg = _induced_degrees(adj, s)
    if any(d != 2 for d in deg.values()):
        return False
    return len(components(_sub_adj(adj, s))) == 1


def hole_sets(n, edges):
    adj = adjacency(n, edges)
    return {frozenset(s) for r in range(4, n + 1) for s in combinations(range(n), r)
            if is_hole_set(adj, s)}


def _links(adj, s, core):
    """Components of G[s] - core, each with the set of core vertices it sees."""
    sub = _sub_adj(adj, s)
    comps = components(sub, core)
    return [(c, frozenset(v for v in core if adj[v] & c)) for c in comps]


def _is_theta(adj, s):
    deg = _induced_degrees(adj, s)
    three = [v for v, d in deg.items() if d == 3]
    if len(three) != 2 or any(d not in (2, 3) for d in deg.values()):
        return False
    a, b = three
    if b in adj[a]:
        return False
    links = _links(adj, s, three)
    return len(links) == 3 and all(seen == {a, b} for _, seen in links)


def _is_pyramid(adj, s):
    deg = _induced_degrees(adj, s)
    three = [v for v, d in deg.items() if d == 3]
    if len(three) != 4 or any(d not in (2, 3) for d in deg.values()):
        return False
    for a in three:
        bs = [v for v in three if v != a]
        if not is_clique(adj, bs):
            continue
        if sum(1 for v in bs if v in adj[a]) > 1:
            continue
        links = _links(adj, s, three)
        reached = [v for v in bs if v in adj[a]]
        ok = True
        for _, seen in links:
            if len(seen) != 2 or a not in seen:
                ok = False
                break
            reached += [v for v in seen if v != a]
        if ok and sorted(reached) == sorted(bs):
            return True
    return False


def _is_prism(adj, s):
    deg = _induced_degrees(adj, s)
    three = [v for v, d in deg.items() if d == 3]
    if len(three) != 6 or any(d not in (2, 3) for d in deg.values()):
        return False
    for t1 in combinations(three, 3):
        t2 = [v for v in three if v not in t1]
        if t1[0] != min(three) or not is_clique(adj, t1) or not is_clique(adj, t2):
            continue
        pairs = [(u, v) for u in t1 for v in t2 if v in adj[u]]
        ok = True
        for _, seen in _links(adj, s, three):
            side1 = [v for v in seen if v in t1]
            side2 = [v for v in seen if v in t2]
            if len(side1) != 1 or len(side2) != 1:
                ok = False
                break
            pairs.append((side1[0], side2[0]))
        if ok and sorted(u for u, _ in pairs) == sorted(t1) \
                and sorted(v for _, v in pairs) == sorted(t2):
            return True
    return False


def _wheel_centres(adj, s):
    for v in s:
        rim = [u for u in s if u != v]
        if is_hole_set(adj, rim):
            yield v, len(adj[v] & set(rim))


def _cycle_order(adj, s):
    s = set(s)
    start = min(s)
    order, prev = [start], None
    while True:
        cur = order[-1]
        nxt = [u for u in adj[cur] & s if u != prev and u not in order]
        if not nxt:
            return order
        prev = cur
        order.append(min(nxt))


def _is_turtle(adj, s):
    for x, y in combinations(sorted(s), 2):
        if y not in adj[x]:
            continue
        rim = [v for v in s if v not in (x, y)]
        if not is_hole_set(adj, rim):
            continue
        cyc = _cycle_order(adj, rim)
        k = len(cyc)
        for first, second in ((x, y), (y, x)):
            nx = {i for i, v in enumerate(cyc) if v in adj[first]}
            ny = {i for i, v in enumerate(cyc) if v in adj[second]}
            if len(nx) < 3 or len(ny) < 3:
                continue
            for i in range(k):
                for j in range(k):
                    if i == j:
                        continue
                    in1 = set()
                    t = (i + 1) % k
                    while t != j:
                        in1.add(t)
                        t = (t + 1) % k
                    in2 = set(range(k)) - in1 - {i, j}
                    if nx <= in1 and ny <= in2:
                        return True
    return False


def configuration_present(n, edges, kind):
    """Does G contain an induced subgraph of the given kind?  Subset scan."""
    adj = adjacency(n, edges)
    for r in range(4, n + 1):
        for s in combinations(range(n), r):
            if kind == "square":
                if r == 4 and is_hole_set(adj, s):
                    return True
            elif kind == "even-hole":
                if r % 2 == 0 and is_hole_set(adj, s):
                    return True
            elif kind == "theta":
                if _is_theta(adj, s):
                    return True
            elif kind == "pyramid":
                if _is_pyramid(adj, s):
                    return True
            elif kind == "prism":
                if _is_prism(adj, s):
                    return True
            elif kind in ("wheel", "even-wheel"):
                for _, d in _wheel_centres(adj, s):
                    if d >= 3 and (kind == "wheel" or d % 2 == 0):
                        return True
            elif kind == "turtle":
                if _is_turtle(adj, s):
                    return True
    return False


def in_class_c(n, edges):
    return not any(configuration_present(n, edges, k)
                   for k in ("square", "prism", "pyramid", "theta", "even-wheel"))


def mwis(n, edges, weights):
    """Best weight and the lexicographically least optimal vertex list."""
    adj = adjacency(n, edges)
    best = (Fraction(-1), ())
    for mask in range(1 << n):
        s = tuple(v for v in range(n) if mask >> v & 1)
        if any(adj[u] & set(s) for u in s):
            continue
        w = sum((Fraction(weights[v]) for v in s), Fraction(0))
        if w > best[0] or (w == best[0] and s < best[1]):
            best = (w, s)
    return best


def is_pmc(n, edges, k):
    adj = adjacency(n, edges)
    k = set(k)
    if not k:
        return False
    comps = components(adj, k)
    if any(all(adj[v] & c for v in k) for c in comps):
        return False
    for x, y in combinations(sorted(k), 2):
        if y in adj[x]:
            continue
        if not any(adj[x] & c and adj[y] & c for c in comps):
            return False
    return True


def pmcs(n, edges):
    return {tuple(v for v in range(n) if mask >> v & 1)
            for mask in range(1, 1 << n)
            if is_pmc(n, edges, [v for v in range(n) if mask >> v & 1])}


def has_semi_induced_matching(n, edges, k):
    adj = adjacency(n, edges)
    arcs = [(u, v) for u in range(n) for v in adj[u]]
    for pick in combinations(arcs, k):
        xs = [a for a, _ in pick]
        ys = [b for _, b in pick]
        if len(set(xs) | set(ys)) != 2 * k:
            continue
        if all((ys[j] in adj[xs[i]]) == (i == j) for i in range(k) for j in range(k)):
            return True
    return False


def shortest_distance(adj, s, t, forbidden=()):
    forbidden = set(forbidden)
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in dist and u not in forbidden:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist.get(t)
