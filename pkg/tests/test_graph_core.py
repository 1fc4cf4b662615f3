import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

import oracles
from conftest import complete_graph, cycle_graph, graphs, path_graph
from minseps.graph import (Graph, GraphFormatError, WeightedGraph, bfs_distances,
                           connected_components, dump_graph, full_components,
                           is_clique, load_graph, load_weights, neighborhood,
                           shortest_path)


# --- parsing ----------------------------------------------------------------

def test_parse_path_on_three_vertices():
    g = load_graph("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_single_isolated_vertex():
    g = load_graph(b"p edge 1 0\n")
    assert g.n == 1 and g.m == 0


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(GraphFormatError, match="line 2"):
        load_graph("p edge 2 1\ne 1 1\n")


def test_parse_rejects_bare_self_loop():
    with pytest.raises(GraphFormatError):
        load_graph("e 1 1")


@pytest.mark.parametrize("text, where", [
    ("p edge x 1\n", "line 1"),
    ("p edge 3 1\ne 1 4\n", "line 2"),
    ("c hi\np edge 3 1\np edge 3 1\n", "line 3"),
    ("p edge 3 1\ne 1\n", "line 2"),
    ("q 1 2\n", "line 1"),
])
def test_parse_errors_name_the_line(text, where):
    with pytest.raises(GraphFormatError, match=where):
        load_graph(text)


def test_missing_header():
    with pytest.raises(GraphFormatError):
        load_graph("c nothing here\n")


def test_duplicate_edges_are_idempotent():
    g = load_graph("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.edges() == [(0, 1)]


@given(graphs())
def test_dump_load_roundtrip(g):
    assert load_graph(dump_graph(g, ["roundtrip"])) == g


def test_weights_file():
    w = load_weights("1 3\n3 1/2\nc x\n4 2.5\n", 5)
    assert w == (3, 1, Fraction(1, 2), Fraction(5, 2), 1)
    with pytest.raises(GraphFormatError, match="line 1"):
        load_weights("6 1\n", 5)
    with pytest.raises(GraphFormatError):
        load_weights("1 -2\n", 5)
    with pytest.raises(GraphFormatError):
        load_weights("1 abc\n", 5)


def test_weighted_graph_defaults_and_validation():
    g = path_graph(3)
    assert WeightedGraph(g).weights == (1, 1, 1)
    with pytest.raises(ValueError):
        WeightedGraph(g, (1, 2))
    with pytest.raises(ValueError):
        WeightedGraph(g, (1, -1, 2))


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    g = Graph(3, [(0, 1)])
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


# --- components ---------------------------------------------------------------

def test_components_of_c5_minus_two():
    assert connected_components(cycle_graph(5), [1, 3]) == [(0, 4), (2,)]


def test_components_everything_removed():
    g = cycle_graph(5)
    assert connected_components(g, range(5)) == []


def test_components_connected_path():
    assert connected_components(path_graph(4), []) == [(0, 1, 2, 3)]


@pytest.mark.parametrize("g, c, want", [
    (path_graph(3), [1], [(0,), (2,)]),
    (path_graph(4), [1], [(0,), (2, 3)]),
    (path_graph(4), [1, 3], [(2,)]),
])
def test_full_components_examples(g, c, want):
    assert full_components(g, c) == want


@given(graphs(), st.data())
def test_components_partition_and_full_subset(g, data):
    removed = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))).map(
        lambda s: {v for v in s if v < g.n}))
    comps = connected_components(g, removed)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == sorted(set(range(g.n)) - removed)
    assert len(flat) == len(set(flat))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    assert all(list(c) == sorted(c) for c in comps)
    adj = oracles.adjacency(g.n, g.edges())
    assert {frozenset(c) for c in comps} == set(oracles.components(adj, removed))
    fulls = full_components(g, removed)
    assert set(fulls) <= set(comps)
    assert {frozenset(c) for c in fulls} == set(oracles.full_components(adj, removed))


def test_neighborhood_is_open():
    assert neighborhood(path_graph(4), [1, 2]) == (0, 3)


# --- cliques and paths --------------------------------------------------------

def test_is_clique_examples():
    assert is_clique(complete_graph(3), [0, 1, 2])
    assert not is_clique(path_graph(3), [0, 2])
    assert is_clique(path_graph(3), [])


def test_shortest_path_tie_goes_to_lower_neighbour():
    assert shortest_path(cycle_graph(6), 0, 3) == (0, 1, 2, 3)


def test_shortest_path_trivial_and_blocked():
    assert shortest_path(path_graph(3), 1, 1) == (1,)
    assert shortest_path(path_graph(3), 0, 2, [1]) is None


@given(graphs(min_n=2), st.data())
def test_shortest_path_is_shortest_and_avoids_forbidden(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    forbidden = data.draw(st.sets(st.integers(0, g.n - 1))) - {s, t}
    p = shortest_path(g, s, t, forbidden)
    adj = oracles.adjacency(g.n, g.edges())
    d = oracles.shortest_distance(adj, s, t, forbidden)
    if d is None:
        assert p is None
        return
    assert p[0] == s and p[-1] == t and len(p) == d + 1
    assert not set(p) & forbidden
    assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    # shortest paths are chordless
    assert all(not g.has_edge(p[i], p[j]) for i in range(len(p)) for j in range(i + 2, len(p)))
    assert bfs_distances(g, s, forbidden).get(t) == d


@given(graphs(min_n=2), st.data())
def test_shortest_path_follows_lowest_parent_rule(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    p = shortest_path(g, s, t)
    if p is None or len(p) < 2:
        return
    dist = bfs_distances(g, s)
    # every vertex's predecessor is its lowest-id neighbour one step closer
    for prev, cur in zip(p, p[1:]):
        best = min(u for u in g.neighbors(cur) if dist.get(u) == dist[cur] - 1)
        assert prev == best
