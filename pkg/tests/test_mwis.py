import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import complete_graph, cycle_graph, graphs, path_graph
from minseps.generators import gen_Gk, gen_random_chordal
from minseps.graph import Graph, WeightedGraph, is_independent
from minseps.mwis import (IntegrityError, MwisResult, brute_force_mwis, enumerate_pmcs,
                          is_pmc, mwis_classC, mwis_via_pmc, pmc_scan)
from minseps.separators import oracle_minimal_separators

weights_st = st.integers(0, 7).map(Fraction) | st.fractions(0, 5, max_denominator=6)


def pipeline(wg):
    seps = oracle_minimal_separators(wg.graph)
    return mwis_via_pmc(wg, enumerate_pmcs(wg.graph, seps), seps)


def pmc_sets(pmcs):
    return [p.vertices for p in pmcs]


# --- exhaustive oracle ----------------------------------------------------------------------

def test_c5_unit():
    assert brute_force_mwis(WeightedGraph(cycle_graph(5))).weight == 2


def test_k4_picks_heaviest():
    res = brute_force_mwis(WeightedGraph(complete_graph(4), (1, 5, 2, 3)))
    assert res.vertices == (1,) and res.weight == 5


def test_p4_tie_goes_to_lex_least():
    res = brute_force_mwis(WeightedGraph(path_graph(4)))
    assert res.vertices == (0, 2) and res.weight == 2


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_mwis(WeightedGraph(Graph(25)))


def test_huge_weights_use_exact_arithmetic():
    big = Fraction(2) ** 70
    res = brute_force_mwis(WeightedGraph(path_graph(3), (big, 1, big)))
    assert res.weight == 2 * big and res.vertices == (0, 2)


@given(graphs(max_n=10), st.data())
def test_brute_force_matches_subset_scan(g, data):
    w = data.draw(st.lists(weights_st, min_size=g.n, max_size=g.n))
    res = brute_force_mwis(WeightedGraph(g, w))
    best, lex = oracles.mwis(g.n, g.edges(), w)
    assert res.weight == best and res.vertices == lex


# --- potential maximal cliques ---------------------------------------------------------------

def test_is_pmc_examples():
    assert is_pmc(complete_graph(4), range(4))
    assert is_pmc(path_graph(3), [0, 1])
    assert not is_pmc(path_graph(3), [0, 2])


def test_pmc_lists():
    p3 = path_graph(3)
    assert pmc_sets(enumerate_pmcs(p3, oracle_minimal_separators(p3))) == [(0, 1), (1, 2)]
    k4 = complete_graph(4)
    assert pmc_sets(enumerate_pmcs(k4, [])) == [(0, 1, 2, 3)]


def test_c5_pmcs_are_all_triples():
    # every triple of C5 is a maximal clique of some fan triangulation
    g = cycle_graph(5)
    got = pmc_sets(enumerate_pmcs(g, oracle_minimal_separators(g)))
    assert got == pmc_sets(pmc_scan(g))
    assert len(got) == 10 and all(len(p) == 3 for p in got)
    assert sorted(oracles.pmcs(5, g.edges())) == got


@given(graphs(max_n=10))
def test_pmcs_match_exhaustive_scan(g):
    got = enumerate_pmcs(g, oracle_minimal_separators(g))
    assert pmc_sets(got) == sorted(oracles.pmcs(g.n, g.edges()))
    assert got == pmc_scan(g)


@given(graphs(max_n=7), st.data())
def test_is_pmc_matches_definition(g, data):
    k = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    assert is_pmc(g, k) == oracles.is_pmc(g.n, g.edges(), k)


# --- dynamic program -------------------------------------------------------------------------

def test_pipeline_examples():
    assert pipeline(WeightedGraph(cycle_graph(5))).weight == 2
    assert pipeline(WeightedGraph(Graph(1), (7,))).weight == 7
    g, _ = gen_Gk(2)
    wg = WeightedGraph(g)
    assert pipeline(wg).weight == brute_force_mwis(wg).weight


def test_empty_graph():
    assert mwis_via_pmc(WeightedGraph(Graph(0)), [], []) == MwisResult((), Fraction(0))


def test_missing_separator_is_an_integrity_error():
    g = cycle_graph(6)
    seps = oracle_minimal_separators(g)
    pmcs = enumerate_pmcs(g, seps)
    with pytest.raises(IntegrityError):
        mwis_via_pmc(WeightedGraph(g), pmcs, seps[:2])
    with pytest.raises(IntegrityError):
        mwis_via_pmc(WeightedGraph(g), [], seps)


@given(graphs(max_n=10), st.data())
def test_pipeline_matches_oracle(g, data):
    w = data.draw(st.lists(weights_st, min_size=g.n, max_size=g.n))
    wg = WeightedGraph(g, w)
    res = pipeline(wg)
    best, lex = oracles.mwis(g.n, g.edges(), w)
    assert res.weight == best
    assert is_independent(g, res.vertices)
    if all(x > 0 for x in w):
        assert res.vertices == lex


@pytest.mark.parametrize("seed", range(6))
def test_class_c_pipeline_on_chordal(seed):
    g, _ = gen_random_chordal(16, 0.3, seed)
    rng = random.Random(seed)
    wg = WeightedGraph(g, [Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(g.n)])
    assert mwis_classC(wg).weight == brute_force_mwis(wg).weight


def test_class_c_pipeline_examples():
    g, _ = gen_Gk(3)
    wg = WeightedGraph(g)
    assert mwis_classC(wg).weight == brute_force_mwis(wg).weight
    assert mwis_classC(WeightedGraph(cycle_graph(9))).weight == 4


def test_result_json():
    r = MwisResult((0, 2), Fraction(5, 2))
    assert r.to_json(1) == {"weight": "5/2", "set": [1, 3]}
    assert MwisResult((1,), Fraction(3)).to_json() == {"weight": 3, "set": [1]}
