import itertools
from fractions import Fraction
from math import prod

import networkx as nx
import pytest

from clustercat.dynkin import DynkinType
from clustercat.errors import PreconditionViolated
from clustercat.homs import cluster_homs, ext_mod
from clustercat.knitting import knit_module_ar_quiver
from clustercat.mesh import linearize
from clustercat.tilting import (
    almost_complete_sets,
    bron_kerbosch,
    check_lifts,
    compatibility_edges,
    compatibility_graph,
    complements,
    enumerate_tilting_sets,
    exceptional_complex_fvector,
    exchange_graph,
    f_stable_in_window,
    figure_window,
    find_d_tilting_not_config,
    hom_configurations,
    is_ext_configuration,
    maximal_cliques,
    quotient_hom_from_derived,
    tilting_module_embedding,
    tilting_modules,
    window_e1,
    window_e2_failures,
    window_maximal,
)

from conftest import category, orient

EXPONENTS = {
    "A1": [1], "A2": [1, 2], "A3": [1, 2, 3], "A4": [1, 2, 3, 4], "A5": [1, 2, 3, 4, 5],
    "D4": [1, 3, 3, 5], "D5": [1, 3, 5, 7, 4], "E6": [1, 4, 5, 7, 8, 11],
}
COXETER = {"A1": 2, "A2": 3, "A3": 4, "A4": 5, "A5": 6, "D4": 6, "D5": 8, "E6": 12}


def catalan(name: str) -> int:
    h = COXETER[name]
    return int(prod(Fraction(h + e + 1, e + 1) for e in EXPONENTS[name]))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "A5", "D4", "D5"])
@pytest.mark.parametrize("kind", ["alternating", "linear"])
def test_tilting_sets_match_networkx_and_catalan(name, kind):
    cc = category(name, kind)
    g = nx.Graph()
    g.add_nodes_from(range(len(cc)))
    g.add_edges_from(compatibility_edges(cc))
    oracle = sorted(tuple(sorted(c)) for c in nx.find_cliques(g))
    sets = enumerate_tilting_sets(cc)
    assert sets == oracle
    assert len(sets) == catalan(name)
    assert all(len(t) == cc.rank for t in sets)


def test_catalan_oracle_values():
    assert [catalan(n) for n in ("A3", "D4", "E6")] == [14, 50, 833]


def test_parallel_enumeration_is_deterministic():
    cc = category("D5")
    adj = compatibility_graph(cc)
    serial = maximal_cliques(adj)
    assert maximal_cliques(adj, threads=4) == serial
    assert list(bron_kerbosch(adj)) == list(bron_kerbosch(adj))


def test_bron_kerbosch_small_graphs():
    # a triangle plus a pendant edge
    adj = [0b0110, 0b0101, 0b1011, 0b0100]
    assert sorted(bron_kerbosch(adj)) == [(0, 1, 2), (2, 3)]
    assert maximal_cliques([0, 0]) == [(0,), (1,)]


def test_a3_census():
    cc = category("A3")
    eg = exchange_graph(cc)
    assert len(cc) == 9
    assert len(eg.vertices) == 14
    assert len(eg.edges) == 21
    assert set(eg.degrees()) == {3}
    assert eg.is_connected()
    assert exceptional_complex_fvector(cc) == [1, 9, 21, 14]


@pytest.mark.parametrize("name", ["A1", "A2", "A4", "D4"])
def test_fvectors(name):
    expected = {"A1": [1, 2], "A2": [1, 5, 5], "A4": [1, 14, 56, 84, 42], "D4": [1, 16, 66, 100, 50]}
    assert exceptional_complex_fvector(category(name)) == expected[name]


def test_a2_exchange_graph_is_a_pentagon():
    eg = exchange_graph(category("A2"))
    assert len(eg.vertices) == len(eg.edges) == 5
    assert set(eg.degrees()) == {2} and eg.is_connected()


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "A5", "D4", "D5"])
def test_two_complements(name):
    cc = category(name)
    ext = cluster_homs(cc).ext
    for tb in almost_complete_sets(cc):
        x, y = complements(cc, tb)
        assert x != y and ext[x][y] == ext[y][x] == 1
    eg = exchange_graph(cc)
    assert set(eg.degrees()) == {cc.rank} and eg.is_connected()


def test_complement_errors():
    cc = category("A3")
    a, b = cc.by_root((1, 0, 0)), cc.by_root((0, 1, 0))
    assert cluster_homs(cc).ext[a][b]
    with pytest.raises(PreconditionViolated):
        complements(cc, [a, b])
    with pytest.raises(PreconditionViolated):
        complements(cc, [a])


@pytest.mark.parametrize("name", ["A3", "A4", "D4"])
def test_tilting_sets_are_ext_configurations(name):
    cc = category(name)
    sets = set(enumerate_tilting_sets(cc))
    assert all(is_ext_configuration(cc, t) for t in sets)
    # conversely every Ext-configuration is a tilting set: check all n-subsets
    n = cc.rank
    if len(cc) <= 16:
        for c in itertools.combinations(range(len(cc)), n):
            assert is_ext_configuration(cc, c) == (c in sets)


def test_tilting_modules_brute_force():
    for kind in ("alternating", "linear"):
        cc = category("A3", kind)
        mc = cc.mc
        brute = []
        for c in itertools.combinations(range(len(mc)), 3):
            if all(ext_mod(mc, u, v) == 0 for u in c for v in c):
                brute.append(tuple(sorted(cc.object_of_module(v) for v in c)))
        assert tilting_modules(cc) == sorted(brute)
        assert len(brute) == 5
        emb = tilting_module_embedding(cc)
        assert emb["all_tilting_in_c"] and emb["all_ext_configurations"]


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_lifts_to_the_derived_category(name):
    assert check_lifts(category(name)) == {"f_stable": True, "e1": True, "e2": True}


def test_figure_window_counterexample():
    mc = category("A3").mc
    w, shown, filled, n = figure_window(mc)
    assert len(shown) == 72 and len(filled) == 24
    assert window_e1(w, filled)
    assert window_maximal(w, filled, shown)
    inner = [v for v in shown if v in set(w.interior(2))]
    assert window_e2_failures(w, filled, inner) == [n]
    assert w.coords(n) == (9, 1)
    assert not f_stable_in_window(w, filled)
    tn = w.quiver.tau[n]
    assert tn in filled and w.ext(n, tn) == 1


def test_figure_window_needs_its_orientation():
    with pytest.raises(PreconditionViolated):
        figure_window(category("A3", "linear").mc)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "D4"])
def test_d_tilting_set_that_is_not_a_configuration(name):
    found = find_d_tilting_not_config(category(name).mc)
    assert found is not None
    w, members, bad = found
    assert window_e1(w, members) and bad


@pytest.mark.parametrize("name,count", [("A1", 1), ("A2", 2), ("A3", 5), ("A4", 14), ("D4", 20)])
def test_hom_configurations(name, count):
    d = DynkinType.parse(name)
    hc = hom_configurations(d)
    assert len(hc.configurations) == count
    for c in hc.configurations:
        assert hc.is_stable(c)
        assert hc.per_domain(c, d.rank) == [d.rank, d.rank]


def test_hom_configurations_a3_m():
    hc = hom_configurations(DynkinType.parse("A3"))
    assert hc.m == 3 and hc.period == 6


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_quotient_homs_agree_with_derived_orbit_sums(name):
    d = DynkinType.parse(name)
    hc = hom_configurations(d)
    lc = linearize(hc.quiver, coxeter=d.coxeter_number)
    expect = quotient_hom_from_derived(d, hc.period)
    verts = hc.quiver.vertices
    assert [[lc.hom_dim(x, y) for y in verts] for x in verts] == expect


def test_hom_configurations_rank_guard():
    with pytest.raises(PreconditionViolated):
        hom_configurations(DynkinType.parse("A5"))


def test_module_category_sizes():
    assert len(knit_module_ar_quiver(orient("E6"))) == 36
