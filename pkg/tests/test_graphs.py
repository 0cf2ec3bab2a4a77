from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from soclekit import examples as ex
from soclekit.corpora import unicyclic_odd_corpus
from soclekit.graphs import (
    SimpleGraph,
    dstab_bound,
    dstab_from_socle,
    edge_ideal,
    free_rank1_check,
    graph_analysis,
    odd_cycle_distance_ok,
    odd_cycles,
    socle_oracle_unicyclic,
    spanning_unicyclic_nonbipartite,
    unicyclic_info,
)
from soclekit.monomial import DomainError, power
from soclekit.socle import degree_profile, socle_basis

C3 = SimpleGraph.cycle(3)
C5 = SimpleGraph.cycle(5)


def random_graphs(n_min=2, n_max=6):
    def build(n):
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        return st.lists(st.sampled_from(pairs), unique=True).map(lambda es: SimpleGraph(n, tuple(es)))

    return st.integers(n_min, n_max).flatmap(build)


def test_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(3, ((1, 1),))
    with pytest.raises(ValueError):
        SimpleGraph(3, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        SimpleGraph(3, ((1, 4),))
    assert SimpleGraph(3, ((2, 1),)).edges == ((1, 2),)


def test_edge_ideal_examples():
    assert edge_ideal(C3).gens == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert edge_ideal(SimpleGraph(3, ())).is_zero()
    assert len(edge_ideal(ex.bowtie_with_pendants()).gens) == 10


def test_graph_analysis_examples():
    c4 = graph_analysis(SimpleGraph.cycle(4))
    assert c4.is_bipartite and c4.odd_cycles == ()
    two = SimpleGraph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)))
    assert len(graph_analysis(two).components) == 2
    fig = graph_analysis(ex.bowtie_with_pendants())
    assert not fig.is_bipartite
    sets = {frozenset(c) for c in fig.odd_cycles}
    assert {frozenset({1, 2, 3}), frozenset({3, 4, 5})} <= sets
    assert set(fig.leaf_edges) == {(1, 7), (2, 6), (4, 8), (5, 9)}


def test_odd_cycle_cap():
    with pytest.raises(DomainError):
        odd_cycles(SimpleGraph.complete(13))
    with pytest.raises(DomainError):
        odd_cycles(SimpleGraph.complete(8), limit=10)


def test_odd_cycle_distance_examples():
    assert odd_cycle_distance_ok(ex.bowtie_with_pendants())
    assert not odd_cycle_distance_ok(ex.joined_triangles_graph())
    assert odd_cycle_distance_ok(C5)
    with pytest.raises(DomainError):
        odd_cycle_distance_ok(SimpleGraph(4, ((1, 2), (3, 4))))


def test_unicyclic_info_examples():
    c3 = unicyclic_info(C3)
    assert (c3.k, c3.e_star, c3.d_G, c3.u_G) == (1, (), 2, (1, 1, 1))
    p = unicyclic_info(ex.c5_with_pendant_path())
    assert p.e_star == ((1, 6),)
    assert p.d_G == 4
    assert p.u_G == (2, 1, 1, 1, 1, 1, 0)
    assert p.u_G in socle_basis(edge_ideal(ex.c5_with_pendant_path()), 4).as_set()
    c5 = unicyclic_info(C5)
    assert (c5.k, c5.d_G, c5.u_G) == (2, 3, (1, 1, 1, 1, 1))


def test_unicyclic_info_errors():
    with pytest.raises(DomainError, match="not connected"):
        unicyclic_info(SimpleGraph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6))))
    with pytest.raises(DomainError, match="not unicyclic"):
        unicyclic_info(ex.c5_with_chord())
    with pytest.raises(DomainError, match="even"):
        unicyclic_info(SimpleGraph.cycle(4))


def test_socle_oracle_examples():
    assert socle_oracle_unicyclic(C3, 2) == {(1, 1, 1)}
    assert socle_oracle_unicyclic(C3, 3) == {(2, 2, 1), (2, 1, 2), (1, 2, 2)}
    G = ex.c5_with_pendant_path()
    for m in range(1, unicyclic_info(G).d_G):
        assert socle_oracle_unicyclic(G, m) == set()


def test_socle_oracle_matches_box_scan_c3():
    I = edge_ideal(C3)
    for m in range(1, 4):
        assert socle_oracle_unicyclic(C3, m) == oracles.socle(oracles.power(I.gens, m, 3), 3)


def test_free_rank1_examples():
    assert free_rank1_check(C3, 2)
    I = edge_ideal(C3)
    assert [len(socle_basis(I, 2 + r)) for r in range(3)] == [len(power(I, r).gens) for r in range(3)] == [1, 3, 6]
    with pytest.raises(DomainError):
        free_rank1_check(ex.c5_with_chord(), 1)
    assert free_rank1_check(ex.c5_with_pendant_path(), 1)


def test_unicyclic_socle_structure():
    for G in unicyclic_odd_corpus(max_vertices=6):
        info = unicyclic_info(G)
        I = edge_ideal(G)
        for m in range(1, info.d_G + 2):
            for u in socle_basis(I, m).elements:
                assert sum(u) == 2 * m - 1
                assert all(u[v - 1] >= 1 for v in info.cycle_vertices)


def test_spanning_examples():
    subs = spanning_unicyclic_nonbipartite(ex.bowtie_with_pendants())
    assert len(subs) == 6
    triangle_edges = {(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)}
    full = set(ex.bowtie_with_pendants().edges)
    assert {frozenset(full - set(h)) for h in subs} == {frozenset({e}) for e in triangle_edges}
    assert spanning_unicyclic_nonbipartite(C3) == [C3.edges]
    assert spanning_unicyclic_nonbipartite(SimpleGraph.cycle(4)) == []
    with pytest.raises(DomainError):
        spanning_unicyclic_nonbipartite(SimpleGraph(4, ((1, 2), (3, 4))))


@settings(max_examples=40, deadline=None)
@given(random_graphs())
def test_spanning_matches_subset_scan(G):
    if not G.is_connected():
        return
    expected = set()
    for sub in combinations(G.edges, G.n):
        h = nx.Graph(list(sub))
        h.add_nodes_from(range(1, G.n + 1))
        if nx.is_connected(h) and not nx.is_bipartite(h):
            expected.add(tuple(sub))
    assert set(spanning_unicyclic_nonbipartite(G)) == expected


def test_dstab_bound_examples():
    fig = dstab_bound(ex.bowtie_with_pendants())
    assert fig.bound == 4 and len(fig.witnesses) == 6
    assert dstab_bound(SimpleGraph.complete(5)).bound == 2
    assert dstab_bound(C3).bound == 2
    with pytest.raises(DomainError):
        dstab_bound(SimpleGraph.cycle(4))


def test_dstab_from_socle_examples():
    assert dstab_from_socle(ex.bowtie_with_pendants(), 5) == 3
    assert dstab_from_socle(SimpleGraph.complete(3), 3) == 2
    assert dstab_from_socle(C5, 4) == 3
    assert dstab_from_socle(C5, 2) is None
    with pytest.raises(DomainError):
        dstab_from_socle(SimpleGraph.cycle(4), 3)


@settings(max_examples=30, deadline=None)
@given(random_graphs(n_min=3, n_max=6))
def test_dstab_from_socle_below_bound(G):
    if not G.is_connected() or G.is_bipartite():
        return
    found = dstab_from_socle(G, 4)
    if found is not None:
        assert found <= dstab_bound(G).bound


@settings(max_examples=30, deadline=None)
@given(random_graphs(n_min=3, n_max=6))
def test_odd_cycle_distance_degree_profile(G):
    if not G.is_connected() or not odd_cycle_distance_ok(G):
        return
    I = edge_ideal(G)
    for m in range(1, 4):
        assert all(d == 2 * m - 1 for d in degree_profile(I, m))
