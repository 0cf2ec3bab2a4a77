"""The twelve acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed at the end of the
pytest run (see conftest.py) and when this file is executed directly.
"""
import sys

import pytest

from soclekit import examples as ex
from soclekit.corpora import basic_types, connected_graphs, random_feasible_types, unicyclic_odd_corpus
from soclekit.graphs import (
    SimpleGraph,
    dstab_bound,
    dstab_from_socle,
    edge_ideal,
    free_rank1_check,
    odd_cycle_distance_ok,
    socle_oracle_unicyclic,
    spanning_unicyclic_nonbipartite,
    unicyclic_info,
)
from soclekit.monomial import contains, ideal_contains, multiply, power
from soclekit.polymatroid import (
    exchange_check,
    plp_depth_zero,
    plp_feasible,
    plp_gens,
    plp_power_type,
    plp_soc_type,
    plp_socstar_degree_check,
    plp_socstar_nonzero,
    plp_witness,
    veronese_equigen,
    veronese_gens,
)
from soclekit.socle import (
    analytic_spread,
    degree_profile,
    join_ideals,
    product_decomposition,
    product_decomposition_check,
    soc_ideal,
    socle_basis,
    socle_module_mingens,
)

RESULTS: dict[int, str] = {}

CORPUS_SEED = 20240601
TYPES_200 = random_feasible_types(200, seed=CORPUS_SEED, n_min=2)
TYPES_50 = random_feasible_types(50, seed=CORPUS_SEED + 1, n_min=2)


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_01_bowtie_with_pendants():
    G = ex.bowtie_with_pendants()
    gens = socle_module_mingens(edge_ideal(G), 5).generators()
    expected = [(2, (1, 1, 1, 1, 1, 0, 0, 0, 0)), (3, (1, 1, 3, 1, 1, 0, 0, 0, 0))]
    dstab = dstab_from_socle(G, 5)
    subs = spanning_unicyclic_nonbipartite(G)
    d_values = [unicyclic_info(SimpleGraph(G.n, h)).d_G for h in subs]
    bound = dstab_bound(G).bound
    ok = gens == expected and dstab == 3 and len(subs) == 6 and set(d_values) == {4} and bound == 4 > dstab
    record(1, ok, f"mingens={gens} dstab={dstab} subgraphs={len(subs)} d_H={sorted(set(d_values))} bound={bound}")


def test_criterion_02_joined_triangles():
    u = (1, 1, 1, 1, 1, 1, 0)
    I = ex.joined_triangles_ideal()
    in_socle = u in socle_basis(I, 3).as_set()
    profile = degree_profile(I, 3)
    C3, C3y = ex.triangle_ideal(), ex.triangle_ideal(("y1", "y2", "y3"))
    split = product_decomposition_check(C3, C3y, 4)
    explained = u[:6] in product_decomposition(C3, C3y, 3) and u[:6] in socle_basis(join_ideals(C3, C3y), 3).as_set()
    ok = in_socle and 6 in profile and 6 > 2 * 3 - 1 and split and explained
    record(2, ok, f"u in socle={in_socle} profile={sorted(set(profile))} decomposition={split} explained={explained}")


def test_criterion_03_complete_graphs():
    K3, K5 = SimpleGraph.complete(3), SimpleGraph.complete(5)
    a, b, c = dstab_from_socle(K3, 3), dstab_bound(K3).bound, dstab_bound(K5).bound
    record(3, a == b == 2 and c == 2, f"dstab(K3)={a} bound(K3)={b} bound(K5)={c}")


def test_criterion_04_free_rank_one():
    corpus = unicyclic_odd_corpus()
    bad = []
    for G in corpus:
        d = unicyclic_info(G).d_G
        if not free_rank1_check(G, 2) or dstab_from_socle(G, d) != d:
            bad.append(G.edges)
    record(4, not bad and len(corpus) > 0, f"{len(corpus)} unicyclic graphs, failures={bad[:3]}")


def test_criterion_05_unicyclic_oracle():
    corpus = unicyclic_odd_corpus()
    bad, checks = [], 0
    for G in corpus:
        I = edge_ideal(G)
        for m in range(1, unicyclic_info(G).d_G + 3):
            checks += 1
            if socle_oracle_unicyclic(G, m) != socle_basis(I, m).as_set():
                bad.append((G.edges, m))
    record(5, not bad, f"{len(corpus)} graphs, {checks} (graph, power) pairs, failures={bad[:3]}")


def test_criterion_06_degree_profile():
    corpus = [G for G in connected_graphs(7) if odd_cycle_distance_ok(G)]
    bad = []
    for G in corpus:
        I = edge_ideal(G)
        for m in range(1, 5):
            if any(d != 2 * m - 1 for d in degree_profile(I, m)):
                bad.append((G.edges, m))
    record(6, not bad, f"{len(corpus)} connected graphs on <= 7 vertices, failures={bad[:3]}")


def test_criterion_07_feasibility():
    total = feasible = 0
    bad = []
    for t in basic_types(4, 3):
        total += 1
        I = plp_gens(t)
        f = plp_feasible(t)
        feasible += f
        if f == I.is_zero():
            bad.append(t)
        elif f and not contains(I, plp_witness(t)):
            bad.append(t)
    record(7, not bad and total > 1000, f"{total} basic types ({feasible} feasible), failures={bad[:3]}")


def test_criterion_08_soc_and_power_types():
    bad = []
    for t in TYPES_200:
        I = plp_gens(t)
        s = plp_soc_type(t)
        soc = soc_ideal(I)
        if (not soc.is_zero()) if s is None else plp_gens(s) != soc:
            bad.append(("soc", t))
        for m in range(1, 4):
            if plp_gens(plp_power_type(t, m)) != power(I, m):
                bad.append(("power", m, t))
    record(8, not bad, f"{len(TYPES_200)} seeded types, failures={bad[:3]}")


def test_criterion_09_depth_and_spread_criteria():
    bad = []
    for t in TYPES_200:
        I = plp_gens(t)
        if plp_depth_zero(t) != (not soc_ideal(I).is_zero()):
            bad.append(("depth", t))
        if plp_socstar_nonzero(t) != (analytic_spread(I) == t.n):
            bad.append(("spread", t))
    record(9, not bad, f"{len(TYPES_200)} seeded types, failures={bad[:3]}")


def test_criterion_10_socstar_degrees():
    bad = [t for t in TYPES_50 if not plp_socstar_degree_check(t, t.n + 1)]
    patterns = {}
    for t in (3, 4):
        I = ex.late_socle_ideal(t)
        patterns[t] = [bool(socle_basis(I, m)) for m in range(1, t + 1)]
    contrast = patterns[3] == [False, False, True] and patterns[4] == [False, False, False, True]
    record(10, not bad and contrast, f"{len(TYPES_50)} seeded types, failures={bad[:3]}, example socle pattern={patterns}")


def test_criterion_11_veronese_equigen():
    r = veronese_equigen(ex.VERONESE_3312_6)
    I = veronese_gens(ex.VERONESE_3312_6)
    not_contained = not ideal_contains(multiply(I, soc_ideal(I)), soc_ideal(power(I, 2)))
    ok = r.k0 == 1 and not r.equi_generated and r.violating_sets == ((1, 2, 3),) and not_contained
    record(11, ok, f"k0={r.k0} equiGenerated={r.equi_generated} violating={r.violating_sets} soc(I^2) outside I*soc(I)={not_contained}")


def test_criterion_12_exchange():
    corpus = [t for t in basic_types(4, 3) if plp_feasible(t)] + TYPES_200 + TYPES_50
    bad = [t for t in corpus if not exchange_check(plp_gens(t))[0]]
    record(12, not bad, f"{len(corpus)} feasible types, failures={bad[:3]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
