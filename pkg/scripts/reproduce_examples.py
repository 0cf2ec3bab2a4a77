"""Recompute the worked examples and print them as plain text."""
import argparse

from soclekit import examples as ex
from soclekit.graphs import SimpleGraph, dstab_bound, dstab_from_socle, edge_ideal, spanning_unicyclic_nonbipartite
from soclekit.monomial import ideal_contains, multiply, power
from soclekit.polymatroid import plp_soc_type, veronese_equigen, veronese_gens, veronese_to_plp
from soclekit.socle import degree_profile, soc_ideal, socle_basis, socle_module_mingens


def show_mingens(label, I, M):
    summary = socle_module_mingens(I, M)
    print(f"{label}: socle dimensions by power {[len(summary.bases[m]) for m in range(1, M + 1)]}")
    for k, u in summary.generators():
        print(f"  generator {I.ring.render(u)} at fiber degree {k} (power {k + 1})")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-power", type=int, default=5)
    args = parser.parse_args()

    G = ex.bowtie_with_pendants()
    show_mingens("two triangles with pendants", edge_ideal(G), args.max_power)
    print(f"  first nonzero socle power {dstab_from_socle(G, args.max_power)}, "
          f"spanning unicyclic bound {dstab_bound(G).bound} from {len(spanning_unicyclic_nonbipartite(G))} subgraphs")

    show_mingens("5-cycle with a chord", edge_ideal(ex.c5_with_chord()), 4)

    I = ex.joined_triangles_ideal()
    print(f"triangles joined by a 2-path: socle degrees at power 3 {sorted(set(degree_profile(I, 3)))}")

    for n in (3, 5):
        K = SimpleGraph.complete(n)
        print(f"K{n}: first nonzero socle power {dstab_from_socle(K, 4)}, bound {dstab_bound(K).bound}")

    for t in (3, 4):
        J = ex.late_socle_ideal(t)
        print(f"(x^{t}, x y^{t - 2} z, y^{t - 1} z): socle nonzero by power "
              f"{[bool(socle_basis(J, m)) for m in range(1, t + 2)]}")

    v = ex.VERONESE_3312_6
    t = veronese_to_plp(v)
    r = veronese_equigen(v)
    V = veronese_gens(v)
    print(f"Veronese {v.a}, d={v.d}: {len(V.gens)} generators, soc type {plp_soc_type(t).to_dict()}")
    print(f"  k0={r.k0} equi-generated={r.equi_generated} violating={r.violating_sets}")
    print(f"  soc(I^2) inside I*soc(I): {ideal_contains(multiply(V, soc_ideal(V)), soc_ideal(power(V, 2)))}")


if __name__ == "__main__":
    main()
