"""Write the named example inputs under fixtures/ as JSON files."""
import json
from pathlib import Path

from soclekit import examples as ex
from soclekit.cli import graph_to_json, ideal_to_json, plp_to_json, veronese_to_json
from soclekit.graphs import SimpleGraph, edge_ideal
from soclekit.polymatroid import PlpType, veronese_to_plp

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    graphs = {
        "fig2": ex.bowtie_with_pendants(),
        "joined_triangles": ex.joined_triangles_graph(),
        "k3": SimpleGraph.complete(3),
        "k5": SimpleGraph.complete(5),
        "c5": SimpleGraph.cycle(5),
        "c5chord": ex.c5_with_chord(),
        "c5pendant": ex.c5_with_pendant_path(),
    }
    ideals = {
        "fig2": edge_ideal(graphs["fig2"]),
        "joined_triangles": ex.joined_triangles_ideal(),
        "c3": ex.triangle_ideal(),
        "c3y": ex.triangle_ideal(("y1", "y2", "y3")),
        "late_socle_t3": ex.late_socle_ideal(3),
        "late_socle_t4": ex.late_socle_ideal(4),
    }
    files = {}
    for name, G in graphs.items():
        files[f"{name}.graph.json"] = graph_to_json(G)
    for name, I in ideals.items():
        files[f"{name}.ideal.json"] = ideal_to_json(I)
    files["veronese_3312_6.veronese.json"] = veronese_to_json(ex.VERONESE_3312_6)
    files["veronese_111_2.veronese.json"] = veronese_to_json(ex.SQUAREFREE_QUADRICS)
    files["veronese_3312_6.plp.json"] = plp_to_json(veronese_to_plp(ex.VERONESE_3312_6))
    files["small.plp.json"] = plp_to_json(PlpType.basic((2, 2), (0, 3), (2, 3)))
    for fname, data in sorted(files.items()):
        (OUT / fname).write_text(json.dumps(data, sort_keys=True) + "\n", encoding="utf-8")
        print(fname)


if __name__ == "__main__":
    main()
