"""Command-line front end: ``soclekit <group> <command> [options]``.

Inputs are JSON (inline or a file path); the report is printed to stdout as
JSON with sorted keys.  Exit codes: 0 success, 1 I/O or parse error,
2 domain error (a precondition of the requested operation failed).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import graphs, polymatroid, socle
from .monomial import (
    DimensionMismatchError,
    DomainError,
    MonomialIdeal,
    Ring,
    colon_ideal,
    colon_maximal,
    power,
)
from .graphs import SimpleGraph
from .polymatroid import PlpType, VeroneseType


class InputError(Exception):
    """Unreadable or malformed input."""


# ---------------------------------------------------------------------------
# file formats


def load_json(source: str):
    """Parse ``source`` as inline JSON if it looks like JSON, else read it as a path."""
    text = source.strip()
    try:
        if text[:1] in "{[":
            return json.loads(text)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {source!r}: {exc}") from exc


def ideal_from_json(data: dict) -> MonomialIdeal:
    try:
        gens = [tuple(int(x) for x in g) for g in data["gens"]]
        names = tuple(data.get("vars") or ())
        n = len(names) if names else (len(gens[0]) if gens else int(data["n"]))
        return MonomialIdeal(Ring(n, names), tuple(gens))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed ideal: {exc}") from exc


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.names), "gens": [list(g) for g in I.gens]}


def graph_from_json(data: dict) -> SimpleGraph:
    try:
        return SimpleGraph(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph: {exc}") from exc


def graph_to_json(G: SimpleGraph) -> dict:
    return {"vertices": G.n, "edges": [list(e) for e in G.edges]}


def plp_from_json(data: dict) -> PlpType:
    try:
        b = data["b"]
        return PlpType(data.get("a", [0] * len(b)), b, data["alpha"], data["beta"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed PLP type: {exc}") from exc


def plp_to_json(t: PlpType) -> dict:
    return t.to_dict()


def veronese_from_json(data: dict) -> VeroneseType:
    try:
        return VeroneseType(data["a"], int(data["d"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed Veronese type: {exc}") from exc


def veronese_to_json(v: VeroneseType) -> dict:
    return {"a": list(v.a), "d": v.d}


def monomials_json(ring: Ring, monos) -> list[dict]:
    return [{"exponents": list(u), "monomial": ring.render(u), "degree": sum(u)} for u in monos]


def ideal_report(I: MonomialIdeal) -> dict:
    return {
        "vars": list(I.ring.names),
        "numGens": len(I.gens),
        "gens": monomials_json(I.ring, I.gens),
    }


# ---------------------------------------------------------------------------
# commands


def _ideal(args) -> MonomialIdeal:
    return ideal_from_json(load_json(args.ideal))


def _graph(args) -> SimpleGraph:
    return graph_from_json(load_json(args.graph))


def _plp(args) -> PlpType:
    return plp_from_json(load_json(args.type))


def _veronese(args) -> VeroneseType:
    return veronese_from_json(load_json(args.type))


def _bound(value, default):
    return default if value is None else value


def cmd_ideal_power(args):
    I = _ideal(args)
    return {"power": args.power, "ideal": ideal_report(power(I, args.power))}


def cmd_ideal_colon(args):
    I = _ideal(args)
    if args.by:
        J = ideal_from_json(load_json(args.by))
        return {"by": "ideal", "ideal": ideal_report(colon_ideal(I, J))}
    return {"by": "maximal", "ideal": ideal_report(colon_maximal(I))}


def _basis_report(I, basis):
    return {
        "power": basis.power,
        "fiberDegree": basis.fiber_degree,
        "elements": monomials_json(I.ring, basis.elements),
    }


def cmd_ideal_socle_basis(args):
    I = _ideal(args)
    return _basis_report(I, socle.socle_basis(I, args.power))


def cmd_ideal_soc(args):
    I = _ideal(args)
    return {"ideal": ideal_report(socle.soc_ideal(I))}


def cmd_socle_mingens(args):
    I = _ideal(args)
    M = _bound(args.max_power, I.ring.n + 2)
    summary = socle.socle_module_mingens(I, M, threads=args.threads)
    return {
        "maxPower": M,
        "generators": [
            {"fiberDegree": k, "power": k + 1, **monomials_json(I.ring, [u])[0]}
            for k, u in summary.generators()
        ],
        "socleDimensions": {str(m): len(b) for m, b in sorted(summary.bases.items())},
    }


def cmd_socle_ratliff(args):
    I = _ideal(args)
    M = _bound(args.max_power, I.ring.n + 2)
    flags = socle.ratliff_check(I, M)
    return {"maxPower": M, "checks": flags, "holds": all(flags)}


def cmd_socle_spread(args):
    return {"analyticSpread": socle.analytic_spread(_ideal(args))}


def cmd_socle_product_check(args):
    I1 = _ideal(args)
    I2 = ideal_from_json(load_json(args.ideal2))
    M = _bound(args.max_power, I1.ring.n + I2.ring.n + 2)
    return {"maxPower": M, "holds": socle.product_decomposition_check(I1, I2, M)}


def cmd_socle_relation_graph(args):
    I = _ideal(args)
    gamma = socle.linear_relation_graph(I)
    out = {
        "vertices": list(gamma.vertices),
        "edges": [list(e) for e in gamma.edges],
        "connected": gamma.is_connected(),
    }
    if args.check:
        out["generatorCheck"] = socle.relation_graph_generator_check(I).value
    return out


def cmd_graph_edge_ideal(args):
    return {"ideal": ideal_report(graphs.edge_ideal(_graph(args)))}


def cmd_graph_analyze(args):
    a = graphs.graph_analysis(_graph(args))
    return {
        "components": [list(c) for c in a.components],
        "isBipartite": a.is_bipartite,
        "oddCycles": [list(c) for c in a.odd_cycles],
        "leafEdges": [list(e) for e in a.leaf_edges],
    }


def _unicyclic_report(G, info):
    ring = Ring(G.n)
    return {
        "cycleVertices": list(info.cycle_vertices),
        "k": info.k,
        "eStar": [list(e) for e in info.e_star],
        "dG": info.d_G,
        "uG": monomials_json(ring, [info.u_G])[0],
    }


def cmd_graph_unicyclic(args):
    G = _graph(args)
    return _unicyclic_report(G, graphs.unicyclic_info(G))


def cmd_graph_oracle(args):
    G = _graph(args)
    monos = sorted(graphs.socle_oracle_unicyclic(G, args.power), reverse=True)
    return {"power": args.power, "elements": monomials_json(Ring(G.n), monos)}


def cmd_graph_free_check(args):
    G = _graph(args)
    R = _bound(args.rank_bound, 2)
    return {"rankBound": R, "holds": graphs.free_rank1_check(G, R)}


def cmd_graph_spanning(args):
    G = _graph(args)
    subs = graphs.spanning_unicyclic_nonbipartite(G)
    return {
        "count": len(subs),
        "subgraphs": [
            {"edges": [list(e) for e in h], "dH": graphs.unicyclic_info(SimpleGraph(G.n, h)).d_G}
            for h in subs
        ],
    }


def cmd_graph_dstab(args):
    G = _graph(args)
    M = _bound(args.max_power, G.n + 2)
    bound = graphs.dstab_bound(G)
    return {
        "maxPower": M,
        "fromSocle": graphs.dstab_from_socle(G, M),
        "bound": bound.bound,
        "leafBound": bound.leaf_bound,
    }


def cmd_plp_validate(args):
    ok, problems = polymatroid.plp_validate(_plp(args))
    return {"valid": ok, "diagnostics": problems}


def cmd_plp_gens(args):
    return {"ideal": ideal_report(polymatroid.plp_gens(_plp(args)))}


def cmd_plp_feasible(args):
    return {"feasible": polymatroid.plp_feasible(_plp(args))}


def cmd_plp_witness(args):
    w = polymatroid.plp_witness(_plp(args))
    return {"witness": None if w is None else list(w)}


def cmd_plp_soc_type(args):
    t = polymatroid.plp_soc_type(_plp(args))
    return {"zeroIdeal": t is None, "type": None if t is None else plp_to_json(t)}


def cmd_plp_power_type(args):
    return {"power": args.power, "type": plp_to_json(polymatroid.plp_power_type(_plp(args), args.power))}


def cmd_plp_depth_zero(args):
    return {"depthZero": polymatroid.plp_depth_zero(_plp(args))}


def cmd_plp_socstar(args):
    return {"socStarNonzero": polymatroid.plp_socstar_nonzero(_plp(args))}


def cmd_plp_degree_check(args):
    t = _plp(args)
    k_max = _bound(args.kmax, t.n + 1)
    return {"kMax": k_max, "holds": polymatroid.plp_socstar_degree_check(t, k_max)}


def cmd_veronese_to_plp(args):
    t = polymatroid.veronese_to_plp(_veronese(args))
    return {"zeroIdeal": t is None, "type": None if t is None else plp_to_json(t)}


def cmd_veronese_rank(args):
    subset = [int(x) for x in args.subset.split(",") if x.strip()] if args.subset else []
    return {"subset": subset, "rank": polymatroid.veronese_rank(_veronese(args), subset)}


def cmd_veronese_equigen(args):
    rep = polymatroid.veronese_equigen(_veronese(args))
    return {
        "k0": rep.k0,
        "equiGenerated": rep.equi_generated,
        "violatingSets": [list(A) for A in rep.violating_sets],
        "depthZero": rep.depth_zero,
    }


def cmd_check_exchange(args):
    I = _ideal(args)
    ok, cex = polymatroid.exchange_check(I)
    out = {"holds": ok, "counterexample": None}
    if cex is not None:
        u, v, i = cex
        out["counterexample"] = {"u": list(u), "v": list(v), "i": i}
    return out


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="soclekit", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads for socle computations (default: $SOCLEKIT_THREADS or 1)")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    groups = parser.add_subparsers(dest="group", required=True)

    def add(group, name, func, *inputs, **extra):
        p = group.add_parser(name)
        for flag in inputs:
            p.add_argument(f"--{flag}", required=True)
        for flag, kw in extra.items():
            p.add_argument(f"--{flag.replace('_', '-')}", **kw)
        p.set_defaults(func=func, command=name)
        return p

    opt_int = {"type": int, "default": None}
    req_int = {"type": int, "required": True}

    g = groups.add_parser("ideal").add_subparsers(dest="cmd", required=True)
    add(g, "power", cmd_ideal_power, "ideal", power=req_int)
    add(g, "colon", cmd_ideal_colon, "ideal", by={"default": None, "help": "ideal to divide by (default: the maximal ideal)"})
    add(g, "socle-basis", cmd_ideal_socle_basis, "ideal", power=req_int)
    add(g, "soc", cmd_ideal_soc, "ideal")

    g = groups.add_parser("socle").add_subparsers(dest="cmd", required=True)
    add(g, "mingens", cmd_socle_mingens, "ideal", max_power=opt_int)
    add(g, "ratliff", cmd_socle_ratliff, "ideal", max_power=opt_int)
    add(g, "spread", cmd_socle_spread, "ideal")
    add(g, "product-check", cmd_socle_product_check, "ideal", "ideal2", max_power=opt_int)
    add(g, "relation-graph", cmd_socle_relation_graph, "ideal", check={"action": "store_true"})

    g = groups.add_parser("graph").add_subparsers(dest="cmd", required=True)
    add(g, "edge-ideal", cmd_graph_edge_ideal, "graph")
    add(g, "analyze", cmd_graph_analyze, "graph")
    add(g, "unicyclic", cmd_graph_unicyclic, "graph")
    add(g, "oracle", cmd_graph_oracle, "graph", power=req_int)
    add(g, "free-check", cmd_graph_free_check, "graph", rank_bound=opt_int)
    add(g, "spanning", cmd_graph_spanning, "graph")
    add(g, "dstab", cmd_graph_dstab, "graph", max_power=opt_int)

    g = groups.add_parser("plp").add_subparsers(dest="cmd", required=True)
    add(g, "validate", cmd_plp_validate, "type")
    add(g, "gens", cmd_plp_gens, "type")
    add(g, "feasible", cmd_plp_feasible, "type")
    add(g, "witness", cmd_plp_witness, "type")
    add(g, "soc-type", cmd_plp_soc_type, "type")
    add(g, "power-type", cmd_plp_power_type, "type", power=req_int)
    add(g, "depth-zero", cmd_plp_depth_zero, "type")
    add(g, "socstar", cmd_plp_socstar, "type")
    add(g, "degree-check", cmd_plp_degree_check, "type", kmax=opt_int)

    g = groups.add_parser("veronese").add_subparsers(dest="cmd", required=True)
    add(g, "to-plp", cmd_veronese_to_plp, "type")
    add(g, "rank", cmd_veronese_rank, "type", subset={"default": "", "help": "comma-separated 1-based indices"})
    add(g, "equigen", cmd_veronese_equigen, "type")

    g = groups.add_parser("check").add_subparsers(dest="cmd", required=True)
    add(g, "exchange", cmd_check_exchange, "ideal")
    return parser


def run(argv=None) -> tuple[dict, int]:
    """Parse ``argv``, dispatch, and return (report, exit code)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        if not exc.code:
            raise
        # argparse already printed the usage message; bad flags are input errors
        return {"status": "input-error", "error": "invalid command line"}, 1
    if args.threads is None:
        args.threads = socle.default_threads()
    report = {"command": f"{args.group} {args.command}"}
    start = time.perf_counter()
    try:
        report["result"] = args.func(args)
        report["status"] = "ok"
        code = 0
    except InputError as exc:
        report.update(status="input-error", error=str(exc))
        code = 1
    except (DomainError, DimensionMismatchError) as exc:
        report.update(status="domain-error", error=str(exc))
        code = 2
    except ValueError as exc:
        # malformed values that survived parsing (bad names, negative exponents)
        report.update(status="input-error", error=str(exc))
        code = 1
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report, code


def main(argv=None) -> int:
    report, code = run(argv)
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
