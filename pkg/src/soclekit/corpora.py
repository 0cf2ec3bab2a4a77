"""Seeded test corpora: small graphs and PLP types."""
from __future__ import annotations

import random
from itertools import product

import networkx as nx

from .graphs import SimpleGraph
from .polymatroid import PlpType, plp_feasible, plp_validate


def _from_nx(g: nx.Graph) -> SimpleGraph:
    relabel = {v: i + 1 for i, v in enumerate(sorted(g.nodes))}
    return SimpleGraph(len(relabel), tuple((relabel[i], relabel[j]) for i, j in g.edges))


def connected_graphs(max_vertices: int = 7) -> list[SimpleGraph]:
    """All connected graphs on 2..max_vertices vertices up to isomorphism (max 7)."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return [_from_nx(g) for g in nx.graph_atlas_g() if 1 < g.number_of_nodes() <= max_vertices and nx.is_connected(g)]


def unicyclic_odd_corpus(max_vertices: int = 8, cycle_lengths=(3, 5, 7), max_trees: int = 3) -> list[SimpleGraph]:
    """Unicyclic graphs whose cycle is odd, built by hanging up to ``max_trees``
    trees off distinct cycle vertices; one representative per isomorphism class."""
    reps: list[nx.Graph] = []
    for length in cycle_lengths:
        if length <= max_vertices:
            _grow(length, max_vertices - length, max_trees, reps)
    return [_from_nx(g) for g in reps]


def _grow(length: int, spare: int, max_trees: int, reps: list) -> None:
    """Hang rooted trees off distinct cycle vertices, using at most ``spare`` new vertices."""
    rooted = _rooted_trees(spare + 1)

    def rec(pos, used, budget, g):
        if pos == length or used == max_trees or budget == 0:
            if not any(nx.is_isomorphic(g, h) for h in reps):
                reps.append(g.copy())
            return
        rec(pos + 1, used, budget, g)
        for size in range(2, budget + 2):
            for t in rooted[size]:
                h = g.copy()
                offset = h.number_of_nodes()
                mapping = {v: (pos if v == 0 else offset + v - 1) for v in t.nodes}
                h.add_edges_from((mapping[a], mapping[b]) for a, b in t.edges)
                rec(pos + 1, used + 1, budget - (size - 1), h)

    rec(0, 0, spare, nx.cycle_graph(length))


def _rooted_trees(max_size: int) -> dict[int, list[nx.Graph]]:
    """Rooted trees by vertex count, root labelled 0, one per rooted isomorphism class."""
    out: dict[int, list[nx.Graph]] = {1: [nx.empty_graph(1)]}
    for size in range(2, max_size + 1):
        found: list[nx.Graph] = []
        for t in nx.nonisomorphic_trees(size):
            for root in t.nodes:
                h = nx.relabel_nodes(t, {root: 0, 0: root}) if root else t.copy()
                nx.set_node_attributes(h, {v: v == 0 for v in h.nodes}, "root")
                if not any(nx.is_isomorphic(h, f, node_match=lambda a, b: a["root"] == b["root"]) for f in found):
                    found.append(h)
        out[size] = found
    return out


def basic_types(n_max: int = 4, entry_max: int = 3):
    """Every valid basic PLP type with n <= n_max and all entries <= entry_max."""
    for n in range(1, n_max + 1):
        for b in product(range(entry_max + 1), repeat=n):
            for beta_tail in _nondecreasing(b[0], entry_max, n - 1):
                beta = (b[0],) + beta_tail
                for alpha_mid in _nondecreasing(0, entry_max, n - 2) if n > 1 else [()]:
                    alpha = ((0,) + alpha_mid + (beta[-1],)) if n > 1 else (beta[-1],)
                    t = PlpType.basic(b, alpha, beta)
                    if plp_validate(t)[0]:
                        yield t


def _nondecreasing(lo: int, hi: int, length: int):
    if length <= 0:
        yield ()
        return
    for v in range(lo, hi + 1):
        for rest in _nondecreasing(v, hi, length - 1):
            yield (v,) + rest


def random_feasible_types(count: int, seed: int, n_max: int = 4, entry_max: int = 3, n_min: int = 1) -> list[PlpType]:
    """``count`` distinct feasible basic types of positive degree, seeded.

    Degree 0 is skipped: it gives the unit ideal, which has no socle.
    """
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        b = tuple(rng.randint(0, entry_max) for _ in range(n))
        beta = [b[0]]
        for _ in range(n - 1):
            beta.append(rng.randint(beta[-1], entry_max))
        alpha = [0] if n > 1 else []
        for _ in range(n - 2):
            alpha.append(rng.randint(alpha[-1], entry_max))
        alpha.append(beta[-1])
        t = PlpType.basic(b, alpha, beta)
        if t.d == 0 or t in seen or not plp_validate(t)[0] or not plp_feasible(t):
            continue
        seen.add(t)
        out.append(t)
    return out
