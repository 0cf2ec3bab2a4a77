"""Edge ideals of simple graphs, unicyclic invariants and depth stability.

Vertices are 1-indexed throughout; vertex i corresponds to the variable x_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import networkx as nx

from .monomial import DomainError, Monomial, MonomialIdeal, Ring, mul, power
from .socle import socle_basis, socle_module_mingens

MAX_CYCLE_VERTICES = 12
DEFAULT_CYCLE_LIMIT = 20_000


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            i, j = sorted(int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i < 1 or j > self.n:
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge {(i, j)}")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def cycle(cls, length: int) -> "SimpleGraph":
        return cls(length, tuple((i, i % length + 1) for i in range(1, length + 1)))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in range(1, self.n + 1)}
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def is_connected(self) -> bool:
        return nx.is_connected(self.nx())

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.nx())

    def edge_monomial(self, e: tuple[int, int]) -> Monomial:
        u = [0] * self.n
        u[e[0] - 1] += 1
        u[e[1] - 1] += 1
        return tuple(u)


@dataclass(frozen=True)
class GraphAnalysis:
    components: tuple[tuple[int, ...], ...]
    is_bipartite: bool
    odd_cycles: tuple[tuple[int, ...], ...]
    leaf_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class UnicyclicInfo:
    cycle_vertices: tuple[int, ...]
    k: int
    e_star: tuple[tuple[int, int], ...]
    d_G: int
    u_G: Monomial


@dataclass(frozen=True)
class DstabBound:
    bound: int
    # |V| - (number of leaves) - k + 1, with 2k - 1 the longest odd cycle
    leaf_bound: int
    witnesses: tuple[tuple[tuple[int, int], ...], ...]


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal(Ring(G.n), tuple(G.edge_monomial(e) for e in G.edges))


def leaf_edges(G: SimpleGraph) -> tuple[tuple[int, int], ...]:
    deg = G.degrees()
    return tuple(e for e in G.edges if deg[e[0]] == 1 or deg[e[1]] == 1)


def odd_cycles(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> list[tuple[int, ...]]:
    """All odd cycles as vertex sequences (each cycle once).

    ``limit`` caps the number of cycles of any parity that are visited.
    """
    if G.n > MAX_CYCLE_VERTICES:
        raise DomainError(f"odd-cycle enumeration is capped at {MAX_CYCLE_VERTICES} vertices")
    out = []
    for count, cyc in enumerate(nx.simple_cycles(G.nx()), start=1):
        if count > limit:
            raise DomainError(f"more than {limit} cycles; raise the limit explicitly")
        if len(cyc) % 2 == 1:
            out.append(tuple(cyc))
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def graph_analysis(G: SimpleGraph, cycle_limit: int = DEFAULT_CYCLE_LIMIT) -> GraphAnalysis:
    g = G.nx()
    comps = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(g)))
    bip = nx.is_bipartite(g)
    cycles = () if bip else tuple(odd_cycles(G, cycle_limit))
    return GraphAnalysis(comps, bip, cycles, leaf_edges(G))


def odd_cycle_distance_ok(G: SimpleGraph, cycle_limit: int = DEFAULT_CYCLE_LIMIT) -> bool:
    """Every two odd cycles are at vertex-set distance at most one."""
    if not G.is_connected():
        raise DomainError("odd-cycle distance is only checked on connected graphs")
    if G.is_bipartite():
        return True
    vsets = sorted({frozenset(c) for c in odd_cycles(G, cycle_limit)}, key=sorted)
    nbhd = {v: set() for v in range(1, G.n + 1)}
    for i, j in G.edges:
        nbhd[i].add(j)
        nbhd[j].add(i)
    # closed neighbourhood of each cycle: everything within distance one
    reach = [set(s).union(*(nbhd[v] for v in s)) for s in vsets]
    for a, b in combinations(range(len(vsets)), 2):
        if reach[a].isdisjoint(vsets[b]):
            return False
    return True


def unicyclic_info(G: SimpleGraph) -> UnicyclicInfo:
    if not G.is_connected():
        raise DomainError("graph is not connected")
    if len(G.edges) != G.n:
        raise DomainError(f"graph is not unicyclic: {len(G.edges)} edges on {G.n} vertices")
    cycle = nx.find_cycle(G.nx())
    verts = tuple(e[0] for e in cycle)
    if len(verts) % 2 == 0:
        raise DomainError(f"the unique cycle has even length {len(verts)}")
    # rotate so the cycle starts at its smallest vertex
    s = verts.index(min(verts))
    verts = verts[s:] + verts[:s]
    cycle_edges = {tuple(sorted((verts[i], verts[(i + 1) % len(verts)]))) for i in range(len(verts))}
    leaves = set(leaf_edges(G))
    e_star = tuple(e for e in G.edges if e not in cycle_edges and e not in leaves)
    k = (len(verts) - 1) // 2
    u = [0] * G.n
    for v in verts:
        u[v - 1] += 1
    for e in e_star:
        u = list(mul(u, G.edge_monomial(e)))
    return UnicyclicInfo(verts, k, e_star, len(e_star) + k + 1, tuple(u))


def socle_oracle_unicyclic(G: SimpleGraph, m: int) -> set[Monomial]:
    """Socle monomials of I(G)^m predicted for a unicyclic nonbipartite G.

    They are (cycle product) * prod_{e in E1} e^(m_e) with E* inside E1,
    m_e >= 1 and sum m_e = m - k - 1; equivalently one copy of every E*
    edge times any m - d_G further edges.
    """
    info = unicyclic_info(G)
    free = m - info.d_G
    if free < 0:
        return set()
    edge_monos = [G.edge_monomial(e) for e in G.edges]
    out = set()
    for extra in combinations_with_replacement(edge_monos, free):
        u = info.u_G
        for e in extra:
            u = mul(u, e)
        out.add(u)
    return out


def free_rank1_check(G: SimpleGraph, R: int) -> bool:
    """Soc(I(G)) is free of rank one on u_G, checked through power d_G + R."""
    info = unicyclic_info(G)
    I = edge_ideal(G)
    for m in range(1, info.d_G):
        if socle_basis(I, m):
            return False
    for r in range(R + 1):
        expected = [mul(v, info.u_G) for v in power(I, r).gens]
        if len(set(expected)) != len(expected):
            return False
        if socle_basis(I, info.d_G + r).as_set() != set(expected):
            return False
    summary = socle_module_mingens(I, info.d_G + R)
    return summary.generators() == [(info.d_G - 1, info.u_G)]


def spanning_unicyclic_nonbipartite(G: SimpleGraph) -> list[tuple[tuple[int, int], ...]]:
    """Edge sets of all connected spanning subgraphs with exactly one cycle, odd.

    Backtracking over the edges with a parity union-find: at most one edge
    may close a cycle, and it must close an odd one.
    """
    if not G.is_connected():
        raise DomainError("graph is not connected")
    edges = list(G.edges)
    n = G.n
    out = []

    def find(parent, parity, v):
        p = 0
        while parent[v] != v:
            p ^= parity[v]
            v = parent[v]
        return v, p

    def rec(pos, parent, parity, chosen, comps, closed):
        remaining = len(edges) - pos
        # every remaining merge needs its own edge, plus the cycle edge
        if comps - 1 + (0 if closed else 1) > remaining:
            return
        if len(chosen) == n:
            if comps == 1 and closed:
                out.append(tuple(chosen))
            return
        i, j = edges[pos]
        ri, pi = find(parent, parity, i)
        rj, pj = find(parent, parity, j)
        if ri != rj:
            parent2, parity2 = dict(parent), dict(parity)
            parent2[rj] = ri
            parity2[rj] = pi ^ pj ^ 1
            rec(pos + 1, parent2, parity2, chosen + [(i, j)], comps - 1, closed)
        elif not closed and pi == pj:
            rec(pos + 1, parent, parity, chosen + [(i, j)], comps, True)
        rec(pos + 1, parent, parity, chosen, comps, closed)

    verts = range(1, n + 1)
    rec(0, {v: v for v in verts}, {v: 0 for v in verts}, [], n, False)
    return out


def _leaf_count(G: SimpleGraph) -> int:
    return sum(1 for d in G.degrees().values() if d == 1)


def dstab_bound(G: SimpleGraph) -> DstabBound:
    """min d_H over spanning unicyclic nonbipartite subgraphs H of G."""
    if G.is_bipartite():
        raise DomainError("the bound is stated for nonbipartite graphs")
    if not G.is_connected():
        raise DomainError("graph is not connected")
    subs = spanning_unicyclic_nonbipartite(G)
    values = [unicyclic_info(SimpleGraph(G.n, h)).d_G for h in subs]
    best = min(values)
    longest = max(len(c) for c in odd_cycles(G))
    k = (longest + 1) // 2
    witnesses = tuple(h for h, v in zip(subs, values) if v == best)
    return DstabBound(best, G.n - _leaf_count(G) - k + 1, witnesses)


def dstab_from_socle(G: SimpleGraph, M: int) -> int | None:
    """First power m <= M with a nonzero socle, or None if there is none."""
    if G.is_bipartite():
        raise DomainError("dstab from the socle is only used for nonbipartite graphs")
    if not G.is_connected():
        raise DomainError("graph is not connected")
    I = edge_ideal(G)
    for m in range(1, M + 1):
        if socle_basis(I, m):
            return m
    return None
