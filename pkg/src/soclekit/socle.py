"""Socle bases of ideal powers and the fiber-cone structure of Soc(I).

Grading convention: the fiber-cone degree k piece of Soc(I) is the socle of
the power m = k + 1.  Both indices are reported wherever they appear.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product as cartesian

import sympy

from .monomial import (
    DomainError,
    Monomial,
    MonomialIdeal,
    UnsupportedInputError,
    colon_ideal,
    embed,
    ideal_contains,
    ideal_sum,
    multiply,
    mul,
    power,
    socle_monomials,
)


class Verdict(enum.Enum):
    """Outcome of a hypothesis-guarded check."""

    HOLDS = "holds"
    FAILS = "fails"
    PRECONDITION_NOT_MET = "precondition-not-met"


@dataclass(frozen=True)
class SocleBasis:
    """Monomial K-basis of (I^m : m)/I^m."""

    power: int
    elements: tuple[Monomial, ...]

    @property
    def fiber_degree(self) -> int:
        return self.power - 1

    def __len__(self):
        return len(self.elements)

    def __bool__(self):
        return bool(self.elements)

    def as_set(self) -> set[Monomial]:
        return set(self.elements)


@dataclass(frozen=True)
class SocleModuleSummary:
    max_power: int
    bases: dict[int, SocleBasis]
    # fiber degree k -> minimal generators living in the socle of I^(k+1)
    min_gens: dict[int, tuple[Monomial, ...]]

    def generators(self) -> list[tuple[int, Monomial]]:
        """(fiber degree, monomial) pairs of all minimal generators found."""
        return [(k, u) for k in sorted(self.min_gens) for u in self.min_gens[k]]


@dataclass(frozen=True)
class LinearRelationGraph:
    vertices: tuple[int, ...]  # 1-based variable indices
    edges: tuple[tuple[int, int], ...]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen, stack = {self.vertices[0]}, [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SOCLEKIT_THREADS", "1")))
    except ValueError:
        return 1


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise DomainError("the socle module of the zero ideal is not defined here")
    if I.is_unit():
        raise DomainError("the socle module of the unit ideal is not defined here")


def socle_basis(I: MonomialIdeal, m: int) -> SocleBasis:
    """Monomials of (I^m : m) that are not in I^m, in canonical order."""
    _require_proper(I)
    if m < 1:
        raise DomainError("socle bases are reported for powers m >= 1")
    key = ("socle", m)
    cached = I._cache.get(key)
    if cached is None:
        rows = socle_monomials(power(I, m))
        elems = tuple(sorted((tuple(int(x) for x in r) for r in rows), reverse=True))
        cached = I._cache[key] = SocleBasis(m, elems)
    return cached


def socle_bases(I: MonomialIdeal, powers, threads: int | None = None) -> dict[int, SocleBasis]:
    """socle_basis for several powers, optionally on a thread pool."""
    powers = sorted(set(powers))
    threads = default_threads() if threads is None else threads
    if powers:
        power(I, powers[-1])  # fill the power cache sequentially
    if threads <= 1 or len(powers) <= 1:
        return {m: socle_basis(I, m) for m in powers}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda m: socle_basis(I, m), powers))
    return dict(zip(powers, results))


def soc_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by the socle monomials of I, so (I:m) = I + soc(I)."""
    return MonomialIdeal(I.ring, socle_basis(I, 1).elements)


def socle_module_mingens(I: MonomialIdeal, M: int, threads: int | None = None) -> SocleModuleSummary:
    """Minimal generators of Soc(I) as a fiber-cone module, up to power M.

    The fiber cone is standard graded, so an element of the power-(k+1)
    socle is redundant iff it is g*u for a generator g of I and a socle
    monomial u of I^k.
    """
    _require_proper(I)
    if M < 1:
        raise DomainError("the power bound must be at least 1")
    bases = socle_bases(I, range(1, M + 1), threads)
    min_gens = {}
    for k in range(M):
        below = bases[k].elements if k >= 1 else ()
        reached = {mul(g, u) for g in I.gens for u in below}
        min_gens[k] = tuple(u for u in bases[k + 1].elements if u not in reached)
    return SocleModuleSummary(M, bases, min_gens)


def ratliff_check(I: MonomialIdeal, M: int) -> list[bool]:
    """Entry m is (I^(m+1) : I) == I^m, for m = 0..M."""
    if I.is_zero():
        raise DomainError("the Ratliff condition needs a nonzero ideal")
    return [colon_ideal(power(I, m + 1), I) == power(I, m) for m in range(M + 1)]


def join_ideals(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    """(I1, I2) in the ring on both (disjoint) variable blocks."""
    ring = I1.ring.join(I2.ring)
    return ideal_sum(embed(I1, ring, 0), embed(I2, ring, I1.ring.n))


def product_decomposition(I1: MonomialIdeal, I2: MonomialIdeal, m: int) -> set[Monomial]:
    """Right-hand side of Soc(I) = Soc(I1)Soc(I2) at power m.

    Degrees add in the fiber cone, so powers r and s with r + s = m + 1
    contribute u1*u2.
    """
    out = set()
    for r in range(1, m + 1):
        s = m + 1 - r
        for u1 in socle_basis(I1, r).elements:
            for u2 in socle_basis(I2, s).elements:
                out.add(u1 + u2)
    return out


def product_decomposition_check(I1: MonomialIdeal, I2: MonomialIdeal, M: int) -> bool:
    I = join_ideals(I1, I2)
    return all(
        socle_basis(I, m).as_set() == product_decomposition(I1, I2, m) for m in range(1, M + 1)
    )


def analytic_spread(I: MonomialIdeal) -> int:
    """Rank over Q of the exponent matrix (equigenerated ideals only)."""
    if I.is_zero():
        return 0
    if I.generating_degree() is None:
        raise UnsupportedInputError("analytic spread is only computed for equigenerated ideals")
    return int(sympy.Matrix([list(g) for g in I.gens]).rank())


def linear_relation_graph(I: MonomialIdeal) -> LinearRelationGraph:
    """Edges {i, j} with x_i*u = x_j*v for some generators u, v."""
    gens = set(I.gens)
    n = I.ring.n
    edges = set()
    for u in I.gens:
        for i, j in cartesian(range(n), range(n)):
            if i == j or u[j] == 0 or (min(i, j) + 1, max(i, j) + 1) in edges:
                continue
            v = list(u)
            v[i] += 1
            v[j] -= 1
            if tuple(v) in gens:
                edges.add((min(i, j) + 1, max(i, j) + 1))
    vertices = sorted({v for e in edges for v in e})
    return LinearRelationGraph(tuple(vertices), tuple(sorted(edges)))


def relation_graph_generator_check(I: MonomialIdeal) -> Verdict:
    """Is there a socle monomial of degree d*n - 1 at power n?

    Applies only when I is generated in a single degree d and its linear
    relation graph is connected on all n variables.
    """
    d = I.generating_degree()
    n = I.ring.n
    if I.is_zero() or I.is_unit() or d is None:
        return Verdict.PRECONDITION_NOT_MET
    gamma = linear_relation_graph(I)
    if len(gamma.vertices) != n or not gamma.is_connected():
        return Verdict.PRECONDITION_NOT_MET
    found = any(sum(u) == d * n - 1 for u in socle_basis(I, n).elements)
    return Verdict.HOLDS if found else Verdict.FAILS


def socstar_containment_check(I: MonomialIdeal, k: int) -> bool:
    """soc(I^(k+1)) is contained in I * soc(I^k)."""
    if I.is_zero():
        raise DomainError("needs a nonzero ideal")
    if k < 1:
        raise DomainError("k must be positive")
    upper = socle_basis(I, k + 1).elements
    if not upper:
        return True
    lower = MonomialIdeal(I.ring, socle_basis(I, k).elements)
    return ideal_contains(multiply(I, lower), MonomialIdeal(I.ring, upper))


def degree_profile(I: MonomialIdeal, m: int) -> list[int]:
    """Sorted degrees of the socle monomials of I^m."""
    return sorted(sum(u) for u in socle_basis(I, m).elements)

