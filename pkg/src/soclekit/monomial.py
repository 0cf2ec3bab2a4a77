"""Exact arithmetic on monomials and monomial ideals.

Monomials are plain tuples of non-negative exponents.  A ``MonomialIdeal``
stores its minimal generating set G(I) in a canonical order (descending lex,
i.e. x1 > x2 > ... > xn), so two ideals are equal iff their dataclasses are.

The heavy lifting (products, lcms, divisibility filtering) is vectorised with
numpy; divisibility queries against a generator set go through a bitset index
(one bitmask per coordinate and exponent value), which keeps ideal-power
minimalisation and membership tests linear in the number of candidates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]

# Exponents are held in int64 arrays; anything near this bound is refused.
MAX_EXPONENT = 2**40

_CHUNK_WORDS = 4_000_000


class DimensionMismatchError(ValueError):
    """Monomials or ideals over different numbers of variables were mixed."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class UnsupportedInputError(DomainError):
    """The input is valid but the operation deliberately does not handle it."""


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[x1..xn]; only the variable count and names matter."""

    n: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a ring needs at least one variable")
        names = tuple(self.names) or tuple(f"x{i}" for i in range(1, self.n + 1))
        if len(names) != self.n or len(set(names)) != self.n:
            raise ValueError(f"need {self.n} distinct variable names, got {names!r}")
        object.__setattr__(self, "names", names)

    def one(self) -> Monomial:
        return (0,) * self.n

    def var(self, i: int) -> Monomial:
        """The variable x_i as a monomial (0-based index)."""
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def render(self, u: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, u):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text: str) -> Monomial:
        """Inverse of ``render``: ``"x1^2*x3"`` -> (2, 0, 1)."""
        e = [0] * self.n
        text = text.strip()
        if text == "1":
            return tuple(e)
        index = {name: i for i, name in enumerate(self.names)}
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            e[index[name]] += int(power) if power else 1
        return tuple(e)

    def join(self, other: "Ring") -> "Ring":
        """Ring on the disjoint union of both variable sets."""
        if set(self.names) & set(other.names):
            raise DomainError("variable blocks overlap")
        return Ring(self.n + other.n, self.names + other.names)


def degree(u: Sequence[int]) -> int:
    return sum(u)


def divides(g: Sequence[int], u: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(g, u))


def mul(u: Sequence[int], v: Sequence[int]) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Sequence[int], v: Sequence[int]) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def quotient(u: Sequence[int], g: Sequence[int]) -> Monomial:
    """u / gcd(u, g), i.e. componentwise max(u_i - g_i, 0)."""
    return tuple(max(a - b, 0) for a, b in zip(u, g))


# ---------------------------------------------------------------------------
# numpy helpers


def _as_array(gens: Iterable[Sequence[int]], n: int) -> np.ndarray:
    rows = list(gens)
    if not rows:
        return np.zeros((0, n), dtype=np.int64)
    arr = np.asarray(rows, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != n:
        raise DimensionMismatchError(f"expected exponent vectors of length {n}")
    return arr


def _check_range(arr: np.ndarray) -> None:
    if arr.size and (arr.min() < 0 or arr.max() > MAX_EXPONENT):
        if arr.min() < 0:
            raise ValueError("exponents must be non-negative")
        raise OverflowError("exponent exceeds the supported range")


def _unique_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) <= 1:
        return arr
    # pack each row into one mixed-radix integer when it fits: 1-D unique is
    # much faster than row-wise unique
    radix = arr.max(axis=0) + 1
    if float(np.prod(radix.astype(float))) < 2.0**62:
        weights = np.cumprod(np.concatenate([[1], radix[:0:-1]]))[::-1]
        _, first = np.unique(arr @ weights, return_index=True)
        return arr[first]
    return np.unique(arr, axis=0)


class DivisibilityIndex:
    """Answers "is some generator a divisor of u?" for many u at once.

    For every coordinate j and exponent value v it stores the bitmask of
    generators g with g_j <= v; a query ANDs n masks and tests for a set bit.
    """

    def __init__(self, gens: np.ndarray):
        self.gens = gens
        n_gens, n = gens.shape
        self.empty = n_gens == 0
        if self.empty:
            return
        self.top = gens.max(axis=0)
        n_bytes = -(-n_gens // 64) * 8
        self.words = n_bytes // 8
        self.masks = []
        for j in range(n):
            values = np.arange(self.top[j] + 1)[:, None]
            bits = np.packbits(gens[:, j][None, :] <= values, axis=1, bitorder="little")
            padded = np.zeros((bits.shape[0], n_bytes), dtype=np.uint8)
            padded[:, : bits.shape[1]] = bits
            self.masks.append(padded.view(np.uint64))

    def contains(self, cands: np.ndarray) -> np.ndarray:
        """Boolean vector: True where the candidate row lies in the ideal."""
        k = len(cands)
        if self.empty or k == 0:
            return np.zeros(k, dtype=bool)
        out = np.empty(k, dtype=bool)
        step = max(1, _CHUNK_WORDS // self.words)
        for start in range(0, k, step):
            block = np.minimum(cands[start : start + step], self.top)
            acc = self.masks[0][block[:, 0]]
            for j in range(1, block.shape[1]):
                acc &= self.masks[j][block[:, j]]
            out[start : start + step] = acc.any(axis=1)
        return out


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility antichain of the rows of ``arr``."""
    arr = _unique_rows(arr)
    if len(arr) <= 1:
        return arr
    degs = arr.sum(axis=1)
    if degs.min() == degs.max():
        # distinct monomials of one degree never divide each other
        return arr
    order = np.argsort(degs, kind="stable")
    arr, degs = arr[order], degs[order]
    kept = []
    bounds = np.flatnonzero(np.diff(degs)) + 1
    groups = np.split(arr, bounds)
    accepted = np.zeros((0, arr.shape[1]), dtype=np.int64)
    for group in groups:
        if len(accepted):
            group = group[~DivisibilityIndex(accepted).contains(group)]
        if len(group):
            kept.append(group)
            accepted = np.concatenate(kept)
    return accepted


def _canonical(arr: np.ndarray) -> tuple[Monomial, ...]:
    return tuple(sorted((tuple(int(x) for x in row) for row in arr), reverse=True))


def _pairwise(a: np.ndarray, b: np.ndarray, op) -> np.ndarray:
    """All op(a_i, b_j), returned as rows (deduplicated)."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    n = a.shape[1]
    step = max(1, _CHUNK_WORDS // max(1, len(b) * n))
    parts = []
    for start in range(0, len(a), step):
        block = op(a[start : start + step, None, :], b[None, :, :]).reshape(-1, n)
        parts.append(_unique_rows(block))
    return _unique_rows(np.concatenate(parts))


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Constructing one from arbitrary generators minimalises them; equality
    is structural equality of the canonical generator tuple.
    """

    ring: Ring
    gens: tuple[Monomial, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        arr = _as_array(self.gens, self.ring.n)
        _check_range(arr)
        object.__setattr__(self, "gens", _canonical(_minimal_rows(arr)))

    @classmethod
    def _trusted(cls, ring: Ring, arr: np.ndarray) -> "MonomialIdeal":
        # arr must already be a divisibility antichain
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "gens", _canonical(arr))
        object.__setattr__(obj, "_cache", {})
        obj._cache["array"] = arr
        return obj

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, tuple(ring.var(i) for i in range(ring.n)))

    @classmethod
    def from_strings(cls, ring: Ring, monomials: Iterable[str]) -> "MonomialIdeal":
        return cls(ring, tuple(ring.parse(s) for s in monomials))

    @property
    def array(self) -> np.ndarray:
        arr = self._cache.get("array")
        if arr is None:
            arr = _as_array(self.gens, self.ring.n)
            self._cache["array"] = arr
        return arr

    @property
    def index(self) -> DivisibilityIndex:
        idx = self._cache.get("index")
        if idx is None:
            idx = DivisibilityIndex(self.array)
            self._cache["index"] = idx
        return idx

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __hash__(self):
        h = self._cache.get("hash")
        if h is None:
            h = hash((self.ring, self.gens))
            self._cache["hash"] = h
        return h

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, m: int) -> "MonomialIdeal":
        return power(self, m)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (self.ring.one(),)

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def generating_degree(self) -> int | None:
        """The common degree of all generators, or None if not equigenerated."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def render(self) -> list[str]:
        return [self.ring.render(g) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.render()) + ")"


def _same_ring(*ideals: MonomialIdeal) -> Ring:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring.n != ring.n:
            raise DimensionMismatchError(
                f"ideals live in rings with {ring.n} and {other.ring.n} variables"
            )
    return ring


def _check_monomial(ring: Ring, u: Sequence[int]) -> Monomial:
    u = tuple(int(x) for x in u)
    if len(u) != ring.n:
        raise DimensionMismatchError(f"monomial {u} is not over {ring.n} variables")
    return u


def minimalize(gens: Iterable[Sequence[int]], ring: Ring | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    gens = [tuple(int(x) for x in g) for g in gens]
    lengths = {len(g) for g in gens}
    if ring is not None:
        lengths.add(ring.n)
    if len(lengths) > 1:
        raise DimensionMismatchError(f"mixed exponent-vector lengths {sorted(lengths)}")
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator set")
        ring = Ring(lengths.pop())
    return MonomialIdeal(ring, tuple(gens))


def contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    u = _check_monomial(I.ring, u)
    return any(divides(g, u) for g in I.gens)


def contains_many(I: MonomialIdeal, cands: np.ndarray) -> np.ndarray:
    cands = np.asarray(cands, dtype=np.int64).reshape(-1, I.ring.n)
    return I.index.contains(cands)


def ideal_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return bool(contains_many(I, J.array).all())


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    prods = _pairwise(I.array, J.array, np.add)
    _check_range(prods)
    return MonomialIdeal._trusted(ring, _minimal_rows(prods))


def power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^m, built as I * I^(m-1) and minimalised at every step."""
    if m < 0:
        raise ValueError("power must be non-negative")
    cache = I._cache.setdefault("powers", {0: MonomialIdeal.unit(I.ring), 1: I})
    top = max(k for k in cache if k <= m)
    current = cache[top]
    for k in range(top + 1, m + 1):
        current = multiply(I, current)
        cache[k] = current
    return current


def colon_monomial(J: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    g = np.asarray(_check_monomial(J.ring, g), dtype=np.int64)
    shifted = np.maximum(J.array - g, 0)
    return MonomialIdeal._trusted(J.ring, _minimal_rows(shifted))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    a, b = I.array, J.array
    if len(a) == 0 or len(b) == 0:
        return MonomialIdeal.zero(ring)
    # a generator of I that already lies in J is a generator candidate on
    # its own; its lcm with anything in J is redundant (and vice versa)
    a_in = J.index.contains(a)
    b_in = I.index.contains(b)
    parts = [a[a_in], b[b_in], _pairwise(a[~a_in], b[~b_in], np.maximum)]
    return MonomialIdeal._trusted(ring, _minimal_rows(np.concatenate(parts)))


def colon_ideal(J: MonomialIdeal, I: MonomialIdeal) -> MonomialIdeal:
    """(J : I) as the intersection of (J : g) over g in G(I)."""
    _same_ring(I, J)
    if I.is_zero():
        raise DomainError("colon by the zero ideal is undefined")
    result = None
    for g in I.gens:
        piece = colon_monomial(J, g)
        result = piece if result is None else intersect(result, piece)
    return result


class _CompatibilityMasks:
    """Pairs (state, candidate) with cand[:k] <= state[:k] and cand[k] >= state[k].

    Bitmasks over the candidates, one per coordinate value, are ANDed per
    state and then unpacked; this replaces a dense states x candidates x k
    comparison.
    """

    def __init__(self, cand: np.ndarray, k: int):
        self.n_cand = len(cand)
        self.k = k
        n_bytes = -(-self.n_cand // 64) * 8
        self.top = cand[:, : k + 1].max(axis=0)

        def pack(table):
            bits = np.packbits(table, axis=1, bitorder="little")
            padded = np.zeros((bits.shape[0], n_bytes), dtype=np.uint8)
            padded[:, : bits.shape[1]] = bits
            return padded.view(np.uint64)

        self.upper = [pack(cand[:, j][None, :] <= np.arange(self.top[j] + 1)[:, None]) for j in range(k)]
        # row v: candidates with cand_k >= v; one extra all-zero row for v > top
        self.lower = pack(cand[:, k][None, :] >= np.arange(self.top[k] + 2)[:, None])

    def pairs(self, states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        acc = self.lower[np.minimum(states[:, self.k], self.top[self.k] + 1)]
        for j in range(self.k):
            acc &= self.upper[j][np.minimum(states[:, j], self.top[j])]
        hit = np.unpackbits(acc.view(np.uint8), axis=1, bitorder="little", count=self.n_cand)
        return np.nonzero(hit)


def socle_monomials(J: MonomialIdeal) -> np.ndarray:
    """All monomials u with u not in J and x_i*u in J for every i.

    This set is finite and is both a K-basis of (J:m)/J and the set of
    minimal generators of (J:m) outside J.  Each such u equals
    lcm_i(g_i - e_i) for generators g_i with (g_i)_i = u_i + 1 and
    (g_i)_j <= u_j, so the search fixes one coordinate per level: the
    coordinates already fixed may not grow, and partial lcms that fall
    into J are pruned (any extension stays in J).
    """
    n = J.ring.n
    gens = J.array
    states = np.zeros((1, n), dtype=np.int64)
    if len(gens) == 0:
        return np.zeros((0, n), dtype=np.int64)
    index = J.index
    for k in range(n):
        cand = gens[gens[:, k] >= 1].copy()
        if len(cand) == 0:
            return np.zeros((0, n), dtype=np.int64)
        cand[:, k] -= 1
        cand = _unique_rows(cand)
        cand = cand[~index.contains(cand)]
        if len(cand) == 0:
            return np.zeros((0, n), dtype=np.int64)
        parts = []
        compat = _CompatibilityMasks(cand, k)
        step = max(1, _CHUNK_WORDS // max(1, len(cand)))
        for start in range(0, len(states), step):
            s = states[start : start + step]
            si, ci = compat.pairs(s)
            if len(si):
                parts.append(_unique_rows(np.maximum(s[si], cand[ci])))
        if not parts:
            return np.zeros((0, n), dtype=np.int64)
        new = _unique_rows(np.concatenate(parts))
        states = new[~index.contains(new)]
        if len(states) == 0:
            return states
    return states


def colon_maximal(J: MonomialIdeal) -> MonomialIdeal:
    """(J : m) where m = (x1, ..., xn).

    Computed as J + (socle monomials of J); the monomials of (J:m) outside J
    are exactly those socle monomials, so this equals the intersection of
    the colons (J : x_i).
    """
    soc = socle_monomials(J)
    if len(soc) == 0:
        return J
    return MonomialIdeal._trusted(J.ring, _minimal_rows(np.concatenate([J.array, soc])))


def colon_maximal_by_intersection(J: MonomialIdeal) -> MonomialIdeal:
    """(J : m) literally as the intersection of (J : x_i), i = 1..n."""
    result = colon_monomial(J, J.ring.var(0))
    for i in range(1, J.ring.n):
        result = intersect(result, colon_monomial(J, J.ring.var(i)))
    return result


def embed(I: MonomialIdeal, ring: Ring, offset: int) -> MonomialIdeal:
    """Extend I to a larger ring, placing its variables at ``offset``."""
    if offset < 0 or offset + I.ring.n > ring.n:
        raise DimensionMismatchError("embedding does not fit into the target ring")
    arr = np.zeros((len(I.gens), ring.n), dtype=np.int64)
    arr[:, offset : offset + I.ring.n] = I.array
    return MonomialIdeal._trusted(ring, arr)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal._trusted(ring, _minimal_rows(np.concatenate([I.array, J.array])))
