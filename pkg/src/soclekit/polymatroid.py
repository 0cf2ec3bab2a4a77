"""PLP-polymatroidal and Veronese-type ideals.

A PLP type (a, b | alpha, beta) describes the ideal generated by all x^u with

    a_i <= u_i <= b_i   and   alpha_i <= u_1 + ... + u_i <= beta_i,

where alpha_n = beta_n = d.  The type is *basic* when a = 0.  Indices in
user-facing results (violating sets, counterexamples) are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, combinations
from math import ceil

from .monomial import DomainError, Monomial, MonomialIdeal, Ring, UnsupportedInputError
from .socle import socstar_containment_check

MAX_SUBSET_SCAN = 20


class InvalidTypeError(DomainError):
    """A PLP or Veronese type violates its structural invariants."""


@dataclass(frozen=True)
class PlpType:
    a: tuple[int, ...]
    b: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        for name in ("a", "b", "alpha", "beta"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        lengths = {len(self.a), len(self.b), len(self.alpha), len(self.beta)}
        if len(lengths) != 1 or not len(self.b):
            raise InvalidTypeError("a, b, alpha, beta must be nonempty and of equal length")

    @classmethod
    def basic(cls, b, alpha, beta) -> "PlpType":
        return cls((0,) * len(b), b, alpha, beta)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def d(self) -> int:
        return self.alpha[-1]

    def is_basic(self) -> bool:
        return not any(self.a)

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b), "alpha": list(self.alpha), "beta": list(self.beta)}


@dataclass(frozen=True)
class VeroneseType:
    """I_{a,d}: all degree-d monomials with u_i <= a_i."""

    a: tuple[int, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a or min(self.a) < 0 or self.d < 0:
            raise InvalidTypeError("Veronese bounds and degree must be non-negative")

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class EquigenReport:
    k0: int
    equi_generated: bool
    violating_sets: tuple[tuple[int, ...], ...]
    depth_zero: bool  # depth S/I = 0, read off a and d directly


# ---------------------------------------------------------------------------
# PLP types


def plp_validate(t: PlpType) -> tuple[bool, list[str]]:
    """Check the PLP side conditions; returns (ok, list of violations)."""
    problems = []
    for name in ("a", "b", "alpha", "beta"):
        if min(getattr(t, name)) < 0:
            problems.append(f"{name} has a negative entry")
    for i in range(t.n - 1):
        if t.alpha[i] > t.alpha[i + 1]:
            problems.append(f"alpha decreases at position {i + 1}")
        if t.beta[i] > t.beta[i + 1]:
            problems.append(f"beta decreases at position {i + 1}")
    if t.alpha[-1] != t.beta[-1]:
        problems.append(f"alpha_n = {t.alpha[-1]} differs from beta_n = {t.beta[-1]}")
    for i in range(t.n):
        if t.a[i] > t.b[i]:
            problems.append(f"a_{i + 1} > b_{i + 1}")
        if t.alpha[i] > t.beta[i]:
            problems.append(f"alpha_{i + 1} > beta_{i + 1}")
    if t.alpha[0] != t.a[0]:
        problems.append("alpha_1 differs from a_1")
    if t.beta[0] != t.b[0]:
        problems.append("beta_1 differs from b_1")
    return not problems, problems


def _require_valid(t: PlpType) -> None:
    ok, problems = plp_validate(t)
    if not ok:
        raise InvalidTypeError("; ".join(problems))


def _require_basic(t: PlpType) -> None:
    _require_valid(t)
    if not t.is_basic():
        raise DomainError("expects a basic type (a = 0); reduce with plp_make_basic first")


def plp_make_basic(t: PlpType) -> tuple[PlpType, Monomial]:
    """Split I = x^a * I' with I' basic; returns (type of I', a)."""
    _require_valid(t)
    shift = list(accumulate(t.a))
    basic = PlpType(
        (0,) * t.n,
        tuple(b - a for b, a in zip(t.b, t.a)),
        tuple(x - s for x, s in zip(t.alpha, shift)),
        tuple(x - s for x, s in zip(t.beta, shift)),
    )
    return basic, t.a


def plp_solutions(t: PlpType) -> list[Monomial]:
    """Integer solutions of the defining system, in lexicographic order.

    Depth-first over coordinates.  The partial sum s before coordinate i
    bounds u_i from both sides for every later prefix j >= i:
        alpha_j - s - (b_{i+1} + ... + b_j) <= u_i <= beta_j - s - (a_{i+1} + ... + a_j).
    """
    n = t.n
    out = []
    u = [0] * n

    def rec(i, s):
        if i == n:
            out.append(tuple(u))
            return
        lo, hi = t.a[i], t.b[i]
        bsum = asum = 0
        for j in range(i, n):
            if j > i:
                bsum += t.b[j]
                asum += t.a[j]
            lo = max(lo, t.alpha[j] - s - bsum)
            hi = min(hi, t.beta[j] - s - asum)
        for v in range(lo, hi + 1):
            u[i] = v
            rec(i + 1, s + v)

    rec(0, 0)
    return out


def plp_gens(t: PlpType) -> MonomialIdeal:
    _require_valid(t)
    return MonomialIdeal(Ring(t.n), tuple(plp_solutions(t)))


def plp_feasible(t: PlpType) -> bool:
    """beta_i + b_{i+1} + ... + b_j >= alpha_j for all i <= j."""
    _require_basic(t)
    for i in range(t.n):
        acc = t.beta[i]
        for j in range(i, t.n):
            if j > i:
                acc += t.b[j]
            if acc < t.alpha[j]:
                return False
    return True


def plp_witness(t: PlpType) -> Monomial | None:
    """Greedy solution: prefix sums P_j = min_{i <= j} (beta_i + b_{i+1} + ... + b_j)."""
    if not plp_feasible(t):
        return None
    prefix = []
    for j in range(t.n):
        best = min(t.beta[i] + sum(t.b[i + 1 : j + 1]) for i in range(j + 1))
        prefix.append(best)
    return tuple(p - q for p, q in zip(prefix, [0] + prefix[:-1]))


def plp_soc_type(t: PlpType) -> PlpType | None:
    """Type of soc(I) for a basic type, or None when soc(I) is the zero ideal.

    soc(I) has type (0, b - 1 | (alpha_1, ..., alpha_{n-1}, alpha_n - 1), beta - 1).
    When some b_i = 0, or the shifted data breaks the side conditions, the
    system has no solution and None is returned.
    """
    _require_basic(t)
    if t.n < 2:
        raise UnsupportedInputError("soc type is only defined for n >= 2")
    if min(t.b) < 1:
        return None
    soc = PlpType(
        (0,) * t.n,
        tuple(x - 1 for x in t.b),
        t.alpha[:-1] + (t.alpha[-1] - 1,),
        tuple(x - 1 for x in t.beta),
    )
    return soc if plp_validate(soc)[0] else None


def plp_power_type(t: PlpType, m: int) -> PlpType:
    """Type of I^m for a basic type: (0, m b | m alpha, m beta)."""
    _require_basic(t)
    if m < 1:
        raise DomainError("power must be positive")
    return PlpType(t.a, *(tuple(m * x for x in v) for v in (t.b, t.alpha, t.beta)))


def _require_feasible(t: PlpType) -> None:
    if not plp_feasible(t):
        raise DomainError("the PLP system has no solution (zero ideal)")


def plp_depth_zero(t: PlpType) -> bool:
    """depth S/I = 0, i.e. soc(I) != 0, read off the type."""
    _require_feasible(t)
    n, b, alpha, beta, d = t.n, t.b, t.alpha, t.beta, t.d
    if min(b) < 1:
        return False
    if any(alpha[i] > beta[i] - 1 for i in range(1, n - 1)):
        return False
    for i in range(n - 1):
        acc = beta[i]
        for j in range(i, n - 1):
            if j > i:
                acc += b[j]
            # j - i + 1 counted with 1-based indices
            if acc < alpha[j] + j - i + 1:
                return False
    for i in range(n):
        if beta[i] + sum(b[i + 1 :]) < d + n - (i + 1):
            return False
    return True


def plp_socstar_nonzero(t: PlpType) -> bool:
    """Some power of I has a nonzero socle (equivalently analytic spread n)."""
    _require_feasible(t)
    n, b, alpha, beta = t.n, t.b, t.alpha, t.beta
    if min(b) < 1:
        return False
    if any(alpha[i] > beta[i] - 1 for i in range(1, n - 1)):
        return False
    for i in range(n):
        acc = beta[i]
        for j in range(i + 1, n):
            acc += b[j]
            if acc <= alpha[j]:
                return False
    return True


def plp_socstar_degree_check(t: PlpType, k_max: int) -> bool:
    """soc(I^(k+1)) lies in I soc(I^k) for every k in [n-1, k_max]."""
    _require_feasible(t)
    I = plp_gens(t)
    return all(socstar_containment_check(I, k) for k in range(max(1, t.n - 1), k_max + 1))


# ---------------------------------------------------------------------------
# Veronese type


def veronese_gens(v: VeroneseType) -> MonomialIdeal:
    """All degree-d monomials under the bounds a, enumerated directly."""
    out = []
    u = [0] * v.n
    tail = list(accumulate(reversed(v.a)))[::-1] + [0]

    def rec(i, left):
        if i == v.n:
            if left == 0:
                out.append(tuple(u))
            return
        for e in range(max(0, left - tail[i + 1]), min(v.a[i], left) + 1):
            u[i] = e
            rec(i + 1, left - e)

    rec(0, v.d)
    return MonomialIdeal(Ring(v.n), tuple(out))


def veronese_to_plp(v: VeroneseType) -> PlpType | None:
    """The Veronese ideal as a PLP type, or None if sum(a) < d (zero ideal).

    b_i = min(a_i, d) (same ideal) keeps beta_1 = b_1.  A single variable
    cannot be basic with d > 0, so n = 1 uses a = b = alpha = beta = (d,).
    """
    if sum(v.a) < v.d:
        return None
    if v.n == 1:
        return PlpType((v.d,), (v.d,), (v.d,), (v.d,))
    b = tuple(min(x, v.d) for x in v.a)
    beta = tuple(min(s, v.d) for s in accumulate(v.a))
    alpha = (0,) * (v.n - 1) + (v.d,)
    return PlpType((0,) * v.n, b, alpha, beta)


def veronese_rank(v: VeroneseType, A) -> int:
    """Polymatroid rank min(a(A), d) of a subset A of {1..n}."""
    A = set(A)
    if not A <= set(range(1, v.n + 1)):
        raise DomainError(f"subset {sorted(A)} is not inside 1..{v.n}")
    return min(sum(v.a[i - 1] for i in A), v.d)


def veronese_depth_zero(v: VeroneseType) -> bool:
    return min(v.a) >= 1 and sum(v.a) - v.d >= v.n - 1


def veronese_socstar_nonzero(v: VeroneseType) -> bool:
    return min(v.a) >= 1 and sum(v.a) > v.d


def veronese_equigen(v: VeroneseType) -> EquigenReport:
    """Decide whether Soc*(I_{a,d}) is generated in a single degree.

    k0 is the least k >= 1 with k(a([n]) - d) >= n - 1; the module is
    equi-generated iff k0(a(A) - d) >= |A| - 1 whenever a(A) > d.
    """
    if not veronese_socstar_nonzero(v):
        raise DomainError("needs a_i >= 1 for all i and sum(a) > d")
    if v.n > MAX_SUBSET_SCAN:
        raise DomainError(f"subset scan is capped at n <= {MAX_SUBSET_SCAN}")
    excess = sum(v.a) - v.d
    k0 = max(1, ceil((v.n - 1) / excess))
    bad = []
    for size in range(1, v.n + 1):
        for A in combinations(range(1, v.n + 1), size):
            aA = sum(v.a[i - 1] for i in A)
            if aA > v.d and k0 * (aA - v.d) < size - 1:
                bad.append(A)
    return EquigenReport(k0, not bad, tuple(bad), veronese_depth_zero(v))


# ---------------------------------------------------------------------------
# exchange property


def exchange_check(I: MonomialIdeal) -> tuple[bool, tuple[Monomial, Monomial, int] | None]:
    """Symmetric exchange on G(I); returns (ok, first counterexample (u, v, i)).

    For u, v in G(I) and i with u_i > v_i there must be j with u_j < v_j
    and u - e_i + e_j in G(I).  i is reported 1-based.
    """
    if I.is_zero():
        return True, None
    if I.generating_degree() is None:
        raise UnsupportedInputError("the exchange property needs an equigenerated ideal")
    gens = set(I.gens)
    n = I.ring.n
    for u in I.gens:
        for v in I.gens:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                found = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gens:
                            found = True
                            break
                if not found:
                    return False, (u, v, i + 1)
    return True, None

