"""Brute-force reference implementations, deliberately free of numpy and of
the library's divisibility index.  Monomials are plain tuples."""
from fractions import Fraction
from itertools import combinations_with_replacement, product


def divides(g, u):
    return all(a <= b for a, b in zip(g, u))


def member(gens, u):
    return any(divides(g, u) for g in gens)


def minimal(gens):
    gens = set(map(tuple, gens))
    return {g for g in gens if not any(h != g and divides(h, g) for h in gens)}


def mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def power(gens, m, n):
    if m == 0:
        return {(0,) * n}
    out = set()
    for combo in combinations_with_replacement(sorted(gens), m):
        u = (0,) * n
        for g in combo:
            u = mul(u, g)
        out.add(u)
    return minimal(out)


def box(bounds):
    return product(*(range(b + 1) for b in bounds))


def socle(gens, n):
    """Every u outside (gens) with x_i u inside for all i, by scanning the box
    u_i < max exponent of x_i among the generators."""
    gens = list(gens)
    if not gens:
        return set()
    top = [max(g[i] for g in gens) for i in range(n)]
    if min(top) == 0:
        return set()
    out = set()
    for u in box([t - 1 for t in top]):
        if member(gens, u):
            continue
        if all(member(gens, u[:i] + (u[i] + 1,) + u[i + 1 :]) for i in range(n)):
            out.add(u)
    return out


def rank(rows):
    """Rank over Q by fraction-exact Gaussian elimination."""
    mat = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c] / mat[r][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


def plp_solutions(a, b, alpha, beta):
    """All u in the box a <= u <= b whose prefix sums lie in [alpha, beta]."""
    out = set()
    for u in product(*(range(lo, hi + 1) for lo, hi in zip(a, b))):
        s = 0
        ok = True
        for i, x in enumerate(u):
            s += x
            if not alpha[i] <= s <= beta[i]:
                ok = False
                break
        if ok:
            out.add(u)
    return out


def veronese(a, d):
    return {u for u in box(a) if sum(u) == d}


def exchange_ok(gens):
    """Exchange: for u_i > v_i some j with u_j < v_j has u - e_i + e_j among the generators."""
    gens = set(gens)
    for u in gens:
        for v in gens:
            for i in range(len(u)):
                if u[i] <= v[i]:
                    continue
                found = False
                for j in range(len(u)):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        found = found or tuple(w) in gens
                if not found:
                    return False
    return True
