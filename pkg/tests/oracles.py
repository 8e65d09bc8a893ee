"""Independent reference computations used to cross-check the library.

Nothing here calls the Groebner engine or the Hilbert recursion.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
import random

import sympy

from flatlim.poly import PolyRing

VARS = sympy.symbols("x y z w")


def monomials_of_degree(n, nvars=4):
    out = []
    for combo in combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def rank(rows):
    """Rank of a list of dicts (column -> Fraction) by exact elimination."""
    pivots = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = max(row)
            if col not in pivots:
                pivots[col] = row
                r += 1
                break
            piv = pivots[col]
            factor = row[col] / piv[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def span_member(f, gens):
    """Membership of a homogeneous ``f`` in the ideal of homogeneous ``gens`` by linear algebra.

    In degree ``D`` the ideal is spanned by ``m * g`` with ``deg m = D - deg g``.
    """
    if f.is_zero():
        return True
    D = f.degree()
    rows = []
    for g in gens:
        if g.is_zero() or g.degree() > D:
            continue
        for m in monomials_of_degree(D - g.degree(), f.ring.nvars):
            rows.append(dict(g.mul_monomial(m).as_dict()))
    base = rank(rows)
    return rank(rows + [dict(f.as_dict())]) == base


def hf_span(gens, n, nvars=4):
    """``dim (R/I)_n`` for homogeneous generators, by linear algebra."""
    rows = []
    for g in gens:
        if g.is_zero() or g.degree() > n:
            continue
        for m in monomials_of_degree(n - g.degree(), nvars):
            rows.append(dict(g.mul_monomial(m).as_dict()))
    return len(monomials_of_degree(n, nvars)) - rank(rows)


def hf_monomial_bruteforce(gens, n, nvars=4):
    """Count standard monomials of degree ``n`` for a monomial ideal."""
    return sum(
        1
        for m in monomials_of_degree(n, nvars)
        if not any(all(a <= b for a, b in zip(g, m)) for g in gens)
    )


def to_sympy(f):
    expr = 0
    for e, c in f.as_dict().items():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for v, k in zip(VARS, e):
            term *= v ** k
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, ring):
    p = sympy.Poly(sympy.expand(expr), *VARS)
    return ring.from_dict({m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})


def random_homogeneous(rng, ring, degree, nterms=3, coeff=5):
    mons = monomials_of_degree(degree, ring.nvars)
    terms = {}
    for m in rng.sample(mons, min(nterms, len(mons))):
        c = rng.randint(-coeff, coeff)
        if c:
            terms[m] = c
    if not terms:
        terms[mons[0]] = 1
    return ring.from_dict(terms)


def random_instance(seed, ring=None):
    """Small homogeneous generators plus a test polynomial that is a member about half the time."""
    ring = ring or PolyRing()
    rng = random.Random(seed)
    gens = [random_homogeneous(rng, ring, rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    D = max(g.degree() for g in gens) + rng.randint(0, 1)
    if rng.random() < 0.5:
        f = ring.zero
        for g in gens:
            if g.degree() <= D:
                f = f + random_homogeneous(rng, ring, D - g.degree(), 2) * g
    else:
        f = random_homogeneous(rng, ring, D, rng.randint(1, 4))
    return gens, f
