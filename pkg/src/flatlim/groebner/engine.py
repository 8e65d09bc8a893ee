"""Buchberger's algorithm on packed monomials.

A monomial is stored twice as an int: ``key`` packs the rows of the order
matrix applied to the exponent vector (so ``key`` comparison is the term
order and multiplication is addition), and ``exp`` packs the exponents
themselves with a guard bit per field for branch-free divisibility tests.
Both fit in 63 bits so the compiled kernels can use machine integers.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm

from ..orders import TermOrder
from ..scalar import QQ
from . import kernels

EBITS = 10
EMASK = (1 << (EBITS - 1)) - 1


class Packing:
    """Bit layout for one ring size and term order."""

    def __init__(self, nvars: int, order: TermOrder):
        if nvars * EBITS > 62:
            raise ValueError("too many variables for packed exponents")
        self.nvars = nvars
        self.order = order
        self.rows = order.matrix(nvars)
        self.kbits = 63 // len(self.rows)
        self.guard = sum(1 << (i * EBITS + EBITS - 1) for i in range(nvars))
        biggest = max(max(r) for r in self.rows)
        self.max_degree = min(((1 << self.kbits) - 1) // biggest, EMASK)
        # anything stored must leave room for one multiplication
        self.safe_degree = self.max_degree // 2

    def key(self, e) -> int:
        k = 0
        for row in self.rows:
            k = (k << self.kbits) | sum(r * x for r, x in zip(row, e))
        return k

    def pexp(self, e) -> int:
        v = 0
        for i, x in enumerate(e):
            v |= x << (i * EBITS)
        return v

    def unpack(self, v: int) -> tuple:
        return tuple((v >> (i * EBITS)) & EMASK for i in range(self.nvars))

    def degree(self, v: int) -> int:
        s = 0
        while v:
            s += v & EMASK
            v >>= EBITS
        return s

    def lcm(self, a: int, b: int) -> int:
        v = 0
        for i in range(self.nvars):
            sh = i * EBITS
            v |= max((a >> sh) & EMASK, (b >> sh) & EMASK) << sh
        return v

    def divides(self, a: int, b: int) -> bool:
        return ((b | self.guard) - a) & self.guard == self.guard

    def coprime(self, a: int, b: int) -> bool:
        for i in range(self.nvars):
            sh = i * EBITS
            if (a >> sh) & EMASK and (b >> sh) & EMASK:
                return False
        return True


class EPoly:
    """Engine polynomial: parallel ``keys``/``exps``/``coeffs`` lists, sorted."""

    __slots__ = ("k", "e", "c", "maxdeg")

    def __init__(self, k, e, c, maxdeg=-1):
        self.k = k
        self.e = e
        self.c = c
        self.maxdeg = maxdeg

    def __len__(self):
        return len(self.k)

    def triple(self):
        return (self.k, self.e, self.c)


def _modulus(field) -> int:
    return 0 if field == QQ else field.p


def to_engine(f, pk: Packing):
    """Convert a Polynomial; returns ``(EPoly, scale)`` with ``EPoly == scale * f``."""
    field = f.ring.field
    p = _modulus(field)
    items = list(f._d.items())
    if p:
        scale = 1
        coeffs = [int(c) for _, c in items]
    else:
        den = 1
        for _, c in items:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        scale = den
        coeffs = [int(c * den) for _, c in items]
    rows = []
    maxdeg = 0
    for (m, _), c in zip(items, coeffs):
        deg = sum(m)
        if deg > pk.safe_degree:
            raise OverflowError(f"degree {deg} exceeds the packed-monomial bound {pk.safe_degree}")
        maxdeg = max(maxdeg, deg)
        rows.append((pk.key(m), pk.pexp(m), c))
    rows.sort(reverse=True)
    ep = EPoly([r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], maxdeg)
    return ep, scale


def from_engine(ep: EPoly, pk: Packing, ring, scale=1):
    """Convert back, dividing coefficients by ``scale``."""
    from ..poly import Polynomial, _canon

    field = ring.field
    if field == QQ:
        d = {pk.unpack(e): _canon(Fraction(c) / scale) for e, c in zip(ep.e, ep.c)}
    else:
        inv = pow(int(scale), -1, field.p) if scale != 1 else 1
        d = {pk.unpack(e): field(c * inv) for e, c in zip(ep.e, ep.c)}
    return Polynomial(ring, d)


def normalize(ep: EPoly, p: int) -> EPoly:
    """Primitive with positive leading coefficient over Z; monic over F_p."""
    if not ep.c:
        return ep
    if p:
        lc = ep.c[0]
        if lc != 1:
            inv = pow(lc, -1, p)
            ep.c = [c * inv % p for c in ep.c]
        return ep
    g = 0
    for c in ep.c:
        g = gcd(g, c)
        if g == 1:
            break
    if ep.c[0] < 0:
        g = -g
    if g != 1:
        ep.c = [c // g for c in ep.c]
    return ep


def _maxdeg(ep: EPoly, pk: Packing) -> int:
    return max((pk.degree(e) for e in ep.e), default=-1)


def shift(ep: EPoly, tk: int, te: int) -> EPoly:
    return EPoly([k + tk for k in ep.k], [e + te for e in ep.e], list(ep.c), ep.maxdeg)


def reduce_full(f: EPoly, basis: list, pk: Packing, p: int, full: bool = True):
    """Return ``(remainder, num, den)``; remainder is ``num/den`` times the true one."""
    rk, re, rc, num, den = kernels.reduce_poly(
        list(f.k), list(f.e), list(f.c),
        [b.triple() for b in basis],
        [b.e[0] for b in basis],
        pk.guard, p, full,
    )
    return EPoly(rk, re, rc), num, den


def spoly(f: EPoly, g: EPoly, pk: Packing, p: int) -> EPoly:
    L = pk.lcm(f.e[0], g.e[0])
    t1e = L - f.e[0]
    t2e = L - g.e[0]
    t1k = pk.key(pk.unpack(t1e))
    t2k = pk.key(pk.unpack(t2e))
    fs = shift(f, t1k, t1e)
    if p:
        a, b = g.c[0], f.c[0]
    else:
        d = gcd(f.c[0], g.c[0])
        a, b = g.c[0] // d, f.c[0] // d
    k, e, c = kernels.combine(fs.k, fs.e, fs.c, 0, a, g.k, g.e, g.c, t2k, t2e, b, p)
    return EPoly(k, e, c)


class _State:
    """Basis, pair queue and Gebauer-Moeller bookkeeping."""

    def __init__(self, pk: Packing, p: int):
        self.pk = pk
        self.p = p
        self.polys = []
        self.active = []
        self.pairs = set()
        self.heap = []
        self.stats = {"pairs": 0, "zero": 0, "product": 0, "chain": 0}

    def reducers(self):
        return [self.polys[i] for i in self.active]

    def add(self, h: EPoly):
        pk = self.pk
        deg = _maxdeg(h, pk)
        if deg > pk.safe_degree:
            raise OverflowError(f"degree {deg} exceeds the packed-monomial bound {pk.safe_degree}")
        h.maxdeg = deg
        hn = len(self.polys)
        self.polys.append(h)
        lh = h.e[0]
        lead = [self.polys[i].e[0] for i in range(hn)]

        # Gebauer-Moeller: drop new pairs whose lcm is a multiple of another
        # new pair's lcm, keeping coprime pairs only as witnesses
        cand = [(i, pk.lcm(lead[i], lh)) for i in self.active]
        accepted = []
        while cand:
            i, L = cand.pop(0)
            if pk.coprime(lead[i], lh) or not (
                any(pk.divides(M, L) for _, M in cand)
                or any(pk.divides(M, L) for _, M in accepted)
            ):
                accepted.append((i, L))
            else:
                self.stats["chain"] += 1
        new_pairs = []
        for i, L in accepted:
            if pk.coprime(lead[i], lh):
                self.stats["product"] += 1
            else:
                new_pairs.append((i, L))

        dead = []
        for pair in self.pairs:
            i, j, L = pair
            if (
                pk.divides(lh, L)
                and pk.lcm(lead[i], lh) != L
                and pk.lcm(lead[j], lh) != L
            ):
                dead.append(pair)
        for pair in dead:
            self.pairs.discard(pair)
            self.stats["chain"] += 1

        for i, L in new_pairs:
            pair = (i, hn, L)
            self.pairs.add(pair)
            heapq.heappush(self.heap, (pk.degree(L), pk.key(pk.unpack(L)), i, hn, L))

        self.active = [i for i in self.active if not pk.divides(lh, lead[i])] + [hn]

    def pop(self):
        while self.heap:
            _, _, i, j, L = heapq.heappop(self.heap)
            if (i, j, L) in self.pairs:
                self.pairs.discard((i, j, L))
                return i, j
        return None


def buchberger(gens: list, pk: Packing, p: int, tail_reduce: bool = False) -> list:
    """Reduced Groebner basis of engine polynomials, sorted by ascending lead."""
    st = _State(pk, p)
    # deterministic: input order, then smallest lead first
    start = sorted(
        (normalize(EPoly(list(g.k), list(g.e), list(g.c)), p) for g in gens if g.k),
        key=lambda g: (g.k[0],),
    )
    for g in start:
        r, _, _ = reduce_full(g, st.reducers(), pk, p, full=tail_reduce)
        if r.k:
            st.add(normalize(r, p))
    while True:
        nxt = st.pop()
        if nxt is None:
            break
        i, j = nxt
        st.stats["pairs"] += 1
        s = spoly(st.polys[i], st.polys[j], pk, p)
        if not s.k:
            st.stats["zero"] += 1
            continue
        r, _, _ = reduce_full(s, st.reducers(), pk, p, full=tail_reduce)
        if r.k:
            st.add(normalize(r, p))
        else:
            st.stats["zero"] += 1
    return interreduce([st.polys[i] for i in st.active], pk, p)


def interreduce(basis: list, pk: Packing, p: int) -> list:
    """Minimalize and tail-reduce a Groebner basis."""
    basis = sorted(basis, key=lambda g: g.k[0])
    minimal = []
    for g in basis:
        if not any(pk.divides(h.e[0], g.e[0]) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r, _, _ = reduce_full(g, others, pk, p, full=True)
        r = normalize(r, p)
        r.maxdeg = _maxdeg(r, pk)
        out.append(r)
    return out


def is_groebner(basis: list, pk: Packing, p: int) -> bool:
    """Check that every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spoly(basis[i], basis[j], pk, p)
            if s.k:
                r, _, _ = reduce_full(s, basis, pk, p)
                if r.k:
                    return False
    return True
