"""Ideals with cached reduced Groebner bases, and the usual ideal operations.

Intersection, colon and saturation all go through elimination of one
auxiliary variable in a five-variable ring.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..orders import GREVLEX, Block, TermOrder, WeightRefined
from ..poly import R, Polynomial, PolyRing, initial_form
from ..scalar import QQ
from . import engine

__all__ = [
    "Ideal",
    "GBasis",
    "SaturationCapExceeded",
    "buchberger",
    "normal_form",
    "member",
    "eliminate",
    "intersect",
    "colon",
    "saturation_chain",
    "saturate",
    "saturate_irrelevant",
    "initial_ideal",
    "ideals_equal",
    "verify_groebner",
    "DEFAULT_STEP_CAP",
]

DEFAULT_STEP_CAP = 64


class SaturationCapExceeded(RuntimeError):
    """Iterated colon did not stabilize within the step cap."""


@lru_cache(maxsize=None)
def _packing(nvars: int, order: TermOrder) -> engine.Packing:
    return engine.Packing(nvars, order)


@lru_cache(maxsize=None)
def _ring(fld, variables: tuple) -> PolyRing:
    return PolyRing(fld, variables)


@dataclass(frozen=True)
class GBasis:
    """Reduced Groebner basis: monic elements sorted by ascending leading monomial."""

    order: TermOrder
    elements: tuple
    ring: PolyRing = field(compare=False)
    _engine: list = field(default=None, compare=False, repr=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def engine_form(self):
        if self._engine is None:
            pk = _packing(self.ring.nvars, self.order)
            object.__setattr__(self, "_engine", [_to_engine_monic(g, pk) for g in self.elements])
        return self._engine


def _to_engine_monic(g, pk):
    ep, _ = engine.to_engine(g, pk)
    return engine.normalize(ep, engine._modulus(g.ring.field))


class Ideal:
    """Ideal of a polynomial ring given by generators.

    Reduced Groebner bases are cached per term order. The cache is guarded by
    a lock, so one Ideal may be shared between threads.
    """

    def __init__(self, generators=(), ring: PolyRing | None = None):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = (ring or R).parse(g)
            if ring is None:
                ring = g.ring
            elif g.ring != ring:
                g = ring.convert(g)
            if g:
                gens.append(g)
        self.ring = ring if ring is not None else R
        self.generators = tuple(gens)
        self._cache = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, f):
        return member(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideals_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + tuple(other.generators), self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([f * g for f in self.generators for g in other.generators], self.ring)

    def groebner(self, order: TermOrder = GREVLEX) -> GBasis:
        with self._lock:
            gb = self._cache.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, self.ring)
            with self._lock:
                gb = self._cache.setdefault(order, gb)
        return gb

    def _seed(self, gb: GBasis):
        with self._lock:
            self._cache.setdefault(gb.order, gb)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb.elements[0].is_constant()

    def leading_ideal(self, order: TermOrder = GREVLEX) -> "Ideal":
        gb = self.groebner(order)
        return Ideal([self.ring.monomial(m) for m in gb.leading_monomials()], self.ring)


def buchberger(gens, order: TermOrder = GREVLEX, ring: PolyRing | None = None) -> GBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if g]
    if ring is None:
        ring = gens[0].ring if gens else R
    pk = _packing(ring.nvars, order)
    p = engine._modulus(ring.field)
    eps = [engine.to_engine(g, pk)[0] for g in gens]
    basis = engine.buchberger(eps, pk, p)
    elements = tuple(_monic_from_engine(b, pk, ring) for b in basis)
    return GBasis(order, elements, ring, basis)


def _monic_from_engine(ep, pk, ring):
    lc = ep.c[0]
    return engine.from_engine(ep, pk, ring, scale=lc if ring.field == QQ else lc)


def verify_groebner(gb: GBasis) -> bool:
    """Independent check that every S-pair of ``gb`` reduces to zero."""
    pk = _packing(gb.ring.nvars, gb.order)
    return engine.is_groebner(gb.engine_form(), pk, engine._modulus(gb.ring.field))


def normal_form(f: Polynomial, B: GBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo the Groebner basis ``B``."""
    if f.ring != B.ring:
        f = B.ring.convert(f)
    if not f:
        return f
    pk = _packing(B.ring.nvars, B.order)
    p = engine._modulus(B.ring.field)
    ep, scale = engine.to_engine(f, pk)
    r, num, den = engine.reduce_full(ep, B.engine_form(), pk, p, full=True)
    if p:
        return engine.from_engine(r, pk, B.ring)
    return engine.from_engine(r, pk, B.ring, scale=Fraction(num * scale, den))


def member(f: Polynomial, I: Ideal) -> bool:
    if not f:
        return True
    if I.is_zero():
        return False
    return not normal_form(f, I.groebner())


def _aux_ring(ring: PolyRing) -> tuple:
    name = "t"
    while name in ring.variables:
        name = "_" + name
    return _ring(ring.field, (name,) + ring.variables), name


def eliminate(I: Ideal, var=0) -> Ideal:
    """Return ``I`` intersected with the subring without ``var``.

    Uses a block order with ``var`` alone in the leading block. The result's
    grevlex Groebner basis is seeded from the elimination basis.
    """
    ring = I.ring
    vi = ring._index[var] if isinstance(var, str) else var
    rest = tuple(v for i, v in enumerate(ring.variables) if i != vi)
    work = _ring(ring.field, (ring.variables[vi],) + rest)
    sub = _ring(ring.field, rest)
    gens = [work.convert(g) for g in I.generators]
    gb = buchberger(gens, Block(1, (GREVLEX, GREVLEX)), work)
    kept = [g for g in gb.elements if g.degree_in(0) <= 0]
    out = tuple(sub.convert(g) for g in kept)
    J = Ideal(out, sub)
    J._seed(GBasis(GREVLEX, out, sub))
    return J


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating t from ``t*I + (1-t)*J``."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    big, name = _aux_ring(ring)
    t = big.gen(name)
    gens = [t * big.convert(f) for f in I.generators]
    gens += [(1 - t) * big.convert(g) for g in J.generators]
    E = eliminate(Ideal(gens, big), name)
    out = tuple(ring.convert(g) for g in E.generators)
    K = Ideal(out, ring)
    K._seed(GBasis(GREVLEX, out, ring))
    return K


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f``, from the generators of ``I ∩ <f>`` divided by ``f``."""
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    f = I.ring.convert(f) if f.ring != I.ring else f
    K = intersect(I, Ideal([f], I.ring))
    quotients = [g.divexact(f) for g in K.generators]
    return Ideal(quotients, I.ring)


def saturation_chain(I: Ideal, f: Polynomial, step_cap: int = DEFAULT_STEP_CAP) -> list:
    """``[I, I:f, I:f^2, ...]`` up to the first ideal equal to its successor."""
    chain = [I]
    current = I
    for _ in range(step_cap):
        nxt = colon(current, f)
        if ideals_equal(nxt, current):
            return chain
        chain.append(nxt)
        current = nxt
    raise SaturationCapExceeded(f"saturation by {f} did not stabilize in {step_cap} steps")


def saturate(I: Ideal, f: Polynomial, step_cap: int = DEFAULT_STEP_CAP) -> Ideal:
    """``I : f^∞``."""
    return saturation_chain(I, f, step_cap)[-1]


def saturate_irrelevant(I: Ideal, step_cap: int = DEFAULT_STEP_CAP) -> Ideal:
    """``I : (x, y, z, w)^∞`` as the intersection of ``I : v^∞`` over the variables."""
    result = None
    for v in I.ring.gens:
        S = saturate(I, v, step_cap)
        result = S if result is None else intersect(result, S)
    return result


def initial_ideal(I: Ideal, weights) -> Ideal:
    """Ideal generated by the weight-initial forms of a Groebner basis.

    The basis is computed for the weight order refined by grevlex.
    """
    gb = I.groebner(WeightRefined(weights, GREVLEX))
    return Ideal([initial_form(g, weights) for g in gb.elements], I.ring)


def ideals_equal(I: Ideal, J: Ideal, order: TermOrder = GREVLEX) -> bool:
    """Compare reduced Groebner bases under ``order``."""
    if I.ring != J.ring:
        return False
    return I.groebner(order).elements == J.groebner(order).elements
