"""Binary forms in ``z, w`` living inside K[x, y, z, w].

The gcd is computed on the dehomogenization ``w = 1`` with Euclid's
algorithm; the power of ``w`` dividing both forms is tracked separately.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial
from .scalar import QQ

__all__ = ["is_binary_form", "binary_gcd", "to_univariate", "from_univariate", "primitive"]


def _zw(ring):
    return ring._index["z"], ring._index["w"]


def is_binary_form(f: Polynomial) -> bool:
    if not f or not f.is_homogeneous():
        return False
    iz, iw = _zw(f.ring)
    return all(e == 0 for m in f._d for i, e in enumerate(m) if i not in (iz, iw))


def _check(f):
    if not is_binary_form(f):
        raise ValueError(f"not a nonzero binary form in z, w: {f}")


def to_univariate(f: Polynomial) -> list:
    """Dense coefficients of ``f(z, 1)``, index = power of z."""
    iz, _ = _zw(f.ring)
    n = max(m[iz] for m in f._d)
    out = [f.ring.coerce(0)] * (n + 1)
    for m, c in f._d.items():
        out[m[iz]] = c
    return out


def from_univariate(coeffs: list, degree: int, ring) -> Polynomial:
    """Homogenize ``sum c_i z^i`` to the given total degree."""
    iz, iw = _zw(ring)
    d = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[iz] = i
            e[iw] = degree - i
            d[tuple(e)] = c
    return ring.from_dict(d)


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _inv(c, field):
    return Fraction(1) / c if field == QQ else c.inverse()


def _polyrem(a, b, field):
    a = list(a)
    inv = _inv(b[-1], field)
    while len(a) >= len(b) and any(a):
        q = a[-1] * inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - q * c
        _trim(a)
    return a


def _ugcd(a, b, field):
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _polyrem(a, b, field)
    inv = _inv(a[-1], field)
    return [c * inv for c in a]


def _w_valuation(f):
    _, iw = _zw(f.ring)
    return min(m[iw] for m in f._d)


def primitive(f: Polynomial) -> Polynomial:
    """Over Q, scale to coprime integer coefficients with positive leading term."""
    if f.ring.field != QQ or not f:
        return f
    from math import gcd, lcm

    cs = [Fraction(c) for c in f._d.values()]
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    g = 0
    for c in cs:
        g = gcd(g, int(c * den))
    s = Fraction(den, g)
    if f.leading_coefficient() < 0:
        s = -s
    return f.scale(s)


def binary_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor of two binary forms.

    Over Q the result is primitive with positive leading coefficient; over
    F_p it is monic in the dehomogenized variable.
    """
    _check(f)
    _check(g)
    ring = f.ring
    vw = min(_w_valuation(f), _w_valuation(g))
    ug = _ugcd(to_univariate(f), to_univariate(g), ring.field)
    udeg = len(ug) - 1
    h = from_univariate(ug, udeg, ring)
    if vw:
        h = h * ring.gen("w") ** vw
    return primitive(h)
