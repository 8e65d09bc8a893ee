"""Pure-Python reduction kernels.

Polynomials are three parallel lists sorted by descending ``keys``:
``keys`` (packed order keys), ``exps`` (packed exponents with a guard bit
per field) and ``coeffs`` (Python ints; residues when ``p > 0``).
Over the integers the reduction is fraction-free.
"""

from math import gcd

BACKEND = "python"


def find_divisor(e, lead_exps, guard):
    """Index of the first packed exponent in ``lead_exps`` dividing ``e``, or -1."""
    eg = e | guard
    for i, le in enumerate(lead_exps):
        if (eg - le) & guard == guard:
            return i
    return -1


def combine(fk, fe, fc, start, a, gk, ge, gc, tk, te, b, p):
    """Return ``a*f[start+1:] - b*t*g[1:]`` as three new lists.

    The leading terms ``f[start]`` and ``t*lead(g)`` are assumed to cancel.
    """
    rk = []
    re = []
    rc = []
    nf = len(fk)
    ng = len(gk)
    i = start + 1
    j = 1
    while i < nf and j < ng:
        ki = fk[i]
        kj = gk[j] + tk
        if ki > kj:
            c = a * fc[i]
            if p:
                c %= p
            rk.append(ki)
            re.append(fe[i])
            rc.append(c)
            i += 1
        elif ki < kj:
            c = -b * gc[j]
            if p:
                c %= p
            rk.append(kj)
            re.append(ge[j] + te)
            rc.append(c)
            j += 1
        else:
            c = a * fc[i] - b * gc[j]
            if p:
                c %= p
            if c:
                rk.append(ki)
                re.append(fe[i])
                rc.append(c)
            i += 1
            j += 1
    while i < nf:
        c = a * fc[i]
        if p:
            c %= p
        rk.append(fk[i])
        re.append(fe[i])
        rc.append(c)
        i += 1
    while j < ng:
        c = -b * gc[j]
        if p:
            c %= p
        rk.append(gk[j] + tk)
        re.append(ge[j] + te)
        rc.append(c)
        j += 1
    return rk, re, rc


def _content(cs):
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def reduce_poly(fk, fe, fc, basis, lead_exps, guard, p, full):
    """Reduce ``f`` modulo ``basis`` (a list of ``(keys, exps, coeffs)``).

    Reducers must be monic when ``p > 0`` and have positive leading
    coefficient otherwise. Returns ``(keys, exps, coeffs, num, den)`` where the
    result equals ``num/den`` times the true remainder. With ``full`` false
    only the leading term is reduced.
    """
    rk = []
    re = []
    rc = []
    num = 1
    den = 1
    steps = 0
    while fk:
        idx = find_divisor(fe[0], lead_exps, guard)
        if idx < 0:
            if not full:
                rk.extend(fk)
                re.extend(fe)
                rc.extend(fc)
                break
            # move irreducible leading terms to the remainder in one go
            n = len(fk)
            i = 1
            while i < n and find_divisor(fe[i], lead_exps, guard) < 0:
                i += 1
            rk.extend(fk[:i])
            re.extend(fe[:i])
            rc.extend(fc[:i])
            fk = fk[i:]
            fe = fe[i:]
            fc = fc[i:]
            continue
        gk, ge, gc = basis[idx]
        tk = fk[0] - gk[0]
        te = fe[0] - ge[0]
        lc = fc[0]
        if p:
            a = 1
            b = lc
        else:
            g = gcd(lc, gc[0])
            a = gc[0] // g
            b = lc // g
            if a != 1:
                rc = [a * c for c in rc]
                num *= a
        fk, fe, fc = combine(fk, fe, fc, 0, a, gk, ge, gc, tk, te, b, p)
        steps += 1
        if not p and steps % 16 == 0:
            g = gcd(_content(rc), _content(fc))
            if g > 1:
                rc = [c // g for c in rc]
                fc = [c // g for c in fc]
                den *= g
    if not p and rc:
        g = _content(rc)
        if g > 1:
            rc = [c // g for c in rc]
            den *= g
    return rk, re, rc, num, den
