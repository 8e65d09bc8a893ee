# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernels; same contracts as ``_pykernels``."""

import array
from math import gcd

BACKEND = "cython"


cpdef Py_ssize_t find_divisor(long long e, list lead_exps, long long guard):
    cdef long long eg = e | guard
    cdef long long le
    cdef Py_ssize_t i, n = len(lead_exps)
    for i in range(n):
        le = lead_exps[i]
        if ((eg - le) & guard) == guard:
            return i
    return -1


cdef inline Py_ssize_t _find(long long e, long long* leads, Py_ssize_t n, long long guard):
    cdef long long eg = e | guard
    cdef Py_ssize_t i
    for i in range(n):
        if ((eg - leads[i]) & guard) == guard:
            return i
    return -1


cdef tuple _combine_p(list fk, list fe, list fc, Py_ssize_t start, list gk, list ge, list gc,
                      long long tk, long long te, long long b, long long p):
    # a == 1 over F_p (monic reducers)
    cdef list rk = [], re = [], rc = []
    cdef Py_ssize_t nf = len(fk), ng = len(gk)
    cdef Py_ssize_t i = start + 1, j = 1
    cdef long long ki, kj, c, nb = (p - b) % p
    while i < nf and j < ng:
        ki = fk[i]
        kj = <long long>gk[j] + tk
        if ki > kj:
            rk.append(ki); re.append(fe[i]); rc.append(fc[i])
            i += 1
        elif ki < kj:
            c = (nb * <long long>gc[j]) % p
            rk.append(kj); re.append(<long long>ge[j] + te); rc.append(c)
            j += 1
        else:
            c = (<long long>fc[i] + nb * <long long>gc[j]) % p
            if c:
                rk.append(ki); re.append(fe[i]); rc.append(c)
            i += 1
            j += 1
    while i < nf:
        rk.append(fk[i]); re.append(fe[i]); rc.append(fc[i])
        i += 1
    while j < ng:
        c = (nb * <long long>gc[j]) % p
        rk.append(<long long>gk[j] + tk); re.append(<long long>ge[j] + te); rc.append(c)
        j += 1
    return rk, re, rc


cdef tuple _combine_z(list fk, list fe, list fc, Py_ssize_t start, object a, list gk, list ge, list gc,
                      long long tk, long long te, object b):
    cdef list rk = [], re = [], rc = []
    cdef Py_ssize_t nf = len(fk), ng = len(gk)
    cdef Py_ssize_t i = start + 1, j = 1
    cdef long long ki, kj
    cdef bint unit = (a == 1)
    cdef object c
    while i < nf and j < ng:
        ki = fk[i]
        kj = <long long>gk[j] + tk
        if ki > kj:
            rk.append(ki); re.append(fe[i]); rc.append(fc[i] if unit else a * fc[i])
            i += 1
        elif ki < kj:
            rk.append(kj); re.append(<long long>ge[j] + te); rc.append(-b * gc[j])
            j += 1
        else:
            c = (fc[i] if unit else a * fc[i]) - b * gc[j]
            if c:
                rk.append(ki); re.append(fe[i]); rc.append(c)
            i += 1
            j += 1
    while i < nf:
        rk.append(fk[i]); re.append(fe[i]); rc.append(fc[i] if unit else a * fc[i])
        i += 1
    while j < ng:
        rk.append(<long long>gk[j] + tk); re.append(<long long>ge[j] + te); rc.append(-b * gc[j])
        j += 1
    return rk, re, rc


def combine(list fk, list fe, list fc, Py_ssize_t start, a, list gk, list ge, list gc, tk, te, b, long long p):
    if p:
        if a != 1:
            fc = [(a * c) % p for c in fc]
        return _combine_p(fk, fe, fc, start, gk, ge, gc, tk, te, b % p, p)
    return _combine_z(fk, fe, fc, start, a, gk, ge, gc, tk, te, b)


cdef object _content(list cs):
    cdef object g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def reduce_poly(list fk, list fe, list fc, list basis, list lead_exps, long long guard, long long p, bint full):
    cdef list rk = [], re = [], rc = []
    cdef object num = 1, den = 1, a, b, g, lc
    cdef Py_ssize_t idx, i, n, steps = 0
    cdef Py_ssize_t nb = len(lead_exps)
    cdef long long tk, te
    cdef list gk, ge, gc
    cdef long long[:] leads
    cdef long long* lp = NULL
    buf = array.array("q", lead_exps)
    if nb:
        leads = buf
        lp = &leads[0]
    while fk:
        idx = _find(fe[0], lp, nb, guard)
        if idx < 0:
            if not full:
                rk.extend(fk); re.extend(fe); rc.extend(fc)
                break
            n = len(fk)
            i = 1
            while i < n and _find(fe[i], lp, nb, guard) < 0:
                i += 1
            rk.extend(fk[:i]); re.extend(fe[:i]); rc.extend(fc[:i])
            fk = fk[i:]; fe = fe[i:]; fc = fc[i:]
            continue
        gk, ge, gc = basis[idx]
        tk = <long long>fk[0] - <long long>gk[0]
        te = <long long>fe[0] - <long long>ge[0]
        lc = fc[0]
        if p:
            fk, fe, fc = _combine_p(fk, fe, fc, 0, gk, ge, gc, tk, te, lc, p)
        else:
            g = gcd(lc, gc[0])
            a = gc[0] // g
            b = lc // g
            if a != 1:
                rc = [a * c for c in rc]
                num *= a
            fk, fe, fc = _combine_z(fk, fe, fc, 0, a, gk, ge, gc, tk, te, b)
            steps += 1
            if steps % 16 == 0:
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
