"""Hilbert series, functions and polynomials of homogeneous ideals.

Everything is read off the monomial ideal of leading terms of a grevlex
Groebner basis, whose Hilbert series numerator comes from a pivot
recursion (inclusion-exclusion for six or fewer generators).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .binary import binary_gcd, is_binary_form
from .groebner import Ideal
from .orders import GREVLEX

__all__ = [
    "HilbertSeries",
    "HilbertPolynomial",
    "HilbertDimensionError",
    "HilbertCheckError",
    "hilbert_series_monomial",
    "hilbert_series",
    "hilbert_function",
    "hilbert_polynomial",
    "ci_series",
    "ci_hilbert_check",
    "embedded_length",
]


class HilbertDimensionError(ValueError):
    """Hilbert polynomial requested for a quotient of unsupported dimension."""


class HilbertCheckError(AssertionError):
    """A Hilbert function disagrees with its predicted value."""


# -- univariate integer polynomials as coefficient tuples ---------------------

def _padd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _ptrim(out)


def _pshift(a, k):
    return tuple([0] * k + list(a)) if a else ()


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _one_minus_t_pow(k):
    return _ptrim([1] + [0] * (k - 1) + [-1]) if k else ()


# -- monomial ideals ----------------------------------------------------------

def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return frozenset(out)


def _lcm(ms, n):
    return tuple(max((m[i] for m in ms), default=0) for i in range(n))


def _inclusion_exclusion(gens, n):
    h = (1,)
    gens = list(gens)
    for k in range(1, len(gens) + 1):
        for S in combinations(gens, k):
            term = _pshift((1,), sum(_lcm(S, n)))
            h = _padd(h, term if k % 2 == 0 else tuple(-c for c in term))
    return h


def _coprime(ms):
    used = set()
    for m in ms:
        vs = {i for i, e in enumerate(m) if e}
        if vs & used:
            return False
        used |= vs
    return True


@lru_cache(maxsize=4096)
def _numerator(gens: frozenset, n: int, small: int):
    if not gens:
        return (1,)
    if any(sum(m) == 0 for m in gens):
        return ()
    if _coprime(gens):
        h = (1,)
        for m in sorted(gens):
            h = _pmul(h, _one_minus_t_pow(sum(m)))
        return h
    if len(gens) <= small:
        return _inclusion_exclusion(sorted(gens), n)
    # pivot on the variable shared by most non-pure-power generators
    mixed = [m for m in gens if sum(1 for e in m if e) > 1]
    counts = [sum(1 for m in mixed if m[i]) for i in range(n)]
    v = max(range(n), key=lambda i: (counts[i], -i))
    e = min(m[v] for m in mixed if m[v])
    p = tuple(e if i == v else 0 for i in range(n))
    plus = _minimalize(list(gens) + [p])
    quot = _minimalize(tuple(max(a - b, 0) for a, b in zip(m, p)) for m in gens)
    return _padd(_numerator(plus, n, small), _pshift(_numerator(quot, n, small), e))


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)**nvars``."""

    numerator: tuple
    nvars: int

    def coefficient(self, n: int) -> int:
        N = self.nvars
        return sum(c * comb(n - i + N - 1, N - 1) for i, c in enumerate(self.numerator) if i <= n)

    def reduced(self) -> tuple:
        """Return ``(k, r)`` with ``numerator = (1 - t)**(nvars - r) * k`` and ``k(1) != 0``."""
        h = list(self.numerator)
        r = self.nvars
        if not h:
            return (), 0
        while sum(h) == 0:
            # synthetic division by (1 - t)
            q = []
            acc = 0
            for c in h[:-1]:
                acc += c
                q.append(acc)
            h = list(_ptrim(q))
            r -= 1
        return tuple(h), r

    @property
    def krull_dimension(self) -> int:
        k, r = self.reduced()
        return r if k else -1


def hilbert_series_monomial(M, nvars: int = 4, small: int = 6) -> HilbertSeries:
    """Hilbert series of ``R/M`` for a monomial ideal ``M``.

    ``M`` is an :class:`Ideal` of monomials or an iterable of exponent tuples.
    ``small`` sets the generator count below which inclusion-exclusion is used
    directly; ``small=0`` forces the pure pivot recursion.
    """
    if isinstance(M, Ideal):
        if not M.is_monomial():
            raise ValueError("hilbert_series_monomial needs monomial generators")
        nvars = M.ring.nvars
        gens = [next(iter(g._d)) for g in M.generators]
    else:
        gens = [tuple(m) for m in M]
    return HilbertSeries(_numerator(_minimalize(gens), nvars, small), nvars)


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Hilbert series of ``R/I`` for a homogeneous ideal."""
    if not I.is_homogeneous():
        raise ValueError("Hilbert series requires a homogeneous ideal")
    if I.is_zero():
        return HilbertSeries((1,), I.ring.nvars)
    lead = I.groebner(GREVLEX).leading_monomials()
    return hilbert_series_monomial([tuple(m) for m in lead], I.ring.nvars)


def hilbert_function(I: Ideal, n: int) -> int:
    """``dim_K (R/I)_n``."""
    if n < 0:
        return 0
    return hilbert_series(I).coefficient(n)


def _gbinom(c: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer top."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= c - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


@dataclass(frozen=True)
class HilbertPolynomial:
    """Hilbert polynomial ``p(n) = sum_j binomial[j] * C(n, j)``.

    ``dimension`` is the Krull dimension of ``R/I`` (a curve has 2).
    """

    binomial: tuple
    dimension: int

    @property
    def coefficients(self) -> tuple:
        """Coefficients of ``p`` in the power basis, constant term first."""
        out = [Fraction(0)] * max(len(self.binomial), 1)
        for j, b in enumerate(self.binomial):
            # C(n, j) = n (n-1) ... (n-j+1) / j!
            poly = [Fraction(1)]
            for s in range(j):
                poly = [Fraction(0)] + poly
                for i in range(len(poly) - 1):
                    poly[i] -= s * poly[i + 1]
            f = Fraction(1, _factorial(j))
            for i, c in enumerate(poly):
                out[i] += b * c * f
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def __call__(self, n: int) -> int:
        return sum(b * comb(n, j) if n >= 0 else b * _gbinom(n, j) for j, b in enumerate(self.binomial))

    @property
    def degree(self) -> int:
        """Leading coefficient times ``(dimension - 1)!``; the degree for curves."""
        c = self.coefficients
        if self.dimension < 1:
            return 0
        return int(c[self.dimension - 1] * _factorial(self.dimension - 1)) if len(c) >= self.dimension else 0

    @property
    def genus(self) -> int:
        """Arithmetic genus ``1 - p(0)`` of a curve."""
        if self.dimension != 2:
            raise HilbertDimensionError("genus is defined here for curves only")
        return 1 - self(0)

    def __str__(self):
        c = self.coefficients
        parts = []
        for i in reversed(range(len(c))):
            if c[i] == 0 and len(c) > 1:
                continue
            mag = abs(c[i])
            cs = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if i == 0:
                body = cs
            else:
                v = "n" if i == 1 else f"n^{i}"
                body = v if mag == 1 else f"{cs}{v}"
            sign = "-" if c[i] < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_dict(self) -> dict:
        d = {
            "binomial": list(self.binomial),
            "power": [str(c) for c in self.coefficients],
            "dimension": self.dimension,
            "text": str(self),
        }
        if self.dimension == 2:
            d["degree"] = self.degree
            d["genus"] = self.genus
        return d


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def hilbert_polynomial_from_series(H: HilbertSeries, max_dim: int = 2) -> HilbertPolynomial:
    k, r = H.reduced()
    if not k:
        return HilbertPolynomial((), 0)
    if r > max_dim:
        raise HilbertDimensionError(f"R/I has Krull dimension {r}; only points and curves are supported")
    if r == 0:
        return HilbertPolynomial((), 0)
    # C(n - i + r - 1, r - 1) = sum_j C(r - 1 - i, r - 1 - j) C(n, j)
    binomial = [0] * r
    for i, c in enumerate(k):
        for j in range(r):
            binomial[j] += c * _gbinom(r - 1 - i, r - 1 - j)
    return HilbertPolynomial(tuple(_ptrim(binomial)) or (), r)


def hilbert_polynomial(I: Ideal) -> HilbertPolynomial:
    """Hilbert polynomial of ``R/I``; ``I`` must define points or a curve."""
    return hilbert_polynomial_from_series(hilbert_series(I))


def regularity_index(I: Ideal) -> int:
    """Smallest ``n0`` with ``hilbert_function(I, n) == hilbert_polynomial(I)(n)`` for ``n >= n0``."""
    k, r = hilbert_series(I).reduced()
    return max(len(k) - r, 0)


def ci_series(a: int, b: int) -> list:
    """Coefficients of ``(1 - t^a)(1 - t^b) / (1 - t)^2``."""
    num = _pmul(_one_minus_t_pow(a), _one_minus_t_pow(b))
    H = HilbertSeries(num, 2)
    return [H.coefficient(n) for n in range(a + b)]


def ci_hilbert_check(F, G) -> list:
    """Hilbert function of ``R/(x, y, F, G)`` for coprime binary forms.

    Raises :class:`HilbertCheckError` unless it matches the complete
    intersection series of degrees ``deg F, deg G`` and sums to their product.
    """
    for f in (F, G):
        if not is_binary_form(f):
            raise ValueError(f"not a binary form in z, w: {f}")
    g = binary_gcd(F, G)
    if not g.is_constant():
        raise ValueError(f"F and G share the factor {g}; not a complete intersection")
    ring = F.ring
    a, b = F.degree(), G.degree()
    I = Ideal([ring.gen("x"), ring.gen("y"), F, G], ring)
    H = hilbert_series(I)
    values = [H.coefficient(n) for n in range(a + b)]
    expected = ci_series(a, b)
    if values != expected:
        raise HilbertCheckError(f"Hilbert function {values} != complete intersection {expected}")
    if sum(values) != a * b or H.coefficient(a + b) != 0:
        raise HilbertCheckError(f"total dimension {sum(values)} != {a * b}")
    return values


def embedded_length(I_sat: Ideal, I_curve: Ideal, degree_bound: int = 200, stable: int = 3) -> int:
    """Length of the zero-dimensional part separating ``I_sat`` from ``I_curve``.

    ``I_curve`` must contain ``I_sat``. The difference of Hilbert functions is
    eventually the constant length; it must agree with the difference of
    Hilbert polynomials and hold for ``stable`` consecutive degrees past both
    regularity indices.
    """
    Hs = hilbert_series(I_sat)
    Hc = hilbert_series(I_curve)
    Ps = hilbert_polynomial_from_series(Hs)
    Pc = hilbert_polynomial_from_series(Hc)
    diffs = {Ps(n) - Pc(n) for n in range(4)}
    if len(diffs) != 1:
        raise HilbertCheckError(f"Hilbert polynomials differ by a nonconstant: {Ps} vs {Pc}")
    diff_hp = diffs.pop()
    if diff_hp < 0:
        raise HilbertCheckError("curve part has larger Hilbert polynomial than the scheme")
    start = max(len(Hs.reduced()[0]), len(Hc.reduced()[0]))
    if start + stable > degree_bound:
        raise HilbertCheckError(f"degree bound {degree_bound} too small for stabilization")
    run = 0
    for n in range(degree_bound + 1):
        d = Hs.coefficient(n) - Hc.coefficient(n)
        if d < 0:
            raise HilbertCheckError(f"negative Hilbert function difference in degree {n}")
        if n >= start:
            run = run + 1 if d == diff_hp else 0
            if run >= stable:
                return diff_hp
    raise HilbertCheckError("Hilbert function difference did not stabilize")
