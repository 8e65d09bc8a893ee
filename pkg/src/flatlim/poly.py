"""Sparse polynomials over an exact field.

The working ring is K[x, y, z, w]; :class:`PolyRing` also serves the
five-variable ring ``K[t, x, y, z, w]`` used internally for elimination.
Polynomials are immutable. Terms are kept in a dict from exponent tuples to
nonzero coefficients; :attr:`Polynomial.terms` lists them in descending
order for the ring's ambient order (grevlex unless stated otherwise).
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import reduce

from .orders import GREVLEX, TermOrder, weight_degree
from .scalar import QQ, FieldMismatchError, PrimeFieldElement, format_rational

__all__ = [
    "Monomial",
    "PolyRing",
    "Polynomial",
    "ParseError",
    "R",
    "initial_form",
    "determinant",
]

MAX_EXPONENT = 511


class ParseError(ValueError):
    """Syntax error in polynomial text; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Monomial(tuple):
    """Exponent vector; a tuple with a few conveniences."""

    __slots__ = ()

    def __new__(cls, exps):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 or e > MAX_EXPONENT for e in exps):
            raise OverflowError(f"exponent out of range in {exps}")
        return super().__new__(cls, exps)

    @property
    def degree(self) -> int:
        return sum(self)

    def __mul__(self, other):
        return Monomial(map(operator.add, self, other))

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))


def _canon(c):
    # integral rationals are stored as int: cheaper arithmetic, equal hashes
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class PolyRing:
    """Polynomial ring over ``field`` in the named variables."""

    def __init__(self, field=QQ, variables=("x", "y", "z", "w"), order: TermOrder = GREVLEX):
        self.field = field
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.order = order
        self._sort_key = order.key_function(self.nvars)
        self._index = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.variables)}]"

    def coerce(self, c):
        if self.field is QQ or self.field == QQ:
            if isinstance(c, PrimeFieldElement):
                raise FieldMismatchError("prime field coefficient in a QQ ring")
            if isinstance(c, int):
                return c
            return _canon(Fraction(c))
        return self.field(c)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.coerce(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, c=1) -> "Polynomial":
        c = self.coerce(c)
        return Polynomial(self, {tuple(Monomial(exps)): c} if c else {})

    def gen(self, name) -> "Polynomial":
        i = self._index[name] if isinstance(name, str) else name
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.nvars))

    def from_dict(self, terms: dict) -> "Polynomial":
        out = {}
        for m, c in terms.items():
            c = self.coerce(c)
            if c:
                out[tuple(Monomial(m))] = c
        return Polynomial(self, out)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            return self.convert(value)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Move ``f`` into this ring, matching variables by name."""
        idx = []
        for v in f.ring.variables:
            if v not in self._index:
                if any(m[f.ring._index[v]] for m in f._d):
                    raise ValueError(f"variable {v} does not exist in {self!r}")
                idx.append(None)
            else:
                idx.append(self._index[v])
        out = {}
        for m, c in f._d.items():
            e = [0] * self.nvars
            for i, k in enumerate(idx):
                if k is not None:
                    e[k] = m[i]
            out[tuple(e)] = self.coerce(c) if f.ring.field != self.field else c
        return Polynomial(self, {m: c for m, c in out.items() if c})

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()


class Polynomial:
    """Immutable sparse polynomial."""

    __slots__ = ("ring", "_d", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._d = terms
        self._terms = None
        self._hash = None

    # -- structure -------------------------------------------------------
    @property
    def terms(self) -> tuple:
        """``(Monomial, coefficient)`` pairs in descending ambient order."""
        if self._terms is None:
            key = self.ring._sort_key
            self._terms = tuple(
                (Monomial(m), c) for m, c in sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)
            )
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._d)

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def coefficient(self, exps):
        return self._d.get(tuple(exps), self.ring.field.zero if self.ring.field != QQ else 0)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and not any(next(iter(self._d))))

    def is_monomial(self) -> bool:
        return len(self._d) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._d), default=-1)

    def degree_in(self, var) -> int:
        i = self.ring._index[var] if isinstance(var, str) else var
        return max((m[i] for m in self._d), default=-1)

    def is_homogeneous(self, weights=None) -> bool:
        if weights is None:
            degs = {sum(m) for m in self._d}
        else:
            degs = {weight_degree(m, weights) for m in self._d}
        return len(degs) <= 1

    def variables_used(self) -> set:
        return {self.ring.variables[i] for m in self._d for i, e in enumerate(m) if e}

    def leading_term(self, order: TermOrder | None = None):
        """Return ``(Monomial, coefficient)`` of the largest term."""
        if not self._d:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return self.terms[0]
        key = order.key_function(self.ring.nvars)
        m = max(self._d, key=key)
        return Monomial(m), self._d[m]

    def leading_monomial(self, order: TermOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder | None = None):
        return self.leading_term(order)[1]

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise FieldMismatchError(f"polynomials from {self.ring!r} and {other.ring!r}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        d = dict(self._d)
        for m, c in other._d.items():
            s = d.get(m)
            s = c if s is None else _canon(s + c)
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if len(other._d) == 1:
            (m0, c0), = other._d.items()
            return self._mul_term(m0, c0)
        if len(self._d) == 1:
            (m0, c0), = self._d.items()
            return other._mul_term(m0, c0)
        d = {}
        get = d.get
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = tuple(map(operator.add, m1, m2))
                d[m] = get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: _canon(c) for m, c in d.items() if c})

    __rmul__ = __mul__

    def _mul_term(self, m0, c0):
        if not c0:
            return self.ring.zero
        if not any(m0):
            return Polynomial(self.ring, {m: _canon(c * c0) for m, c in self._d.items()})
        return Polynomial(
            self.ring,
            {tuple(map(operator.add, m, m0)): _canon(c * c0) for m, c in self._d.items()},
        )

    def mul_monomial(self, exps, c=1):
        return self._mul_term(tuple(exps), self.ring.coerce(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        return self._mul_term((0,) * self.ring.nvars, self.ring.coerce(c))

    def monic(self, order: TermOrder | None = None):
        lc = self.leading_coefficient(order)
        if self.ring.field == QQ:
            return self.scale(Fraction(1) / lc)
        return self.scale(lc.inverse())

    def divexact(self, g: "Polynomial") -> "Polynomial":
        """Return ``self / g``; raise ``ValueError`` if ``g`` does not divide."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        gm, gc = g.leading_term()
        inv = (Fraction(1) / gc) if self.ring.field == QQ else gc.inverse()
        q = self.ring.zero
        r = self
        key = self.ring._sort_key
        while r:
            m = max(r._d, key=key)
            if not all(a >= b for a, b in zip(m, gm)):
                raise ValueError("polynomial division is not exact")
            t = tuple(a - b for a, b in zip(m, gm))
            c = _canon(r._d[m] * inv)
            q = q + self.ring.monomial(t, c)
            r = r - g._mul_term(t, c)
        return q

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return self.divexact(other)
        c = self.ring.coerce(other)
        if self.ring.field == QQ:
            return self.scale(Fraction(1) / Fraction(c))
        return self.scale(c.inverse())

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int, Fraction, PrimeFieldElement)):
            return self._d == self.ring.constant(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    # -- evaluation ------------------------------------------------------
    def evaluate(self, values: dict):
        """Substitute scalars or polynomials for variables given by name.

        Unnamed variables are kept. The result is a polynomial.
        """
        ring = self.ring
        subs = {}
        for k, v in values.items():
            i = ring._index[k] if isinstance(k, str) else k
            subs[i] = v if isinstance(v, Polynomial) else ring.constant(v)
        result = ring.zero
        cache = {}
        for m, c in self._d.items():
            rest = tuple(0 if i in subs else e for i, e in enumerate(m))
            term = ring.monomial(rest, c)
            for i, e in enumerate(m):
                if e and i in subs:
                    p = cache.get((i, e))
                    if p is None:
                        p = cache[(i, e)] = subs[i] ** e
                    term = term * p
            result = result + term
        return result

    def weight_degree(self, weights) -> int:
        return max(weight_degree(m, weights) for m in self._d)

    def initial_form(self, weights) -> "Polynomial":
        return initial_form(self, weights)

    # -- text ------------------------------------------------------------
    def __str__(self):
        if not self._d:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        parts = []
        for i, (m, c) in enumerate(self.terms):
            if field == QQ:
                neg = c < 0
                mag = -c if neg else c
                cs = format_rational(Fraction(mag))
            else:
                neg = False
                cs = field.format(c)
            mono = "*".join(
                names[j] if e == 1 else f"{names[j]}^{e}" for j, e in enumerate(m) if e
            )
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def initial_form(f: Polynomial, weights) -> Polynomial:
    """Sum of the terms of ``f`` whose weighted degree is maximal."""
    if not f:
        raise ValueError("initial form of the zero polynomial is undefined")
    weights = tuple(weights)
    top = max(weight_degree(m, weights) for m in f._d)
    return Polynomial(f.ring, {m: c for m, c in f._d.items() if weight_degree(m, weights) == top})


def determinant(matrix) -> Polynomial:
    """Determinant of a square matrix of polynomials by Laplace expansion.

    Minors are built column by column over row subsets, so the cost is
    ``n * 2**(n-1)`` products instead of ``n!``.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    minors = _row_subset_minors(matrix, list(range(n)))
    return minors[(1 << n) - 1]


def _row_subset_minors(matrix, cols) -> dict:
    """Map each row bitmask ``S`` with ``|S| == len(cols)`` to the minor on rows S, ``cols``."""
    n = len(matrix)
    ring = matrix[0][0].ring
    level = {0: ring.one}
    for k, col in enumerate(cols):
        nxt = {}
        for s, minor in level.items():
            for r in range(n):
                if s >> r & 1:
                    continue
                t = s | (1 << r)
                # sign of moving row r below the rows of s that follow it
                above = bin(s >> (r + 1)).count("1")
                term = matrix[r][col] * minor
                if above % 2:
                    term = -term
                prev = nxt.get(t)
                nxt[t] = term if prev is None else prev + term
        level = nxt
    return level


def cofactor_minors(matrix, skip_col: int = 0) -> list:
    """Minors obtained by deleting row ``i`` and column ``skip_col``, for each ``i``."""
    n = len(matrix)
    cols = [c for c in range(n) if c != skip_col]
    minors = _row_subset_minors(matrix, cols)
    full = (1 << n) - 1
    return [minors[full ^ (1 << i)] for i in range(n)]


R = PolyRing()


class _Parser:
    """Recursive-descent parser for ``+ - * ^ ( )``, integers and ``a/b``."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        if not self.text.strip():
            self.error("empty input")
        f = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while True:
            c = self.peek()
            if c == "*" and self.text[self.pos:self.pos + 2] != "**":
                self.pos += 1
                f = f * self.unary()
            elif c == "/":
                start = self.pos
                self.pos += 1
                self.skip()
                num = self.number_token()
                if num is None:
                    self.error("expected integer after '/'", start + 1)
                if num == 0:
                    self.error("division by zero", start)
                f = f / num
            else:
                return f

    def unary(self):
        c = self.peek()
        if c == "-":
            self.pos += 1
            return -self.unary()
        if c == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        c = self.peek()
        if c == "^" or self.text[self.pos:self.pos + 2] == "**":
            self.pos += 1 if c == "^" else 2
            self.skip()
            start = self.pos
            e = self.number_token()
            if e is None:
                self.error("expected integer exponent", start)
            return base ** e
        return base

    def number_token(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start:self.pos])

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            f = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return f
        if c.isdigit():
            return self.ring.constant(self.number_token())
        if c.isalpha() or c == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.ring._index:
                self.error(f"unknown variable {name!r}", start)
            return self.ring.gen(name)
        if not c:
            self.error("unexpected end of input")
        self.error(f"unexpected {c!r}")


def product(polys, ring: PolyRing = R) -> Polynomial:
    return reduce(operator.mul, polys, ring.one)
