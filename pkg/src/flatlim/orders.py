"""Monomial orders given by nonnegative integer matrices.

Every order here compares exponent vectors by the lexicographic order of
``M @ e`` for a full-rank matrix ``M`` with nonnegative entries. That keeps
comparison keys additive under monomial multiplication, which the packed
representation in :mod:`flatlim.groebner.engine` relies on.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "TermOrder",
    "Lex",
    "GrevLex",
    "WeightRefined",
    "Block",
    "LEX",
    "GREVLEX",
    "weight_degree",
    "compare",
    "order_from_name",
]


def weight_degree(exps, weights) -> int:
    """Return the weighted degree ``sum(w_i * e_i)`` of an exponent vector."""
    if len(exps) != len(weights):
        raise ValueError("weight vector length does not match number of variables")
    return sum(w * e for w, e in zip(weights, exps))


class TermOrder:
    """Base class; subclasses provide :meth:`matrix`."""

    name = "order"

    def matrix(self, nvars: int) -> tuple:
        raise NotImplementedError

    def key(self, exps) -> tuple:
        return _key_fn(self, len(exps))(exps)

    def key_function(self, nvars: int):
        return _key_fn(self, nvars)

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash((type(self).__name__, self._ident()))

    def _ident(self):
        return ()

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def _key_fn(order: TermOrder, nvars: int):
    rows = order.matrix(nvars)
    if rows == tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars)):
        return tuple
    if len(rows) == nvars and all(
        rows[r] == tuple(int(j < nvars - r) for j in range(nvars)) for r in range(nvars)
    ):
        # grevlex: running prefix sums
        def grevlex_key(e):
            out = []
            s = sum(e)
            for v in reversed(e):
                out.append(s)
                s -= v
            return tuple(out)

        return grevlex_key

    def key(e):
        return tuple(sum(m * x for m, x in zip(row, e)) for row in rows)

    return key


class Lex(TermOrder):
    name = "lex"

    def matrix(self, nvars):
        return tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars))


class GrevLex(TermOrder):
    """Graded reverse lexicographic order with variables ordered x > y > z > w."""

    name = "grevlex"

    def matrix(self, nvars):
        # total degree, then x+y+z, x+y, x: larger prefix sum means smaller
        # exponent in the trailing variables
        return tuple(tuple(int(j < nvars - r) for j in range(nvars)) for r in range(nvars))


class WeightRefined(TermOrder):
    """Compare weighted degrees first, then break ties with ``tie``."""

    def __init__(self, weights, tie: TermOrder | None = None):
        weights = tuple(int(w) for w in weights)
        if any(w < 0 for w in weights) or not any(weights):
            raise ValueError("weights must be nonnegative and not all zero")
        self.weights = weights
        self.tie = tie if tie is not None else GrevLex()

    @property
    def name(self):
        return f"weight({','.join(map(str, self.weights))};{self.tie.name})"

    def _ident(self):
        return (self.weights, self.tie)

    def matrix(self, nvars):
        if len(self.weights) != nvars:
            raise ValueError(f"weight vector has {len(self.weights)} entries for {nvars} variables")
        return (self.weights,) + self.tie.matrix(nvars)


class Block(TermOrder):
    """Block order: the first ``first`` variables dominate.

    ``inner`` holds the orders used inside the leading and trailing blocks.
    With a graded leading block this is an elimination order for those
    variables.
    """

    def __init__(self, first: int, inner=(None, None)):
        if first < 1:
            raise ValueError("leading block must be nonempty")
        self.first = first
        self.inner = tuple(o if o is not None else GrevLex() for o in inner)

    @property
    def name(self):
        return f"block({self.first};{self.inner[0].name},{self.inner[1].name})"

    def _ident(self):
        return (self.first, self.inner)

    def matrix(self, nvars):
        k = self.first
        if k >= nvars:
            raise ValueError("block order needs a nonempty trailing block")
        head = [tuple(r) + (0,) * (nvars - k) for r in self.inner[0].matrix(k)]
        tail = [(0,) * k + tuple(r) for r in self.inner[1].matrix(nvars - k)]
        return tuple(head + tail)


LEX = Lex()
GREVLEX = GrevLex()


def compare(m1, m2, order: TermOrder) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to, or larger than ``m2``."""
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def order_from_name(name: str, nvars: int = 4) -> TermOrder:
    """Parse ``lex``, ``grevlex`` or ``weight:a,b,c,d`` (grevlex tie-break)."""
    s = name.strip().lower()
    if s == "lex":
        return LEX
    if s == "grevlex":
        return GREVLEX
    if s.startswith("weight:"):
        return WeightRefined([int(t) for t in s[7:].split(",")])
    raise ValueError(f"unknown term order {name!r}")
