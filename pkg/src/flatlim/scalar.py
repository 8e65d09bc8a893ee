"""Exact scalars: rationals and prime fields behind one small field interface.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Prime field elements are :class:`PrimeFieldElement` values
created through a :class:`PrimeField`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "RationalField",
    "PrimeField",
    "PrimeFieldElement",
    "QQ",
    "FieldMismatchError",
    "int_gcd",
    "is_prime",
    "parse_rational",
    "format_rational",
    "field_from_spec",
]


class FieldMismatchError(TypeError):
    """Raised when operands from two different fields are combined."""


def int_gcd(a: int, b: int) -> int:
    """Nonnegative gcd of two integers, with ``int_gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(s: str) -> Fraction:
    """Parse ``"n"`` or ``"n/m"`` into a reduced :class:`Fraction`."""
    m = _RATIONAL_RE.match(s)
    if m is None:
        raise ValueError(f"not a rational number: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RationalField:
    """The field Q."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, PrimeFieldElement):
            raise FieldMismatchError("cannot convert a prime field element to QQ")
        if isinstance(value, str):
            return parse_rational(value)
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def format(self, c: Fraction) -> str:
        return format_rational(c)

    def spec(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """The field F_p; ``p`` is checked for primality on construction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def __call__(self, value) -> "PrimeFieldElement":
        if isinstance(value, PrimeFieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.name} element used in {self.name}")
            return value
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return PrimeFieldElement(value.numerator * pow(value.denominator, -1, self.p), self)
        return PrimeFieldElement(int(value), self)

    @property
    def zero(self) -> "PrimeFieldElement":
        return PrimeFieldElement(0, self)

    @property
    def one(self) -> "PrimeFieldElement":
        return PrimeFieldElement(1, self)

    def format(self, c: "PrimeFieldElement") -> str:
        return str(c.residue)

    def spec(self) -> str:
        return f"p={self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class PrimeFieldElement:
    """Immutable residue class modulo a prime."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: PrimeField):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "residue", residue % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.name} and {other.field.name} operands")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return self.field(other).residue
        return NotImplemented

    def _make(self, r: int) -> "PrimeFieldElement":
        return PrimeFieldElement(r, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.residue * o)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"division by zero in {self.field.name}")
        return self._make(pow(self.residue, -1, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._make(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(o) * self.inverse()

    def __neg__(self):
        return self._make(-self.residue)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self._make(pow(self.residue, n, self.field.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.field == other.field and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.field.p))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.field.p})"

    def __str__(self):
        return str(self.residue)


def field_from_spec(spec: str):
    """Parse ``"q"`` or ``"p=<prime>"`` into a field object."""
    s = spec.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("p="):
        return PrimeField(int(s[2:]))
    raise ValueError(f"unknown field {spec!r}; expected 'q' or 'p=<prime>'")
