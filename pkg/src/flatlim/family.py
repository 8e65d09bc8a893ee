"""Lines on the quadric x(x+w) = yz and their weight-vector degeneration.

The lines ``L_a: x - a z = y - a(a z + w) = 0`` all lie on the smooth
quadric ``q = x(x+w) - yz``. For ``C = L_{a_1} + ... + L_{a_d}`` and the
weights ``(d, 2, 1, 1)`` the saturated initial ideal of ``I_C`` is compared
with the extremal multiple-line ideal ``<x^2, xy, y^d, xG - y^(d-1) F>``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .binary import binary_gcd, is_binary_form
from .groebner import (
    DEFAULT_STEP_CAP,
    Ideal,
    ideals_equal,
    initial_ideal,
    intersect,
    member,
    saturate_irrelevant,
)
from .hilbert import (
    HilbertCheckError,
    HilbertPolynomial,
    ci_hilbert_check,
    embedded_length,
    hilbert_polynomial,
    hilbert_series,
)
from .orders import GREVLEX, WeightRefined
from .poly import PolyRing, Polynomial, cofactor_minors, initial_form, product
from .scalar import QQ, format_rational

log = logging.getLogger(__name__)

__all__ = [
    "PointSet",
    "DuplicatePointsError",
    "PipelineError",
    "Verdict",
    "IdealRecord",
    "HilbertData",
    "CertificationReport",
    "ring_for",
    "weights_for",
    "quadric",
    "line_forms",
    "line_ideal",
    "distinct_sums",
    "random_points",
    "curve_ideal",
    "det_A",
    "vandermonde_G",
    "poly_P",
    "leading_B_factor",
    "forms_FG",
    "p_sign",
    "check_in_A",
    "check_P_closed_form",
    "P_closed_form",
    "check_P_divisible",
    "check_P_coefficient",
    "vandermonde_value",
    "catalan_c",
    "catalan_closed",
    "extremal_ideal",
    "certify",
]


class DuplicatePointsError(ValueError):
    pass


class PipelineError(RuntimeError):
    """A certification stage failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause


@lru_cache(maxsize=None)
def ring_for(fld) -> PolyRing:
    return PolyRing(fld)


def weights_for(d: int) -> tuple:
    return (d, 2, 1, 1)


def _sort_key(a):
    return a if isinstance(a, (int, Fraction)) else a.residue


def format_scalar(a) -> str:
    return format_rational(Fraction(a)) if isinstance(a, (int, Fraction)) else str(a.residue)


@dataclass(frozen=True)
class PointSet:
    """Parameters ``a_1, ..., a_d`` of the lines; pairwise distinct."""

    points: tuple
    field: object = QQ

    def __post_init__(self):
        conv = tuple(ring_for(self.field).coerce(a) for a in self.points)
        object.__setattr__(self, "points", conv)
        if len(conv) < 2:
            raise ValueError("need at least two points")
        if len(set(conv)) != len(conv):
            raise DuplicatePointsError(f"points are not pairwise distinct: {self.as_strings()}")

    @property
    def d(self) -> int:
        return len(self.points)

    @property
    def ring(self) -> PolyRing:
        return ring_for(self.field)

    def as_strings(self) -> list:
        return [format_scalar(a) for a in self.points]

    def __iter__(self):
        return iter(self.points)


def random_points(d: int, seed: int, bound: int = 10, fld=QQ, *, sums: Optional[str] = "distinct",
                  rational: bool = False, max_tries: int = 10000) -> PointSet:
    """Seeded random point set with entries in ``[-bound, bound]``.

    ``sums="distinct"`` rejects samples with a repeated pairwise sum,
    ``sums="collide"`` demands one, ``None`` accepts anything distinct.
    With ``rational`` true entries are ``n/m`` with ``1 <= m <= bound``.
    """
    rng = random.Random(seed)
    ring = ring_for(fld)
    for _ in range(max_tries):
        if rational:
            pts = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(d)]
        else:
            pts = [rng.randint(-bound, bound) for _ in range(d)]
        pts = [ring.coerce(a) for a in pts]
        if len(set(pts)) != d:
            continue
        ok = distinct_sums(pts)
        if sums == "distinct" and not ok or sums == "collide" and ok:
            continue
        return PointSet(tuple(pts), fld)
    raise RuntimeError(f"no suitable point set found after {max_tries} tries")


def quadric(ring: PolyRing) -> Polynomial:
    x, y, z, w = ring.gens
    return x * (x + w) - y * z


def line_forms(a, ring: PolyRing) -> tuple:
    """``(x - a z, y - a(a z + w))``."""
    x, y, z, w = ring.gens
    return x - z * a, y - (z * a + w) * a


def line_ideal(a, ring: PolyRing | None = None) -> Ideal:
    ring = ring or ring_for(QQ)
    a = ring.coerce(a)
    I = Ideal(line_forms(a, ring), ring)
    if not member(quadric(ring), I):
        raise AssertionError("quadric does not contain the line")
    return I


def distinct_sums(pts) -> bool:
    pts = list(pts)
    sums = [pts[i] + pts[j] for i in range(len(pts)) for j in range(i + 1, len(pts))]
    return len(set(sums)) == len(sums)


def curve_ideal(pts: PointSet) -> Ideal:
    """Ideal of the union of the lines, intersecting in ascending order of ``a``."""
    ring = pts.ring
    order = sorted(pts.points, key=_sort_key)
    I = line_ideal(order[0], ring)
    for a in order[1:]:
        I = intersect(I, line_ideal(a, ring))
    return I


def _m_matrix(pts: PointSet, first_col) -> list:
    ring = pts.ring
    rows = []
    for i, a in enumerate(pts.points):
        _, m = line_forms(a, ring)
        row = [first_col[i]]
        power = ring.one
        for _ in range(pts.d - 1):
            power = power * m
            row.append(power)
        rows.append(row)
    return rows


def det_A(pts: PointSet) -> tuple:
    """``(A, G, B)`` with ``A = det[l_i, m_i, ..., m_i^(d-1)] = x G - z B``.

    Expansion is along the first column, so ``G`` and ``B`` are the
    determinants with that column replaced by ones and by ``a_i``.
    """
    ring = pts.ring
    ls = [line_forms(a, ring)[0] for a in pts.points]
    minors = cofactor_minors(_m_matrix(pts, ls), 0)
    A = G = B = ring.zero
    for i, (a, l, M) in enumerate(zip(pts.points, ls, minors)):
        M = M if i % 2 == 0 else -M
        A = A + l * M
        G = G + M
        B = B + M.scale(a)
    return A, G, B


def vandermonde_G(pts: PointSet) -> Polynomial:
    """``prod_{i<j} (a_i - a_j)((a_i + a_j) z + w)``."""
    ring = pts.ring
    _, _, z, w = ring.gens
    a = pts.points
    factors = [
        (z * (a[i] + a[j]) + w).scale(a[i] - a[j])
        for i in range(len(a)) for j in range(i + 1, len(a))
    ]
    return product(factors, ring)


def poly_P(pts: PointSet) -> Polynomial:
    """Determinant of the rows ``(a_i, 1, p_i, ..., p_i^(d-2))``, ``p_i = a_i^2 z + a_i w``."""
    ring = pts.ring
    _, _, z, w = ring.gens
    rows = []
    for a in pts.points:
        p = z * (a * a) + w * a
        row = [ring.constant(a), ring.one]
        power = ring.one
        for _ in range(pts.d - 2):
            power = power * p
            row.append(power)
        rows.append(row)
    minors = cofactor_minors(rows, 0)
    P = ring.zero
    for i, (a, M) in enumerate(zip(pts.points, minors)):
        P = P + (M.scale(a) if i % 2 == 0 else -M.scale(a))
    return P


def p_sign(d: int) -> int:
    """Sign relating the ``y^(d-1)`` coefficient of ``in(B)`` to :func:`poly_P`.

    ``m_k - m_h = p_h - p_k``, so the two products of differences differ by
    ``(-1)^C(d-1, 2)``.
    """
    return -1 if comb(d - 1, 2) % 2 else 1


def leading_B_factor(B: Polynomial, d: int) -> Polynomial:
    """``in_w(B) / y^(d-1)`` as a binary form in ``z, w``."""
    ring = B.ring
    iB = initial_form(B, weights_for(d))
    iy = ring._index["y"]
    if any(m[iy] != d - 1 for m in iB._d):
        raise ValueError("initial form of B is not y^(d-1) times a binary form")
    return iB.divexact(ring.gen("y") ** (d - 1))


def forms_FG(pts: PointSet) -> tuple:
    """``(F, G)`` with ``in_w(A) = x G - y^(d-1) F``; here ``F = z * in_w(B)/y^(d-1)``."""
    _, G, B = det_A(pts)
    return pts.ring.gen("z") * leading_B_factor(B, pts.d), G


def check_in_A(pts: PointSet, A=None, G=None, B=None) -> bool:
    """``in_w(A) == x G - y^(d-1) F`` with ``F = z P``, up to the sign of :func:`p_sign`."""
    if A is None:
        A, G, B = det_A(pts)
    ring = pts.ring
    x, y, z, _ = ring.gens
    d = pts.d
    P = poly_P(pts)
    F = z * P.scale(p_sign(d))
    return initial_form(A, weights_for(d)) == x * G - y ** (d - 1) * F


def P_closed_form(pts: PointSet):
    """Product formula for ``P(1, -a_1 - a_2)``."""
    a = pts.points
    d = len(a)
    val = a[0] - a[1]
    for j in range(2, d):
        val *= (a[j] - a[0]) * (a[j] - a[1])
    for h in range(2, d):
        for k in range(h + 1, d):
            val *= (a[k] - a[h]) * (a[h] + a[k] - a[0] - a[1])
    return val


def check_P_closed_form(pts: PointSet, P: Polynomial | None = None) -> bool:
    P = poly_P(pts) if P is None else P
    a = pts.points
    value = P.evaluate({"z": 1, "w": -(a[0] + a[1])})
    return value == pts.ring.constant(P_closed_form(pts))


def check_P_divisible(pts: PointSet, P: Polynomial | None = None) -> bool:
    """Every term of ``P`` has ``z``-degree at least ``d - 2``."""
    P = poly_P(pts) if P is None else P
    iz = P.ring._index["z"]
    return all(m[iz] >= pts.d - 2 for m in P._d)


def vandermonde_value(a) -> object:
    """``prod_{i<j} (a_j - a_i)``."""
    v = 1
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            v = (a[j] - a[i]) * v
    return v


def check_P_coefficient(pts: PointSet, P: Polynomial | None = None) -> bool:
    """Coefficient of ``z^(d-2) w^C(d-2,2)`` in ``P`` equals ``-c_d V(a)``."""
    P = poly_P(pts) if P is None else P
    d = pts.d
    ring = P.ring
    e = [0] * ring.nvars
    e[ring._index["z"]] = d - 2
    e[ring._index["w"]] = comb(d - 2, 2)
    coeff = P._d.get(tuple(e), 0)
    return ring.constant(coeff) == ring.constant(vandermonde_value(pts.points) * (-catalan_c(d)))


def catalan_closed(d: int) -> int:
    """``C(2d-4, d-2) / (d-1)``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return comb(2 * d - 4, d - 2) // (d - 1)


@lru_cache(maxsize=None)
def catalan_c(d: int) -> int:
    """``c_2 = 1`` and ``c_d = sum_{k=1}^{d-2} (-1)^(k+1) C(d-1-k, k) c_(d-k)``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if d == 2:
        c = 1
    else:
        c = sum((-1) ** (k + 1) * comb(d - 1 - k, k) * catalan_c(d - k) for k in range(1, d - 1))
    if c != catalan_closed(d):
        raise AssertionError(f"recurrence gives {c} but the Catalan number is {catalan_closed(d)}")
    return c


def extremal_ideal(d: int, F: Polynomial, G: Polynomial) -> Ideal:
    """``<x^2, xy, y^d, xG - y^(d-1) F>`` for coprime binary forms with ``deg G - deg F = d - 2``."""
    if not (is_binary_form(F) and is_binary_form(G)):
        raise ValueError("F and G must be nonzero binary forms in z, w")
    if G.degree() - F.degree() != d - 2:
        raise ValueError(f"deg G - deg F = {G.degree() - F.degree()}, expected {d - 2}")
    g = binary_gcd(F, G)
    if not g.is_constant():
        raise ValueError(f"F and G have the common factor {g}")
    ring = F.ring
    x, y, _, _ = ring.gens
    return Ideal([x ** 2, x * y, y ** d, x * G - y ** (d - 1) * F], ring)


# -- certification ------------------------------------------------------------

@dataclass(frozen=True)
class IdealRecord:
    """Generators plus the reduced Groebner basis under ``order``."""

    generators: tuple
    groebner: tuple
    order: str = "grevlex"

    @classmethod
    def of(cls, I: Ideal) -> "IdealRecord":
        return cls(tuple(I.generators), tuple(I.groebner(GREVLEX).elements), GREVLEX.name)

    def ideal(self) -> Ideal:
        ring = self.generators[0].ring if self.generators else ring_for(QQ)
        return Ideal(self.generators, ring)


@dataclass(frozen=True)
class Verdict:
    kind: str  # "ExtremalLimit" | "EmbeddedPoints" | "Rejected"
    length: Optional[int] = None
    reason: Optional[str] = None

    def __str__(self):
        if self.kind == "EmbeddedPoints":
            return f"EmbeddedPoints({self.length})"
        if self.kind == "Rejected":
            return f"Rejected({self.reason})"
        return self.kind


@dataclass(frozen=True)
class HilbertData:
    curve: HilbertPolynomial
    initial: HilbertPolynomial
    saturated: HilbertPolynomial
    window: int
    hf_curve: tuple
    hf_initial: tuple


@dataclass(frozen=True)
class CertificationReport:
    d: int
    points: tuple
    field: str
    weights: tuple
    seed: Optional[int] = None
    bound: Optional[int] = None
    distinct_sums: Optional[bool] = None
    A: Optional[Polynomial] = None
    G: Optional[Polynomial] = None
    B: Optional[Polynomial] = None
    P: Optional[Polynomial] = None
    F: Optional[Polynomial] = None
    gcd_FG: Optional[Polynomial] = None
    curve_ideal: Optional[IdealRecord] = None
    initial_ideal: Optional[IdealRecord] = None
    saturated_ideal: Optional[IdealRecord] = None
    extremal_candidate: Optional[IdealRecord] = None
    hilbert: Optional[HilbertData] = None
    embedded_length: int = 0
    rao_check: bool = False
    rao_hilbert: tuple = ()
    rao_shift: Optional[int] = None
    checks: tuple = ()
    verdict: Verdict = field(default_factory=lambda: Verdict("Rejected", reason="not run"))
    notes: tuple = ()

    def check(self, name: str) -> bool:
        return dict(self.checks)[name]


NOTES = (
    "degenerate limits are certified a posteriori: the candidate curve must contain the saturated limit "
    "and differ from it by a finite length",
    "the failure of the method for the d-uple structure dL is not computed here",
    "the Rao module shift b = deg F - 1 is recorded, not verified",
)


def _flatness(IC: Ideal, IN: Ideal, window: int) -> tuple:
    hc = hilbert_series(IC)
    hn = hilbert_series(IN)
    return (
        tuple(hc.coefficient(n) for n in range(window + 1)),
        tuple(hn.coefficient(n) for n in range(window + 1)),
    )


def certify(pts, *, step_cap: int = DEFAULT_STEP_CAP, degree_bound: int = 200,
            seed: Optional[int] = None, bound: Optional[int] = None, fld=QQ) -> CertificationReport:
    """Run the full degeneration pipeline and return its report.

    ``pts`` is a :class:`PointSet` or a sequence of scalars. Duplicate points
    produce a ``Rejected`` verdict; a failing stage raises :class:`PipelineError`.
    """
    if not isinstance(pts, PointSet):
        raw = tuple(pts)
        try:
            pts = PointSet(raw, fld)
        except DuplicatePointsError as exc:
            ring = ring_for(fld)
            return CertificationReport(
                d=len(raw), points=tuple(format_scalar(ring.coerce(a)) for a in raw), field=fld.spec(),
                weights=weights_for(len(raw)), seed=seed, bound=bound,
                verdict=Verdict("Rejected", reason=str(exc)), notes=NOTES,
            )
    d = pts.d
    ring = pts.ring
    x, y, z, w = ring.gens
    om = weights_for(d)
    base = dict(d=d, points=tuple(pts.as_strings()), field=pts.field.spec(), weights=om, seed=seed, bound=bound)

    def stage(name, fn, *args):
        log.info("certify d=%d: %s", d, name)
        try:
            return fn(*args)
        except (PipelineError, KeyboardInterrupt):
            raise
        except Exception as exc:  # noqa: BLE001 - reported with the stage name
            raise PipelineError(name, exc) from exc

    checks = []
    sums_ok = distinct_sums(pts.points)
    IC = stage("curve_ideal", curve_ideal, pts)
    q = quadric(ring)
    checks.append(("quadric_in_curve_ideal", member(q, IC)))
    prod_m = product([line_forms(a, ring)[1] for a in pts.points], ring)
    checks.append(("product_m_in_curve_ideal", member(prod_m, IC)))

    A, G, B = stage("det_A", det_A, pts)
    P = stage("poly_P", poly_P, pts)
    F = z * stage("leading_B", leading_B_factor, B, d)
    checks.append(("A_in_curve_ideal", member(A, IC)))
    checks.append(("G_vandermonde", G == vandermonde_G(pts)))
    checks.append(("initial_A", initial_form(A, om) == x * G - y ** (d - 1) * F))
    checks.append(("F_is_zP", F == z * P.scale(p_sign(d))))
    checks.append(("P_closed_form", check_P_closed_form(pts, P)))
    checks.append(("P_divisible_by_z", check_P_divisible(pts, P)))
    checks.append(("P_catalan_coefficient", check_P_coefficient(pts, P)))
    checks.append(("degrees", G.degree() == comb(d, 2) and F.degree() == comb(d - 1, 2) + 1))
    g0 = stage("gcd", binary_gcd, F, G)

    IN = stage("initial_ideal", initial_ideal, IC, om)
    SAT = stage("saturate", saturate_irrelevant, IN, step_cap)
    checks.append(("x2_yd_in_initial", member(x ** 2, IN) and member(y ** d, IN)))

    def hilbert_stage():
        gb_deg = max(g.degree() for g in IC.groebner(WeightRefined(om, GREVLEX)).elements)
        window = gb_deg + 4
        hf_c, hf_i = _flatness(IC, IN, window)
        return HilbertData(
            hilbert_polynomial(IC), hilbert_polynomial(IN), hilbert_polynomial(SAT), window, hf_c, hf_i
        )

    HD = stage("hilbert", hilbert_stage)
    checks.append(("flat", HD.hf_curve == HD.hf_initial))
    checks.append(("hp_curve", HD.curve.dimension == 2 and HD.curve.degree == d and HD.curve.genus == 1 - d))

    coprime = g0.is_constant()
    if coprime:
        F1, G1 = F, G
    else:
        F1, G1 = F.divexact(g0), G.divexact(g0)
    E = stage("extremal_candidate", extremal_ideal, d, F1, G1)
    try:
        rao = tuple(ci_hilbert_check(F1, G1))
        rao_ok = True
    except HilbertCheckError:
        rao, rao_ok = (), False

    report = dict(
        base, distinct_sums=sums_ok, A=A, G=G, B=B, P=P, F=F, gcd_FG=g0,
        curve_ideal=IdealRecord.of(IC), initial_ideal=IdealRecord.of(IN), saturated_ideal=IdealRecord.of(SAT),
        extremal_candidate=IdealRecord.of(E), hilbert=HD, rao_check=rao_ok, rao_hilbert=rao,
        rao_shift=F1.degree() - 1, notes=NOTES,
    )

    basic = all(ok for _, ok in checks)
    if coprime:
        equal = ideals_equal(SAT, E)
        checks.append(("saturation_is_extremal", equal))
        hp_ok = HD.saturated == HD.curve
        checks.append(("hp_saturated", hp_ok))
        if equal and hp_ok and sums_ok and rao_ok and basic:
            verdict = Verdict("ExtremalLimit")
        else:
            failed = [n for n, ok in checks if not ok]
            if not sums_ok:
                failed.append("distinct_sums")
            verdict = Verdict("Rejected", reason="failed checks: " + ",".join(failed))
        return CertificationReport(**report, embedded_length=0, checks=tuple(checks), verdict=verdict)

    contained = all(member(g, E) for g in SAT.generators)
    checks.append(("candidate_contains_saturation", contained))
    failed = [n for n, ok in checks if not ok]
    try:
        length = stage("embedded_length", embedded_length, SAT, E, degree_bound)
    except PipelineError as exc:
        length = None
        failed.append(str(exc))
    if not failed and length > 0:
        verdict = Verdict("EmbeddedPoints", length=length)
    else:
        if not failed:
            failed.append(f"length {length}")
        verdict = Verdict("Rejected", reason="degenerate limit not certified: " + ",".join(failed))
    return CertificationReport(**report, embedded_length=length or 0, checks=tuple(checks), verdict=verdict)
