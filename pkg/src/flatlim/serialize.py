"""JSON form of certification reports (schema version "1")."""

from __future__ import annotations

import json

from .family import CertificationReport, HilbertData, IdealRecord, Verdict, ring_for
from .hilbert import HilbertPolynomial
from .scalar import field_from_spec

SCHEMA = "1"

_POLYS = ("A", "G", "B", "P", "F", "gcd_FG")
_IDEALS = ("curve_ideal", "initial_ideal", "saturated_ideal", "extremal_candidate")


def _poly(f):
    return None if f is None else str(f)


def _ideal(rec: IdealRecord | None):
    if rec is None:
        return None
    return {
        "generators": [str(g) for g in rec.generators],
        "groebner": [str(g) for g in rec.groebner],
        "order": rec.order,
    }


def _hp(hp: HilbertPolynomial) -> dict:
    return hp.to_dict()


def report_to_dict(r: CertificationReport) -> dict:
    hd = None
    if r.hilbert is not None:
        h = r.hilbert
        hd = {
            "curve": _hp(h.curve),
            "initial": _hp(h.initial),
            "saturated": _hp(h.saturated),
            "window": h.window,
            "hf_curve": list(h.hf_curve),
            "hf_initial": list(h.hf_initial),
        }
    return {
        "schema": SCHEMA,
        "instance": {
            "d": r.d,
            "points": list(r.points),
            "field": r.field,
            "weights": list(r.weights),
            "seed": r.seed,
            "bound": r.bound,
        },
        "distinct_sums": r.distinct_sums,
        "polynomials": {k: _poly(getattr(r, k)) for k in _POLYS},
        "ideals": {k: _ideal(getattr(r, k)) for k in _IDEALS},
        "hilbert": hd,
        "embedded_length": r.embedded_length,
        "rao": {"check": r.rao_check, "hilbert": list(r.rao_hilbert), "shift": r.rao_shift},
        "checks": {k: v for k, v in r.checks},
        "verdict": {"kind": r.verdict.kind, "length": r.verdict.length, "reason": r.verdict.reason},
        "notes": list(r.notes),
    }


def report_from_dict(data: dict) -> CertificationReport:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    inst = data["instance"]
    ring = ring_for(field_from_spec(inst["field"]))

    def poly(s):
        return None if s is None else ring.parse(s)

    def ideal(d):
        if d is None:
            return None
        return IdealRecord(
            tuple(ring.parse(s) for s in d["generators"]),
            tuple(ring.parse(s) for s in d["groebner"]),
            d["order"],
        )

    def hp(d):
        return HilbertPolynomial(tuple(d["binomial"]), d["dimension"])

    h = data["hilbert"]
    hd = None
    if h is not None:
        hd = HilbertData(
            hp(h["curve"]), hp(h["initial"]), hp(h["saturated"]),
            h["window"], tuple(h["hf_curve"]), tuple(h["hf_initial"]),
        )
    v = data["verdict"]
    return CertificationReport(
        d=inst["d"],
        points=tuple(inst["points"]),
        field=inst["field"],
        weights=tuple(inst["weights"]),
        seed=inst["seed"],
        bound=inst["bound"],
        distinct_sums=data["distinct_sums"],
        **{k: poly(data["polynomials"][k]) for k in _POLYS},
        **{k: ideal(data["ideals"][k]) for k in _IDEALS},
        hilbert=hd,
        embedded_length=data["embedded_length"],
        rao_check=data["rao"]["check"],
        rao_hilbert=tuple(data["rao"]["hilbert"]),
        rao_shift=data["rao"]["shift"],
        checks=tuple(data["checks"].items()),
        verdict=Verdict(v["kind"], v["length"], v["reason"]),
        notes=tuple(data["notes"]),
    )


def dumps(r: CertificationReport) -> str:
    return json.dumps(report_to_dict(r), indent=2)


def loads(s: str) -> CertificationReport:
    return report_from_dict(json.loads(s))
