"""Command-line interface.

Exit codes for ``certify``: 0 extremal limit, 2 embedded points, 3 rejected,
1 internal error, 64 usage error. Set ``FLATLIM_LOG`` (``info``, ``debug``)
for progress logging on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import serialize
from .family import (
    PipelineError,
    certify,
    catalan_c,
    catalan_closed,
    det_A,
    leading_B_factor,
    ring_for,
    PointSet,
    random_points,
    curve_ideal,
    weights_for,
)
from .groebner import (
    BACKEND,
    DEFAULT_STEP_CAP,
    Ideal,
    buchberger,
    ideals_equal,
    initial_ideal,
    member,
    saturate_irrelevant,
)
from .hilbert import HilbertDimensionError, embedded_length, hilbert_polynomial, hilbert_series
from .orders import order_from_name
from .poly import ParseError, initial_form
from .scalar import QQ, field_from_spec

EXIT_OK, EXIT_ERROR, EXIT_EMBEDDED, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2, 3, 64

VERDICT_EXIT = {"ExtremalLimit": EXIT_OK, "EmbeddedPoints": EXIT_EMBEDDED, "Rejected": EXIT_REJECTED}

log = logging.getLogger("flatlim")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _setup_logging():
    level = os.environ.get("FLATLIM_LOG")
    if level:
        logging.basicConfig(
            level=getattr(logging, level.upper(), logging.INFO),
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )


def _seeds(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _field(spec: str):
    try:
        return field_from_spec(spec)
    except ValueError as exc:
        raise UsageError(f"bad --field: {exc}") from exc


def _char_warning(fld, out=sys.stderr):
    if fld.characteristic in (2, 3):
        print(
            f"warning: characteristic {fld.characteristic}: the d=4 example with points 0,1,2,3 "
            "requires characteristic != 2, 3",
            file=out,
        )


def _format_text(r) -> str:
    lines = [f"certify d={r.d} points=[{', '.join(r.points)}] field={r.field} weights={tuple(r.weights)}"]
    if r.seed is not None:
        lines[0] += f" seed={r.seed} bound={r.bound}"
    if r.A is None:
        lines.append(f"verdict: {r.verdict}")
        return "\n".join(lines) + "\n"
    lines += [
        f"distinct sums: {'yes' if r.distinct_sums else 'no'}",
        f"deg A = {r.A.degree()}, terms = {len(r.A)}",
        f"G = {r.G}",
        f"F = {r.F}",
        f"P = {r.P}",
        f"gcd(F, G) = {r.gcd_FG}",
        "initial ideal (reduced grevlex basis):",
        *[f"  {g}" for g in r.initial_ideal.groebner],
        "saturated initial ideal (reduced grevlex basis):",
        *[f"  {g}" for g in r.saturated_ideal.groebner],
        "extremal candidate:",
        *[f"  {g}" for g in r.extremal_candidate.generators],
        f"Hilbert polynomial: curve {r.hilbert.curve}, initial {r.hilbert.initial}, "
        f"saturated {r.hilbert.saturated}",
        f"Hilbert function 0..{r.hilbert.window}: {list(r.hilbert.hf_curve)}",
        f"Rao module K[z,w]/(F,G): {list(r.rao_hilbert)} (check {'ok' if r.rao_check else 'FAILED'}, shift {r.rao_shift})",
        f"embedded length: {r.embedded_length}",
        "checks: " + ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in r.checks),
        f"verdict: {r.verdict}",
    ]
    return "\n".join(lines) + "\n"


def _run_one(job):
    """Certify one instance; return (exit code, rendered output, error text).

    Rendering happens in the worker so each run's output is emitted as one block.
    """
    kind, payload, fld_spec, step_cap, degree_bound, bound, as_json = job
    fld = field_from_spec(fld_spec)
    try:
        if kind == "random":
            d, seed = payload
            pts = random_points(d, seed, bound, fld)
            r = certify(pts, step_cap=step_cap, degree_bound=degree_bound, seed=seed, bound=bound)
        else:
            r = certify(payload, step_cap=step_cap, degree_bound=degree_bound, fld=fld)
    except (PipelineError, RuntimeError, OverflowError) as exc:
        return EXIT_ERROR, None, str(exc)
    out = serialize.report_to_dict(r) if as_json else _format_text(r)
    return VERDICT_EXIT[r.verdict.kind], out, None


def cmd_certify(args) -> int:
    fld = _field(args.field)
    _char_warning(fld)
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    if args.jobs < 1 or args.step_cap < 1 or args.degree_bound < 1:
        raise UsageError("--jobs, --step-cap and --degree-bound must be positive")
    if (args.points is None) == (not args.random):
        raise UsageError("give exactly one of --points and --random")
    common = (fld.spec(), args.step_cap, args.degree_bound)
    if args.points is not None:
        ring = ring_for(fld)
        try:
            pts = [ring.coerce(s.strip()) for s in args.points.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --points: {exc}") from exc
        if len(pts) != args.d:
            raise UsageError(f"--points has {len(pts)} entries but --d is {args.d}")
        jobs = [("points", tuple(pts), *common, None, args.json)]
    else:
        try:
            seeds = _seeds(args.seed)
        except ValueError as exc:
            raise UsageError(f"bad --seed: {exc}") from exc
        if not seeds:
            raise UsageError("--seed is empty")
        jobs = [("random", (args.d, s), *common, args.bound, args.json) for s in seeds]

    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]

    codes = [code for code, _, _ in results]
    docs = []
    for code, out, err in results:
        if err is not None:
            print(f"error: {err}", file=sys.stderr)
        elif args.json:
            docs.append(out)
        else:
            sys.stdout.write(out)
    if args.json:
        payload = docs[0] if len(jobs) == 1 and docs else docs
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    for code in (EXIT_ERROR, EXIT_REJECTED, EXIT_EMBEDDED):
        if code in codes:
            return code
    return EXIT_OK


EXAMPLE_POINTS = (0, 1, 2, 3)
EXAMPLE_G1 = "(z+w)*(2*z+w)*(3*z+w)*(4*z+w)*(5*z+w)"
EXAMPLE_F1 = "2*z^3"
EXAMPLE_G = "12*(z+w)*(2*z+w)*(3*z+w)^2*(4*z+w)*(5*z+w)"
EXAMPLE_B = (
    "12*y*(3*z+w)*(2*y^2*z^2 - 30*y*z^3 + 148*z^4 - 15*y*z^2*w + 195*z^3*w"
    " - y*z*w^2 + 85*z^2*w^2 + 15*z*w^3 + w^4)"
)
EXAMPLE_INITIAL = (
    "x^2", "6*x*y*z^2 + 2*x*y*z*w", "y^4", "x*y^2*w", "6*x*y^2*z",
    "6*x*y*z*w^2 + 2*x*y*w^3", f"x*{EXAMPLE_G1} - y^3*{EXAMPLE_F1}", "6*x*y^3",
)
EXAMPLE_SATURATION = ("x^2", "x*y*(3*z+w)", "x*y^2", "y^4", f"x*{EXAMPLE_G1} - y^3*{EXAMPLE_F1}")


def _supported_at(small: Ideal, big: Ideal, point_forms) -> bool:
    """True when small is strictly inside big and big/small is killed by the given forms."""
    if not all(member(g, big) for g in small.generators) or ideals_equal(small, big):
        return False
    return all(member(h * g, small) for g in big.generators for h in point_forms)


def worked_example() -> dict:
    """Recompute the d = 4 example with points 0, 1, 2, 3 and compare with its printed data."""
    ring = ring_for(QQ)
    x, y, z, w = ring.gens
    pts = PointSet(EXAMPLE_POINTS)
    om = weights_for(4)
    A, G, B = det_A(pts)
    G_p, B_p = ring.parse(EXAMPLE_G), ring.parse(EXAMPLE_B)
    G1, F1 = ring.parse(EXAMPLE_G1), ring.parse(EXAMPLE_F1)
    F = z * leading_B_factor(B, 4)
    inA = initial_form(A, om)
    IC = curve_ideal(pts)
    IN = initial_ideal(IC, om)
    SAT = saturate_irrelevant(IN)
    printed_in = Ideal([ring.parse(s) for s in EXAMPLE_INITIAL], ring)
    printed_sat = Ideal([ring.parse(s) for s in EXAMPLE_SATURATION], ring)
    E = Ideal([x ** 2, x * y, y ** 4, x * G1 - y ** 3 * F1], ring)
    point = ring.parse("3*z + w")
    return {
        "points": list(EXAMPLE_POINTS),
        "weights": list(om),
        "A": str(A),
        "G": str(G),
        "B": str(B),
        "F": str(F),
        "initial_form_A": str(inA),
        "initial_ideal_groebner": [str(g) for g in IN.groebner().elements],
        "saturation_groebner": [str(g) for g in SAT.groebner().elements],
        "extremal_part_hilbert_polynomial": str(hilbert_polynomial(E)),
        "saturation_hilbert_polynomial": str(hilbert_polynomial(SAT)),
        "embedded_point": str(point),
        "embedded_length": embedded_length(SAT, E),
        "checks": {
            "A_matches_printed": A == x * G_p - z * B_p,
            "G_matches_printed": G == G_p,
            "B_matches_printed": B == B_p,
            "F_matches_printed": F == ring.parse("24*z^3*(3*z+w)"),
            "initial_A_factorization": inA == 12 * point * (x * G1 - y ** 3 * F1),
            "initial_ideal_equals_printed": ideals_equal(IN, printed_in),
            "saturation_equals_printed": ideals_equal(SAT, printed_sat),
            "embedded_point_on_L": _supported_at(SAT, E, [x, y, point]),
            "extremal_genus_minus_2": hilbert_polynomial(E).genus == -2,
        },
    }


def cmd_example(args) -> int:
    data = worked_example()
    if args.json:
        text = json.dumps(data, indent=2) + "\n"
    else:
        lines = [f"d = 4, points {data['points']}, weights {tuple(data['weights'])}"]
        lines.append(f"A = x*G - z*B with G = {data['G']}")
        lines.append(f"F = {data['F']}")
        lines.append(f"in_w(A) = {data['initial_form_A']}")
        lines.append("in_w(I_C), reduced grevlex basis:")
        lines += [f"  {g}" for g in data["initial_ideal_groebner"]]
        lines.append("saturation, reduced grevlex basis:")
        lines += [f"  {g}" for g in data["saturation_groebner"]]
        lines.append(
            f"Hilbert polynomials: saturation {data['saturation_hilbert_polynomial']}, "
            f"extremal part {data['extremal_part_hilbert_polynomial']}"
        )
        lines.append(f"embedded point {data['embedded_point']} = 0 on L, length {data['embedded_length']}")
        lines += [f"{k}: {'ok' if v else 'FAILED'}" for k, v in data["checks"].items()]
        text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.golden:
        with open(args.golden, encoding="utf-8") as fh:
            golden = json.load(fh)
        if golden != data:
            print("golden mismatch", file=sys.stderr)
            return EXIT_ERROR
    return EXIT_OK if all(data["checks"].values()) else EXIT_ERROR


def cmd_catalan(args) -> int:
    if args.max_d < 2:
        raise UsageError("--max-d must be at least 2")
    print("d\tc_d\tCatalan(d-2)")
    for d in range(2, args.max_d + 1):
        print(f"{d}\t{catalan_c(d)}\t{catalan_closed(d)}")
    return EXIT_OK


def _split_polys(text: str) -> list:
    return [s for s in (p.strip() for p in text.replace("\n", ",").split(",")) if s]


def _parse_ideal(text: str, ring) -> Ideal:
    try:
        return Ideal([ring.parse(s) for s in _split_polys(text)], ring)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def cmd_gb(args) -> int:
    ring = ring_for(_field(args.field))
    order = order_from_name(args.order)
    for i, path in enumerate(args.files):
        with open(path, encoding="utf-8") as fh:
            I = _parse_ideal(fh.read(), ring)
        if len(args.files) > 1:
            print(f"# {path}")
        for g in buchberger(I.generators, order, ring).elements:
            print(g)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    ring = ring_for(_field(args.field))
    if args.ideal is not None:
        I = _parse_ideal(args.ideal, ring)
    else:
        with open(args.file, encoding="utf-8") as fh:
            I = _parse_ideal(fh.read(), ring)
    if not I.is_homogeneous():
        raise UsageError("ideal must be homogeneous")
    H = hilbert_series(I)
    print(f"numerator: {list(H.numerator)} / (1-t)^{H.nvars}")
    print(f"Hilbert function 0..{args.terms - 1}: {[H.coefficient(n) for n in range(args.terms)]}")
    try:
        hp = hilbert_polynomial(I)
    except HilbertDimensionError as exc:
        print(f"Hilbert polynomial: unsupported ({exc})")
        return EXIT_OK
    line = f"HP = {hp}"
    if hp.dimension == 2:
        line += f"  (degree {hp.degree}, genus {hp.genus})"
    print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flatlim", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"flatlim 0.1.0 ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="certify the flat limit for one or more point sets")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--points", help="comma-separated a_1,...,a_d (integers or a/b)")
    c.add_argument("--random", action="store_true", help="draw points with distinct pairwise sums")
    c.add_argument("--seed", default="0", help="seed, list 1,2,3 or range 1-5 (with --random)")
    c.add_argument("--bound", type=int, default=10)
    c.add_argument("--field", default="q", help="q or p=<prime>")
    c.add_argument("--json", action="store_true")
    c.add_argument("--degree-bound", type=int, default=200)
    c.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser(
        "example", aliases=["paper-example"], help="reproduce the d=4 example with points 0,1,2,3"
    )
    e.add_argument("--json", action="store_true")
    e.add_argument("--golden", help="compare the JSON output with this golden file")
    e.set_defaults(func=cmd_example)

    k = sub.add_parser("catalan", help="table of the constants c_d")
    k.add_argument("--max-d", type=int, default=10)
    k.set_defaults(func=cmd_catalan)

    g = sub.add_parser("gb", help="reduced Groebner basis of polynomials listed in files")
    g.add_argument("--order", default="grevlex", help="lex, grevlex or weight:a,b,c,d")
    g.add_argument("--field", default="q")
    g.add_argument("files", nargs="+")
    g.set_defaults(func=cmd_gb)

    h = sub.add_parser("hilbert", help="Hilbert series and polynomial of a homogeneous ideal")
    src = h.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", help='comma-separated generators, e.g. "x,y"')
    src.add_argument("--file")
    h.add_argument("--field", default="q")
    h.add_argument("--terms", type=int, default=10)
    h.set_defaults(func=cmd_hilbert)
    return p


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"flatlim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"flatlim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
