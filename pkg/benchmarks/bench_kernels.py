"""Compare the compiled and pure-Python reduction kernels.

Times the weight-order Groebner basis of the curve ideal for a few seeded
point sets with each backend and checks that the bases agree.

    python3 benchmarks/bench_kernels.py --d 5 6 7 --repeat 3
"""

import argparse
import statistics
import time

from flatlim.family import curve_ideal, random_points, weights_for
from flatlim.groebner import Ideal, _pykernels, kernels
from flatlim.orders import GREVLEX, WeightRefined
from flatlim.scalar import field_from_spec

try:
    from flatlim.groebner import _ckernels
except ImportError:
    _ckernels = None

NAMES = ("combine", "find_divisor", "reduce_poly")


def use(impl):
    for name in NAMES:
        setattr(kernels, name, getattr(impl, name))


def time_basis(IC, order, repeat):
    times = []
    basis = None
    for _ in range(repeat):
        fresh = Ideal(list(IC.generators), IC.ring)
        t0 = time.perf_counter()
        basis = fresh.groebner(order).elements
        times.append(time.perf_counter() - t0)
    return statistics.median(times), basis


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--bound", type=int, default=40)
    ap.add_argument("--field", default="q")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return 1
    fld = field_from_spec(args.field)
    saved = {name: getattr(kernels, name) for name in NAMES}
    print(f"{'d':>3} {'field':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    try:
        for d in args.d:
            pts = random_points(d, args.seed, args.bound, fld)
            IC = curve_ideal(pts)
            order = WeightRefined(weights_for(d), GREVLEX)
            use(_pykernels)
            tp, bp = time_basis(IC, order, args.repeat)
            use(_ckernels)
            tc, bc = time_basis(IC, order, args.repeat)
            if bp != bc:
                raise SystemExit(f"backends disagree at d={d}")
            print(f"{d:>3} {fld.spec():>8} {tp:>10.3f} {tc:>10.3f} {tp / tc:>7.2f}x")
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
