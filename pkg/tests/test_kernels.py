"""The compiled and pure-Python reduction kernels must agree bit for bit."""

import random

import pytest

from flatlim.groebner import Ideal, kernels
from flatlim.groebner import _pykernels
from flatlim.groebner import engine
from flatlim.groebner.ideal import _packing
from flatlim.family import curve_ideal, random_points, weights_for
from flatlim.orders import GREVLEX, WeightRefined
from flatlim.poly import PolyRing, R
from flatlim.scalar import PrimeField

from oracles import random_homogeneous

ck = pytest.importorskip("flatlim.groebner._ckernels")


def use(monkeypatch, impl):
    for name in ("combine", "find_divisor", "reduce_poly"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))


def test_backend_names():
    assert ck.BACKEND == "cython"
    assert _pykernels.BACKEND == "python"
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("p", [0, 32003])
@pytest.mark.parametrize("seed", range(6))
def test_reduce_poly_parity(seed, p):
    rng = random.Random(seed)
    ring = R if p == 0 else PolyRing(PrimeField(p))
    pk = _packing(4, GREVLEX)
    gens = [random_homogeneous(rng, ring, rng.randint(1, 3), 3) for _ in range(3)]
    basis = [engine.normalize(engine.to_engine(g, pk)[0], p) for g in Ideal(gens, ring).groebner().elements]
    lead = [b.e[0] for b in basis]
    f = engine.to_engine(random_homogeneous(rng, ring, 4, 6), pk)[0]
    args = (f.k, f.e, f.c, [b.triple() for b in basis], lead, pk.guard, p)
    for full in (False, True):
        a = _pykernels.reduce_poly(*args, full)
        b = ck.reduce_poly(*args, full)
        assert tuple(map(list, a[:3])) == tuple(map(list, b[:3]))
        assert a[3:] == b[3:]


@pytest.mark.parametrize("fld", [None, PrimeField(32003)])
def test_pipeline_bases_agree(monkeypatch, fld):
    from flatlim.scalar import QQ

    pts = random_points(5, 3, bound=20, fld=fld or QQ)
    IC = curve_ideal(pts)
    order = WeightRefined(weights_for(5), GREVLEX)
    results = []
    for impl in (_pykernels, ck):
        use(monkeypatch, impl)
        results.append(Ideal(list(IC.generators), IC.ring).groebner(order).elements)
    assert results[0] == results[1]


def test_env_forces_python_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, FLATLIM_KERNELS="python")
    out = subprocess.run(
        [sys.executable, "-c", "from flatlim.groebner import BACKEND; print(BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
