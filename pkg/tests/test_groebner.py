import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from flatlim.groebner import (
    Ideal,
    SaturationCapExceeded,
    buchberger,
    colon,
    eliminate,
    ideals_equal,
    initial_ideal,
    intersect,
    member,
    normal_form,
    saturate,
    saturate_irrelevant,
    saturation_chain,
    verify_groebner,
)
from flatlim.hilbert import hilbert_polynomial
from flatlim.orders import GREVLEX, LEX, WeightRefined
from flatlim.poly import PolyRing, R
from flatlim.scalar import PrimeField

from oracles import VARS, from_sympy, random_homogeneous, random_instance, span_member, to_sympy

x, y, z, w = R.gens
q = x * (x + w) - y * z
L0 = Ideal([x, y])
L1 = Ideal([x - z, y - z - w])
W4 = WeightRefined((4, 2, 1, 1))


def gb_set(I, order=GREVLEX):
    return set(I.groebner(order).elements)


def test_normal_form_examples():
    assert normal_form(x * y, Ideal([x]).groebner()).is_zero()
    assert normal_form(q, intersect(L0, L1).groebner()).is_zero()
    assert normal_form(z, Ideal([x, y]).groebner()) == z


def test_buchberger_examples():
    assert buchberger([x, x]).elements == (x,)
    assert set(buchberger([y - x, x], LEX).elements) == {x, y}


def test_extremal_generators_are_a_basis():
    F1, G1 = R.parse("2*z^3"), R.parse("(z+w)*(2*z+w)*(3*z+w)*(4*z+w)*(5*z+w)")
    gens = [x ** 2, x * y, y ** 4, x * G1 - y ** 3 * F1]
    gb = buchberger(gens, W4)
    assert len(gb) == 4
    assert set(gb.leading_monomials()) == {(2, 0, 0, 0), (1, 1, 0, 0), (0, 4, 0, 0), (0, 3, 3, 0)} or verify_groebner(gb)
    assert ideals_equal(Ideal(gens), Ideal(list(gb.elements)))


def test_member_examples():
    F, G = R.parse("z^2"), R.parse("z^3 - w^3")
    E = Ideal([x ** 2, x * y, y ** 3, x * G - y ** 2 * F])
    assert not member(x, E)
    assert member(q, intersect(L0, L1))


def test_eliminate_examples():
    S = PolyRing(variables=("t", "x", "y", "z", "w"))
    t, sx = S.gen("t"), S.gen("x")
    assert eliminate(Ideal([t - sx], S), "t").is_zero()
    E = eliminate(Ideal([t, sx], S), "t")
    assert [str(g) for g in E.generators] == ["x"]


def test_intersect_examples():
    assert ideals_equal(intersect(Ideal([x]), Ideal([y])), Ideal([x * y]))
    C = intersect(L0, L1)
    assert member(q, C)
    assert str(hilbert_polynomial(C)) == "2n + 2"
    I = Ideal([x ** 2, y * z - w ** 2])
    assert ideals_equal(intersect(I, I), I)


def test_colon_examples():
    assert ideals_equal(colon(Ideal([x ** 2, x * y]), x), Ideal([x, y]))
    assert ideals_equal(colon(Ideal([x * y]), y), Ideal([x]))


def test_saturate_examples():
    assert ideals_equal(saturate(Ideal([x * z]), z), Ideal([x]))
    assert saturate(Ideal([x]), x).is_unit()
    chain = saturation_chain(Ideal([x ** 2, x * y, y ** 2, y * z ** 3]), z)
    assert ideals_equal(chain[-1], Ideal([x ** 2, y]))
    assert len(chain) == 4


def test_saturation_cap():
    with pytest.raises(SaturationCapExceeded):
        saturate(Ideal([x ** 2, x * y, y ** 2, y * z ** 3]), z, step_cap=2)


def test_saturate_irrelevant_examples():
    assert ideals_equal(saturate_irrelevant(Ideal([x ** 2, x * y, x * z, x * w])), Ideal([x]))
    assert ideals_equal(saturate_irrelevant(Ideal([x, y])), Ideal([x, y]))


def test_initial_ideal_examples():
    assert ideals_equal(initial_ideal(Ideal([q]), (4, 2, 1, 1)), Ideal([x ** 2]))
    ms = [y - a * (a * z + w) for a in (1, 2, 5)]
    assert ideals_equal(initial_ideal(Ideal([ms[0] * ms[1] * ms[2]]), (3, 2, 1, 1)), Ideal([y ** 3]))


def test_ideals_equal_examples():
    assert ideals_equal(Ideal([x, y]), Ideal([y, x + y]))
    assert not ideals_equal(Ideal([x]), Ideal([x ** 2]))
    assert Ideal([x, y]) == Ideal([y, x + y])


def test_contains_and_unit():
    assert x * z in Ideal([x])
    assert Ideal([x + 1, x]).is_unit()


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_reduced_basis_matches_sympy(seed, order, name):
    rng = random.Random(seed)
    gens = [random_homogeneous(rng, R, rng.randint(1, 3), 3, 4) for _ in range(3)]
    ours = set(buchberger(gens, order).elements)
    theirs = sympy.groebner([to_sympy(g) for g in gens], *VARS, order=name, domain=sympy.QQ)
    assert ours == {from_sympy(g, R) for g in theirs.exprs}


@pytest.mark.parametrize("seed", range(8))
def test_division_invariants(seed):
    rng = random.Random(100 + seed)
    gens = [random_homogeneous(rng, R, rng.randint(1, 3), 3) for _ in range(3)]
    B = Ideal(gens).groebner()
    assert verify_groebner(B)
    lead = B.leading_monomials()
    for _ in range(5):
        f = random_homogeneous(rng, R, rng.randint(1, 4), 5)
        r = normal_form(f, B)
        assert span_member(f - r, gens)
        for m in r.monomials():
            assert not any(all(a <= b for a, b in zip(l, m)) for l in lead)


def test_membership_matches_span_oracle():
    hits = 0
    for seed in range(200):
        gens, f = random_instance(seed)
        got = member(f, Ideal(gens))
        assert got == span_member(f, gens), seed
        hits += got
    assert 40 < hits < 160


def test_prime_field_basis():
    Rp = PolyRing(PrimeField(32003))
    X, Y, Z, W = Rp.gens
    I = Ideal([X * X + 3 * Y * Z, Y * Y - W * W, X * Y * Z], Rp)
    gb = I.groebner()
    assert verify_groebner(gb)
    assert all(g.leading_coefficient() == Rp.field.one for g in gb.elements)
    Iq = Ideal([x * x + 3 * y * z, y * y - w * w, x * y * z])
    assert [str(g) for g in gb.elements] == [str(Rp.convert(g)) for g in Iq.groebner().elements]


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_gb_properties(seed):
    rng = random.Random(seed)
    gens = [random_homogeneous(rng, R, rng.randint(1, 3), 3) for _ in range(rng.randint(1, 3))]
    I = Ideal(gens)
    gb = I.groebner()
    assert verify_groebner(gb)
    for g in gens:
        assert member(g, I)
    # reduced bases do not depend on generator order
    assert Ideal(list(reversed(gens))).groebner().elements == gb.elements
