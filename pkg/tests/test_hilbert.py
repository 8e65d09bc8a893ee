import random

import pytest
from hypothesis import given, settings, strategies as st

from flatlim.groebner import Ideal, initial_ideal
from flatlim.hilbert import (
    HilbertCheckError,
    HilbertDimensionError,
    ci_hilbert_check,
    ci_series,
    embedded_length,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    hilbert_series_monomial,
    regularity_index,
)
from flatlim.poly import R

from oracles import hf_monomial_bruteforce, hf_span, random_homogeneous

x, y, z, w = R.gens

monomial_sets = st.lists(st.tuples(*[st.integers(0, 4)] * 4).filter(any), min_size=1, max_size=7)


def test_series_examples():
    assert hilbert_series_monomial([(1, 0, 0, 0), (0, 1, 0, 0)]).numerator == (1, -2, 1)
    assert hilbert_series_monomial([(1, 0, 0, 0)]).numerator == (1, -1)
    H = hilbert_series_monomial([(2, 0, 0, 0), (1, 1, 0, 0), (0, 4, 0, 0)])
    assert H.numerator == (1, 0, -2, 1, -1, 1)
    gens = [(2, 0, 0, 0), (1, 1, 0, 0), (0, 4, 0, 0)]
    assert [H.coefficient(n) for n in range(11)] == [hf_monomial_bruteforce(gens, n) for n in range(11)]


def test_function_examples():
    assert hilbert_function(Ideal([x, y]), 3) == 4
    assert hilbert_function(Ideal([], R), 2) == 10


@given(monomial_sets)
def test_monomial_series_matches_counting(gens):
    for small in (0, 6):
        H = hilbert_series_monomial(gens, small=small)
        assert [H.coefficient(n) for n in range(11)] == [hf_monomial_bruteforce(gens, n) for n in range(11)]


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_series_matches_linear_algebra(seed):
    rng = random.Random(seed)
    gens = [random_homogeneous(rng, R, rng.randint(1, 3), 3) for _ in range(rng.randint(1, 3))]
    H = hilbert_series(Ideal(gens))
    assert [H.coefficient(n) for n in range(6)] == [hf_span(gens, n) for n in range(6)]


def test_polynomial_examples():
    hp = hilbert_polynomial(Ideal([x, y]))
    assert str(hp) == "n + 1" and (hp.degree, hp.genus) == (1, 0)
    G = R.parse("(z+w)*(z-w)*(z+2*w)*(2*z+w)*(3*z+w)*(z+3*w)")
    F = R.parse("z^4 + w^4")
    hp = hilbert_polynomial(Ideal([x ** 2, x * y, y ** 4, x * G - y ** 3 * F]))
    assert str(hp) == "4n + 4" and (hp.degree, hp.genus) == (4, -3)
    assert str(hilbert_polynomial(Ideal([x, y, z]))) == "1"
    assert str(hilbert_polynomial(Ideal([x, y, z, w]))) == "0"


def test_polynomial_agrees_past_regularity():
    I = Ideal([x ** 2, x * y, y ** 3, x * R.parse("z^3 - w^3") - y ** 2 * z ** 2])
    hp = hilbert_polynomial(I)
    n0 = regularity_index(I)
    assert all(hilbert_function(I, n) == hp(n) for n in range(n0, n0 + 10))
    assert hilbert_function(I, n0 - 1) != hp(n0 - 1) if n0 > 0 else True


def test_polynomial_dimension_guard():
    with pytest.raises(HilbertDimensionError):
        hilbert_polynomial(Ideal([x]))


def test_nonhomogeneous_rejected():
    with pytest.raises(ValueError):
        hilbert_series(Ideal([x + 1]))


def test_ci_examples():
    assert ci_series(2, 3) == [1, 2, 2, 1, 0]
    assert sum(ci_series(1, 1)) == 1
    assert ci_hilbert_check(z ** 2, z ** 3 - w ** 3) == [1, 2, 2, 1, 0]
    with pytest.raises(ValueError):
        ci_hilbert_check(z * w, z ** 3)
    with pytest.raises(ValueError):
        ci_hilbert_check(x, z)


def test_flatness_for_random_ideal():
    rng = random.Random(7)
    I = Ideal([random_homogeneous(rng, R, 2, 4) for _ in range(2)] + [random_homogeneous(rng, R, 3, 4)])
    J = initial_ideal(I, (3, 2, 1, 1))
    assert [hilbert_function(I, n) for n in range(8)] == [hilbert_function(J, n) for n in range(8)]


def test_embedded_length_of_point_on_line():
    E = Ideal([x, y])
    # x and y survive at the point z + w = 0 of the line
    S = Ideal([x * x, x * y, y * y, x * (z + w), y * (z + w)])
    assert embedded_length(S, E) == 2
    assert embedded_length(E, E) == 0
    with pytest.raises(HilbertCheckError):
        embedded_length(E, S)
