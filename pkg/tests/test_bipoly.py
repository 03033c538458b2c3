import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from aztec_spectra.bipoly import U, V, BiPoly
from oracles import U as SU, V as SV, to_sympy

monomial = st.tuples(st.integers(0, 4), st.integers(0, 4))
bipolys = st.dictionaries(monomial, st.integers(-9, 9), max_size=6).map(BiPoly)


@settings(max_examples=150, deadline=None)
@given(bipolys, bipolys, bipolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@settings(max_examples=100, deadline=None)
@given(bipolys, bipolys)
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@settings(max_examples=100, deadline=None)
@given(bipolys, st.integers(-3, 3), st.integers(-3, 3))
def test_evaluate_matches_sympy(a, u, v):
    assert a.evaluate(u, v) == to_sympy(a).subs({SU: u, SV: v})


def test_no_stored_zeros():
    p = BiPoly({(1, 0): 3, (0, 1): 0}) + BiPoly({(1, 0): -3})
    assert p.terms == {} and not p
    assert p == 0


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


def test_constants_hash_like_ints():
    assert BiPoly.const(5) == 5
    assert hash(BiPoly.const(5)) == hash(5)
    assert {BiPoly.const(5): "a"}[5] == "a"


def test_degrees_and_homogeneity():
    p = 2 * U**2 * V + 3 * U * V**2
    assert (p.degree_u, p.degree_v, p.total_degree) == (2, 2, 3)
    assert p.is_homogeneous(3)
    assert not (p + 1).is_homogeneous()
    assert p.swap() == 2 * V**2 * U + 3 * V * U**2


def test_power_and_printing():
    p = (U + V) ** 2
    assert p == U**2 + 2 * U * V + V**2
    assert str(p) == "u^2 + 2*u*v + v^2"
    assert p.latex() == "u^{2}+2uv+v^{2}"
    assert str(BiPoly()) == "0"
