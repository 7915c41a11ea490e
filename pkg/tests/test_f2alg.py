import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from f2workbench.f2alg import (
    AlgebraMap,
    AlgebraMismatch,
    AlgebraSpec,
    NotHomogeneous,
    devectorize,
    monomial_basis,
    monomials_of_degree,
    vectorize,
)
from f2workbench.invariants import poly_algebra, substitution
from strategies import gl_element, homogeneous, inhomogeneous, poly

MIXED = AlgebraSpec.build(("x", 1), ("y", 1), ("e", 1, "exterior"), ("b", 4), ("u", 3, "exterior"))


def test_parse_and_format():
    a = MIXED.parse("x^2*y + e*y^2 + y^3")
    assert str(a) == "x^2*y + y^3 + y^2*e"
    assert a.degree == 3
    assert MIXED.parse("e*e") == MIXED.zero()
    assert MIXED.parse("1") == MIXED.one()
    with pytest.raises(ValueError):
        MIXED.parse("z")


def test_exterior_generators_square_to_zero():
    e, u, b = MIXED.gen("e"), MIXED.gen("u"), MIXED.gen("b")
    assert e * e == MIXED.zero()
    assert (u + b) ** 2 == b * b


def test_characteristic_two():
    x, y = MIXED.gen("x"), MIXED.gen("y")
    assert (x + y) ** 2 == x * x + y * y
    assert x + x == MIXED.zero()


def test_inhomogeneous_degree_rejected():
    with pytest.raises(NotHomogeneous):
        MIXED.parse("x + x^2").degree


def test_components_and_truncation():
    a = MIXED.parse("x + x^2 + b")
    assert a.component(2) == MIXED.parse("x^2")
    assert a.truncate(2) == MIXED.parse("x + x^2")
    x, y = MIXED.gen("x"), MIXED.gen("y")
    assert (x + y).mul(x + y * y, max_degree=2) == MIXED.parse("x^2 + x*y")


def test_basis_sizes():
    alg = poly_algebra(4)
    assert [len(monomial_basis(alg, d)) for d in range(5)] == [1, 4, 10, 20, 35]
    assert len(monomial_basis(MIXED, 3)) == 8  # seven in x, y, e plus u


def test_named_monomials():
    assert monomials_of_degree([("a", 2), ("b", 3)], 6) == [{"a": 0, "b": 2}, {"a": 3, "b": 0}]


def test_mixing_algebras_rejected():
    with pytest.raises(AlgebraMismatch):
        MIXED.gen("x") + poly_algebra(2).gen("x1")


def test_map_validates_images():
    alg = poly_algebra(2)
    with pytest.raises(NotHomogeneous):
        AlgebraMap(alg, alg, {"x1": alg.parse("x1^2"), "x2": alg.gen("x2")})
    with pytest.raises(ValueError):
        AlgebraMap(alg, alg, {"x1": alg.gen("x1")})


@given(poly(), poly(), poly())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(inhomogeneous(MIXED, 5), inhomogeneous(MIXED, 5))
def test_product_matches_naive(a, b):
    naive = oracles.poly_mul(set(a.terms), set(b.terms), MIXED.exterior)
    assert set((a * b).terms) == naive


@given(gl_element(), poly(), poly())
def test_substitution_is_a_ring_map(g, a, b):
    f = substitution(g)
    assert f(a + b) == f(a) + f(b)
    assert f(a * b) == f(a) * f(b)
    assert f(poly_algebra(4).one()) == poly_algebra(4).one()


@given(gl_element(), poly(max_degree=4))
def test_substitution_matches_naive(g, a):
    assert set(substitution(g)(a).terms) == oracles.substitute(g.entries(), set(a.terms))


@given(st.integers(0, 6).flatmap(lambda d: st.tuples(st.just(d), homogeneous(MIXED, d))))
def test_vector_roundtrip(pair):
    d, a = pair
    assert devectorize(MIXED, vectorize(a, d), d) == a


@given(inhomogeneous(MIXED, 5))
def test_format_parse_roundtrip(a):
    assert MIXED.parse(str(a)) == a
