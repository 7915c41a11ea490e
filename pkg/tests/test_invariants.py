import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from f2workbench.f2alg import monomial_basis
from f2workbench.groups import general_linear_group
from f2workbench.invariants import (
    ExtractionError,
    InvariantRing,
    NamedClassTable,
    act,
    action_on_degree,
    dickson,
    extract_named_classes,
    invariant_basis,
    poly_algebra,
    restrict,
    substitution,
    verify_dickson,
)
from f2workbench.series import DICKSON, A6_INVARIANTS, RationalSeries
from strategies import gl_element, poly

ALG = poly_algebra(4)


def test_dickson_rank_two():
    d2, d3 = dickson(2)
    alg = poly_algebra(2)
    assert d2 == alg.parse("x1^2 + x1*x2 + x2^2")
    assert d3 == alg.parse("x1^2*x2 + x1*x2^2")


@pytest.mark.parametrize("n, degrees", [(2, [2, 3]), (3, [4, 6, 7]), (4, [8, 12, 14, 15])])
def test_dickson_degrees(n, degrees):
    assert [g.degree for g in dickson(n)] == degrees
    assert verify_dickson(n)


def test_gl3_invariants_are_the_dickson_algebra():
    ring = InvariantRing(general_linear_group(3))
    assert ring.dims(21) == RationalSeries({0: 1}, [4, 6, 7]).expand(21)


@pytest.mark.parametrize("d", range(0, 8))
def test_gl4_fixed_dims_against_naive(ctx, d):
    gens = [g.entries() for g in ctx.group("gl4").generators]
    assert ctx.ring("gl4").dim(d) == oracles.fixed_dim(gens, 4, d)


@pytest.mark.parametrize("d", range(0, 7))
def test_a6_fixed_dims_against_naive(ctx, d):
    a6 = ctx.group("a6")
    gens = [g.entries() for g in a6.generators]
    assert ctx.ring("a6").dim(d) == oracles.fixed_dim(gens, 4, d)


def test_gl4_series_through_20(ctx):
    assert ctx.ring("gl4").dims(20) == DICKSON.expand(20)


def test_a6_series_through_20(ctx):
    assert ctx.ring("a6").dims(20) == A6_INVARIANTS.expand(20)


def test_invariant_elements_are_fixed(ctx):
    a6 = ctx.group("a6")
    for d in (3, 5, 9):
        for el in ctx.ring("a6").elements(d):
            assert all(act(g, el) == el for g in a6.elements[:40])


def test_invariant_basis_matches_all_element_fixed_space(ctx):
    # the fast path uses a few generators; the full group must fix the same space
    a6 = ctx.group("a6")
    sp = invariant_basis(a6, 6)
    for v in sp.vectors():
        el = ALG.element(m for m, bit in zip(monomial_basis(ALG, 6), v) if bit)
        assert all(act(g, el) == el for g in a6.elements)


def test_restriction_kills_dropped_variables():
    a = ALG.parse("x1*x3 + x2^2 + x1*x2")
    assert str(restrict(a, [1, 2])) == "x1*x2 + x2^2"
    assert not restrict(ALG.parse("x3*x4"), [1, 2])


def test_class_table_roundtrip(ctx):
    table = ctx.classes("A6")
    again = NamedClassTable.from_text("A6", table.to_text(), ALG)
    assert again.classes == table.classes


def test_class_table_rejects_wrong_degree():
    with pytest.raises(ValueError):
        NamedClassTable.from_text("A6", "w3 4 x1^3\n", ALG)


def test_fixture_classes_match_fresh_extraction(ctx):
    fresh = extract_named_classes(ctx.group("a6"), "A6", ring=ctx.ring("a6"))
    assert fresh.classes == ctx.classes("A6").classes


def test_extraction_on_the_wrong_group_fails(ctx):
    with pytest.raises(ExtractionError):
        extract_named_classes(ctx.group("gl4"), "A6", ring=ctx.ring("gl4"))


def test_extraction_rejects_unknown_profile(ctx):
    with pytest.raises(ValueError):
        extract_named_classes(ctx.group("a6"), "A5")


@given(gl_element(), gl_element(), st.integers(0, 6))
def test_action_is_a_representation(g, h, d):
    assert action_on_degree(g * h, d) == action_on_degree(g, d) @ action_on_degree(h, d)


@given(gl_element(), gl_element(), poly())
def test_act_composes(g, h, a):
    assert act(g * h, a) == act(g, act(h, a))


@given(gl_element(), poly())
def test_packed_action_matches_substitution(g, a):
    assert act(g, a) == substitution(g)(a)
