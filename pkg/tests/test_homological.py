from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from f2workbench.f2alg import AlgebraSpec, monomial_basis
from f2workbench.homological import (
    EM_LAMBDA_NAMES,
    DifferentialSpec,
    IllDefined,
    KoszulModule,
    ModuleError,
    PresentedAlgebra,
    algebra_basis,
    build_em_module,
    central_multiplication,
    check_well_defined,
    em_d2,
    em_presented_algebra,
    koszul_ext,
    page_homology,
    polynomial_counts,
    quotient_dims,
    sq1_homology,
    su4_torus_classes,
    verify_coproduct_identities,
)
from f2workbench.groups import general_linear_group
from f2workbench.invariants import dickson
from f2workbench.series import BOCKSTEIN_A6, RationalSeries
from strategies import homogeneous

GOLDEN = Path(__file__).parent / "golden"

# l2, l3, l5, b4, b6 polynomial; x3, x5 exterior; relation l2*b6 + l3*x5 + l5*x3
E2_GENERATORS = [(2, False), (3, False), (5, False), (4, False), (6, False), (3, True), (5, True)]
E2_RELATION = {(1, 0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 0, 1, 0)}


def test_trivial_module_over_one_generator():
    assert koszul_ext(KoszulModule.trivial([("y", 1)]), 8).dims == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_trivial_module_over_two_generators():
    ext = koszul_ext(KoszulModule.trivial([("y", 1), ("z", 2)]), 12)
    assert ext.dims == polynomial_counts([2, 3], 12)


def test_free_module_has_ext_in_degree_zero_only():
    # E(y) itself: labels 1 and y, y . 1 = y
    free = KoszulModule([("y", 1)], ["1", "y"], lambda lab: 0 if lab == "1" else 1, [{"1": "y"}], complete_through=None)
    assert koszul_ext(free, 6).dims == [1, 0, 0, 0, 0, 0, 0]


def test_module_validation():
    with pytest.raises(ModuleError):
        KoszulModule([("y", 1)], ["a", "b"], lambda lab: 0 if lab == "a" else 1, [{"a": "b", "b": "a"}])
    with pytest.raises(ModuleError):
        KoszulModule([("y", 1)], ["a", "b"], lambda lab: 0, [{"a": "b"}])
    with pytest.raises(ModuleError):
        KoszulModule([("y", 1), ("z", 1)], ["a"], lambda lab: 0, [{}])


@pytest.mark.parametrize("n", range(0, 15))
def test_presented_algebra_against_naive_quotient(n):
    naive = oracles.quotient_dim_one_relation(E2_GENERATORS, E2_RELATION, 8, n)
    assert quotient_dims(em_presented_algebra(), n)[n] == naive


@pytest.mark.parametrize("extended", [False, True])
def test_koszul_ext_equals_presented_algebra(extended):
    ext = koszul_ext(build_em_module(14, extended=extended), 14, EM_LAMBDA_NAMES)
    assert ext.dims == quotient_dims(em_presented_algebra(), 14).dims


def test_e2_hand_values():
    dims = quotient_dims(em_presented_algebra(), 8).dims
    assert dims[:7] == [1, 0, 1, 2, 2, 4, 5] and dims[8] == 9


def test_quotient_basis_rejects_negative_degree():
    with pytest.raises(ValueError):
        algebra_basis(em_presented_algebra(), -1)


def test_e3_dims_and_representatives():
    p = em_presented_algebra()
    e3 = page_homology(p, em_d2(p), 8, with_reps=True)
    assert e3.dims == [1, 0, 1, 1, 0, 2, 2, 1, 3]
    assert e3.reps[5] == ["x5", "l5"]
    assert e3.reps[6] == ["l2*b4 + l3*x3", "l3^2"]


def test_e3_chart_golden():
    p = em_presented_algebra()
    chart = page_homology(p, em_d2(p), 8).chart()
    assert chart == (GOLDEN / "em_e3_chart.txt").read_text()


def test_d2_is_well_defined_and_squares_to_zero():
    p = em_presented_algebra()
    d = em_d2(p)
    check_well_defined(p, d, 14)
    for n in range(12):
        for m in monomial_basis(p.free, n):
            assert not d.apply(d.apply(p.free.monomial(m)))


def test_ill_defined_differential_detected():
    free = AlgebraSpec.build(("a", 1), ("b", 2))
    p = PresentedAlgebra(free, [free.parse("a*b")])
    with pytest.raises(IllDefined):
        check_well_defined(p, DifferentialSpec({"a": free.parse("b")}), 4)


def test_differential_degree_checked():
    p = em_presented_algebra()
    with pytest.raises(ValueError):
        check_well_defined(p, DifferentialSpec({"x3": p.free.parse("l2")}, shift=2), 4)


@given(st.integers(0, 7).flatmap(lambda d: homogeneous(em_presented_algebra().free, d)),
       st.integers(0, 7).flatmap(lambda d: homogeneous(em_presented_algebra().free, d)))
def test_leibniz_rule(a, b):
    d = em_d2(em_presented_algebra())
    assert d.apply(a * b) == d.apply(a) * b + a * d.apply(b)


def test_coproduct_identities():
    checks = verify_coproduct_identities()
    assert len(checks) == 13
    failed = [c.name for c in checks if not c.holds]
    assert not failed, failed


def test_central_multiplication_is_an_algebra_map():
    tc = su4_torus_classes()
    psi = central_multiplication(tc.alg)
    c = tc.classes
    assert psi(c["b4"] * c["x3"]) == psi(c["b4"]) * psi(c["x3"])


def test_sq1_homology_of_a6(ctx):
    table = sq1_homology(ctx.group("a6"), 30, ctx.ring("a6"))
    assert list(table.dims) == BOCKSTEIN_A6.expand(30)


def test_sq1_homology_of_gl3():
    # naive Sq^1 on the rank-3 Dickson classes: d4 -> 0, d6 -> d7, d7 -> 0
    d4, d6, d7 = dickson(3)

    def naive_sq1(a):
        out: set = set()
        for m in a.terms:
            out ^= oracles.sq_component(m, 1)
        return out

    assert naive_sq1(d4) == set() and naive_sq1(d6) == set(d7.terms)
    # so the homology is F2[d4, d6^2]
    table = sq1_homology(general_linear_group(3), 24)
    assert list(table.dims) == RationalSeries({0: 1}, [4, 12]).expand(24)
