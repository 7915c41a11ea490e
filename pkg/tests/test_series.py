import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from f2workbench import series as S
from f2workbench.series import DimTable, NegativeDimension, RationalSeries, StructureTheorem, combine, compare, parse_series

numerators = st.dictionaries(st.integers(0, 12), st.integers(-3, 3), max_size=4)
denominators = st.lists(st.integers(1, 9), max_size=4)


def test_dickson_series_start():
    assert S.DICKSON.expand(16) == [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1]


def test_psu_quotient_matches_printed_coefficients():
    assert list(combine(S.PSU_QUOTIENT, 24).dims) == list(S.PSU_PRINTED)


def test_mcl_combination_equals_closed_form():
    assert combine(S.MCL_COHOMOLOGY, 40).dims == combine(S.MCL_CLOSED, 40).dims


def test_mcl_low_degrees():
    dims = list(combine(S.MCL_COHOMOLOGY, 8).dims)
    assert dims[1:7] == [0] * 6 and dims[7:9] == [1, 1]


def test_psu_cohomology_low_degrees():
    assert list(combine(S.PSU_COHOMOLOGY, 8).dims) == [1, 0, 1, 1, 0, 2, 2, 1, 3]


def test_ly_normalizer_table():
    table = combine(S.LY_NORMALIZER, 20)
    assert list(table.dims[:9]) == [1, 1, 1, 1, 1, 1, 1, 2, 3]
    summed = [sum(k * c for k, c in zip((1, 1, 1), col)) for col in zip(*(s.expand(20) for _, _, s in S.LY_NORMALIZER.terms))]
    assert list(table.dims) == summed


@pytest.mark.parametrize("name", sorted(S.COMBINATIONS))
def test_registry_nonnegative_through_60(name):
    assert min(combine(S.COMBINATIONS[name], 60).dims) >= 0


def test_negative_combination_is_reported():
    st_bad = StructureTheorem("bad", [(1, "one", RationalSeries({0: 1})), (-1, "t", RationalSeries({1: 1}))])
    with pytest.raises(NegativeDimension) as info:
        combine(st_bad, 3)
    assert info.value.degree == 1 and info.value.value == -1


def test_parse_series_and_literal():
    s = parse_series("num: [(0, 1), (9, 1)] den: [3, 5]")
    assert s == RationalSeries.from_terms([0, 9], [3, 5])
    assert parse_series(s.to_literal()) == s
    with pytest.raises(ValueError):
        parse_series("1/(1-t)")
    with pytest.raises(ValueError):
        parse_series("num: [1, 2] den: [3]")


def test_invalid_denominator():
    with pytest.raises(ValueError):
        RationalSeries({0: 1}, [0])


def test_dimtable_roundtrips():
    t = DimTable("x", [3, 1, 4, 1], n_min=2)
    assert t.degrees == [2, 3, 4, 5]
    assert DimTable.from_json(t.to_json()).dims == t.dims
    back = DimTable.from_csv("x", t.to_csv())
    assert (back.dims, back.n_min) == (t.dims, t.n_min)
    assert t.to_csv().splitlines()[0] == "degree,dim"


def test_compare_reports_degrees():
    a, b = DimTable("a", [1, 2, 3]), DimTable("b", [1, 5, 3, 9])
    assert [(m.degree, m.left, m.right) for m in compare(a, b)] == [(1, 2, 5)]
    with pytest.raises(ValueError):
        compare(DimTable("a", [1], 0), DimTable("b", [1], 4))


@given(numerators, denominators)
def test_expansion_matches_direct_count(num, den):
    assert RationalSeries(num, den).expand(25) == oracles.series_coefficients(num, den, 25)


@given(numerators, denominators, numerators, denominators)
def test_sum_and_difference_are_termwise(n1, d1, n2, d2):
    a, b = RationalSeries(n1, d1), RationalSeries(n2, d2)
    ea, eb = a.expand(20), b.expand(20)
    assert (a + b).expand(20) == [x + y for x, y in zip(ea, eb)]
    assert (a - b).expand(20) == [x - y for x, y in zip(ea, eb)]
    assert a.scale(3).expand(20) == [3 * x for x in ea]


@given(numerators, denominators, st.dictionaries(st.integers(0, 5), st.integers(-2, 2), max_size=3))
def test_times_poly(num, den, poly):
    a = RationalSeries(num, den)
    ea = a.expand(20)
    expect = [sum(c * ea[n - e] for e, c in poly.items() if n >= e) for n in range(21)]
    assert a.times_poly(poly).expand(20) == expect
