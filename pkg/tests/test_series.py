from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.laurent import LaurentPoly
from src.algebra.products import euler
from src.algebra.series import SeriesSpace, TruncatedSeries, series_product, series_sum
from src.utils.exceptions import SeriesError

Z = LaurentPoly.var("z")


@pytest.fixture
def space():
    return SeriesSpace.build({"T": 5})


SMALL = SeriesSpace.build({"T": 4})

coefficient_polys = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=3).map(
    lambda terms: sum((LaurentPoly.monomial(c, z=e) for e, c in terms.items()), LaurentPoly())
)
series = st.dictionaries(st.integers(0, 4), coefficient_polys, max_size=4).map(
    lambda coeffs: TruncatedSeries(SMALL, {(k,): c for k, c in coeffs.items()})
)
unit_constants = st.tuples(st.sampled_from([1, -1, 2, Fraction(1, 3)]), st.integers(-2, 2)).map(
    lambda pair: LaurentPoly.monomial(pair[0], z=pair[1])
)


def _with_constant(f, c0):
    coeffs = {g: c for g, c in f.coeffs.items() if g != SMALL.zero_grade}
    coeffs[SMALL.zero_grade] = c0
    return TruncatedSeries(SMALL, coeffs)


def coefficients(series, cap):
    return [series.coefficient(T=k) for k in range(cap + 1)]


def test_euler_product(space):
    assert coefficients(euler(space), 5) == [1, -1, -1, 0, 0, 1]


def test_inverse_counts_partitions(space):
    assert coefficients(euler(space).inverse(), 5) == [1, 1, 2, 3, 5, 7]


def test_geometric_inverts_binomial(space):
    product = TruncatedSeries.geometric(space, Z, T=1) * TruncatedSeries.binomial(space, Z, T=1)
    assert product == TruncatedSeries.one(space)


def test_log_exp_roundtrip(space):
    e = euler(space)
    assert e.log().exp() == e


def test_power(space):
    e = euler(space)
    assert e.power(2) == e * e
    root = e.power(Fraction(1, 2))
    assert root * root == e
    assert e.power(Z).power(-1) == e.power(-Z)


def test_pow_int_negative(space):
    e = euler(space)
    assert e.pow_int(-2) * e.pow_int(2) == TruncatedSeries.one(space)


def test_domain_errors(space):
    with pytest.raises(SeriesError):
        (TruncatedSeries.one(space) * 2).log()
    with pytest.raises(SeriesError):
        TruncatedSeries.one(space).exp()
    with pytest.raises(SeriesError):
        TruncatedSeries.one(space).scale(1 + Z).inverse()
    with pytest.raises(SeriesError):
        TruncatedSeries.geometric(space, 1, T=0)
    with pytest.raises(SeriesError):
        TruncatedSeries.monomial(space, 1, T=-1)


def test_half_integer_grades():
    space = SeriesSpace.build({"T": Fraction(7, 2)}, {"T": 2})
    assert space.caps == (7,)
    assert space.grade(T=Fraction(3, 2)) == (3,)
    assert space.label((3,)) == "T^3/2"
    with pytest.raises(SeriesError):
        space.grade(T=Fraction(1, 3))
    with pytest.raises(SeriesError):
        SeriesSpace.build({"T": Fraction(1, 3)}, {"T": 2})


def test_truncation_drops_high_grades(space):
    high = TruncatedSeries.monomial(space, 1, T=3)
    assert not (high * high).coeffs
    assert not TruncatedSeries.monomial(space, 1, T=6).coeffs


def test_mixed_spaces_are_rejected(space):
    other = SeriesSpace.build({"T": 4})
    with pytest.raises(SeriesError):
        TruncatedSeries.one(space) + TruncatedSeries.one(other)


def test_dump_and_mismatches():
    space = SeriesSpace.build({"T": 2, "q": 1})
    series = TruncatedSeries.binomial(space, Z, T=1, q=1)
    assert series.dump() == ["T^0 q^0 : 1", "T^1 q^1 : -z"]
    assert series.mismatches(TruncatedSeries.one(space)) == [(1, 1)]


def test_sum_and_product(space):
    a = TruncatedSeries.monomial(space, Z, T=1)
    b = TruncatedSeries.monomial(space, 2, T=2)
    assert series_sum(space, [a, b]) == series_sum(space, [b, a])
    assert series_product(space, [a, b]) == TruncatedSeries.monomial(space, 2 * Z, T=3)
    assert series_sum(space, []) == TruncatedSeries.zero(space)


@settings(max_examples=40)
@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries.zero(SMALL)
    assert a * TruncatedSeries.one(SMALL) == a


@settings(max_examples=40)
@given(series, unit_constants)
def test_unit_series_invert(f, c0):
    unit = _with_constant(f, c0)
    assert unit * unit.inverse() == TruncatedSeries.one(SMALL)


@settings(max_examples=30)
@given(series)
def test_exp_undoes_log(f):
    unit = _with_constant(f, LaurentPoly.constant(1))
    assert unit.log().exp() == unit
