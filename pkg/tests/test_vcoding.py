from fractions import Fraction

import pytest

from src.algebra.laurent import LaurentPoly
from src.core.enumeration import family_cores_by_sieve
from src.core.vcoding import (
    beta_vector,
    core_from_vcoding,
    first_hook_boxes,
    first_hook_intervals,
    parity_check,
    sc_weight_from_vcoding,
    sorting_permutation,
    tau_product_identity,
    vcoding,
    weight_from_vcoding,
)
from src.models.cores import Family, GInterval, VCoding
from src.models.partition import EMPTY, Partition
from src.utils.exceptions import TauError, VCodingError

Q = LaurentPoly.var("q")


def dd_cores(t, max_weight=30):
    return family_cores_by_sieve(Family.DD, 2 * t + 2, max_weight)


def test_fig2_coding(fig2):
    assert beta_vector(fig2, 6) == (0, 7, -10, 3, 16, -1)
    coding = vcoding(fig2, 6, 2, Family.DD)
    assert coding.v == (16, 7)
    assert coding.r == (13, 4)
    assert coding.mu == (11, 3)
    assert weight_from_vcoding(coding) == 30
    assert core_from_vcoding(coding) == fig2


def test_empty_core():
    coding = vcoding(EMPTY, 4, 1, Family.DD)
    assert coding.v == (3,)
    assert coding.mu == (0,)
    assert weight_from_vcoding(coding) == 0


def test_sc_single_box():
    coding = vcoding(Partition((1,)), 2, 1, Family.SC)
    assert coding.v == (2,)
    assert sc_weight_from_vcoding(coding) == 1


def test_rejects_inputs_outside_the_family():
    with pytest.raises(VCodingError):
        vcoding(Partition((1,)), 4, 1, Family.DD)
    with pytest.raises(VCodingError):
        vcoding(EMPTY, 5, 1, Family.DD)
    with pytest.raises(VCodingError):
        vcoding(Partition((2,)), 4, 1, Family.SC)


def test_rejects_bad_codings():
    with pytest.raises(VCodingError):
        core_from_vcoding(VCoding(6, 2, (7, 16), Family.DD))
    with pytest.raises(VCodingError):
        core_from_vcoding(VCoding(6, 2, (9, 3), Family.DD))
    with pytest.raises(VCodingError):
        core_from_vcoding(VCoding(6, 2, (11, 7), Family.DD))
    with pytest.raises(VCodingError):
        sorting_permutation((1, 1))


@pytest.mark.parametrize("t", [1, 2, 3])
def test_dd_roundtrip(t):
    g = 2 * t + 2
    for c in dd_cores(t):
        coding = vcoding(c, g, t, Family.DD)
        assert core_from_vcoding(coding) == c
        assert weight_from_vcoding(coding) == Fraction(c.weight)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_sc_roundtrip(t):
    g = 2 * t
    for c in family_cores_by_sieve(Family.SC, g, 30):
        coding = vcoding(c, g, t, Family.SC)
        assert core_from_vcoding(coding) == c
        assert sc_weight_from_vcoding(coding) == c.weight


@pytest.mark.parametrize("t", [1, 2])
def test_tau_product_with_powers_and_q_binomials(t):
    one = LaurentPoly.constant(1)
    for c in dd_cores(t, 24):
        assert tau_product_identity(c, t, lambda x: Fraction(2) ** x).equal
        assert tau_product_identity(c, t, lambda x: Fraction(x * x + 1)).equal
        assert tau_product_identity(c, t, lambda x: 1 - Q ** x, one=one).equal


def test_tau_vanishing_is_reported():
    with pytest.raises(TauError) as excinfo:
        tau_product_identity(Partition((2,)), 1, lambda x: 0)
    assert isinstance(excinfo.value.argument, int)


def test_g_interval_elements():
    assert GInterval("+", -3, 9, 4).elements == frozenset({-3, 1, 5})
    assert GInterval("-", -3, 9, 4).elements == frozenset({9, 5, 1})
    assert GInterval("+", 5, 5, 4).elements == frozenset()


@pytest.mark.parametrize("t", [1, 2])
def test_first_hook_intervals(t):
    for c in dd_cores(t):
        if c.weight:
            coding = vcoding(c, 2 * t + 2, t, Family.DD)
            assert first_hook_intervals(coding) == first_hook_boxes(c)


def test_first_hook_of_empty_core():
    with pytest.raises(VCodingError):
        first_hook_intervals(vcoding(EMPTY, 4, 1, Family.DD))


@pytest.mark.parametrize("t", [1, 2, 3])
def test_parity(t):
    for c in dd_cores(t):
        h_parity, coding_parity = parity_check(c, t)
        assert h_parity == coding_parity
