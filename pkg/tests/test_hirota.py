from fractions import Fraction

import pytest

from hurwitzkit import GuardError, ValidationError
from hurwitzkit.genfun import ContentFunction
from hurwitzkit.hirota import bkp_tau_poly, g_normalization, hirota_bilinear_check
from hurwitzkit.symfunc import PowerSumPoly


def test_g_normalization_convention():
    r = ContentFunction.rational([Fraction(1, 2)])  # r(x) = x + 1/2
    assert g_normalization(r, 0) == 1
    assert g_normalization(r, 1) == 1
    assert g_normalization(r, 2) == r(1)
    assert g_normalization(r, 3) == r(1) ** 2 * r(2)
    assert g_normalization(r, -1) == r(0)
    assert g_normalization(r, -2) == r(0) ** 2 * r(-1)


def test_g_normalization_rejects_vanishing():
    r = ContentFunction.rational([0])  # r(x) = x vanishes at 0
    with pytest.raises(ValidationError):
        g_normalization(r, -1)
    assert g_normalization(r, 2) == 1  # only positive arguments touched


def test_tau_poly_structure():
    tau = bkp_tau_poly(ContentFunction.one(), 0, 1, 3)
    # length <= 1: single-row diagrams only
    assert tau.coefficient(()) == 1
    assert tau.coefficient((1,)) == 1
    assert tau.coefficient((2,)) == Fraction(1, 2)
    assert tau.coefficient((1, 1)) == Fraction(1, 2)
    tau2 = bkp_tau_poly(ContentFunction.one(), 0, 2, 2)
    assert tau2.coefficient((2,)) == 0  # s_(2) + s_(1,1) cancels p_2
    assert tau2.coefficient((1, 1)) == 1


def test_tau_poly_content_weights():
    r = ContentFunction.rational([Fraction(1, 2)])
    n = 1
    tau = bkp_tau_poly(r, n, 3, 2)
    g = g_normalization(r, n)
    # weight of lam=(1): r(n); coefficients of s_(1) = p_1
    assert tau.coefficient((1,)) == g * r(1)


@pytest.mark.parametrize("cutoff", [1, 2, 3])
def test_bilinear_constant_weight(cutoff):
    assert hirota_bilinear_check(ContentFunction.one(), cutoff, 4)


@pytest.mark.parametrize("cutoff", [1, 2, 3])
def test_bilinear_shifted_weight(cutoff):
    r = ContentFunction.rational([Fraction(1, 2)])
    assert hirota_bilinear_check(r, cutoff, 3)


def test_bilinear_random_tabulated_weight():
    import random

    random.seed(4)
    table = {i: Fraction(random.randint(1, 30), random.randint(1, 11)) for i in range(-9, 12)}
    r = ContentFunction.tabulated(table)
    assert hirota_bilinear_check(r, 2, 3, n_values=(0, 1, -1))


def test_bilinear_detects_wrong_tau():
    """A content weight that is not a genuine content product must fail."""

    class Fake(ContentFunction):
        def __init__(self):
            super().__init__(lambda x: Fraction(1), "fake")

        def content_product(self, n, lam):
            # depends on the diagram shape, not on cell contents
            return Fraction(1 + lam.length())

    assert not hirota_bilinear_check(Fake(), 2, 3)


def test_guards():
    with pytest.raises(GuardError):
        hirota_bilinear_check(ContentFunction.one(), 2, 7)
    with pytest.raises(ValidationError):
        hirota_bilinear_check(ContentFunction.one(), 0, 3)
