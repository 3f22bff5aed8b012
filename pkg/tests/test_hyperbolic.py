import math
from fractions import Fraction

import pytest

from kontext.calculus import Coefficient, interference_lambda
from kontext.errors import ClassificationError, DomainError
from kontext.hyperbolic import (
    SplitComplex,
    hyperbolic_phase,
    hyperbolic_unit,
    represent_hyperbolic,
    split_amplitude,
    split_modulus,
)

LN3 = math.log(3)


@pytest.mark.parametrize("lam,sign", [(5 / 3, 1), (-5 / 3, -1), (Fraction(5, 3), 1), (Coefficient(Fraction(-1, 2), Fraction(9, 400)), -1)])
def test_phase_of_five_thirds(lam, sign):
    s, t = hyperbolic_phase(lam)
    assert s == sign and t == pytest.approx(LN3, abs=1e-12)


def test_phase_boundary():
    assert hyperbolic_phase(1) == (1, 0.0)
    assert hyperbolic_phase(Coefficient(Fraction(1, 5), Fraction(1, 100))) == (1, 0.0)


@pytest.mark.parametrize("lam", [0.5, -0.99, Coefficient(Fraction(1, 6), Fraction(1, 18))])
def test_phase_domain(lam):
    with pytest.raises(DomainError):
        hyperbolic_phase(lam)


def test_infinite_coefficient_has_no_phase():
    with pytest.raises(DomainError):
        hyperbolic_phase(Coefficient(Fraction(1), Fraction(0)))


@pytest.mark.parametrize("z,mod", [(SplitComplex(1, 0), 1), (SplitComplex(1, 1), 0), (SplitComplex(2, 3), -5)])
def test_split_modulus(z, mod):
    assert split_modulus(z) == mod


def test_unit_hyperbola():
    for t in (0.0, 0.7, 3.2):
        assert split_modulus(hyperbolic_unit(t)) == pytest.approx(1.0, rel=1e-12)


def test_algebra():
    z, w = SplitComplex(2, 1), SplitComplex(-1, 3)
    assert z * w == SplitComplex(2 * -1 + 1 * 3, 2 * 3 + 1 * -1)
    assert z.conj().conj() == z
    assert split_modulus(z * w) == split_modulus(z) * split_modulus(w)
    assert z + w - w == z and -z == SplitComplex(-2, -1)


def test_h6_hyperbolic_state(h6):
    a, b = h6.pair()
    st = represent_hyperbolic(h6.space, a, b, h6.context("C_hyp"))
    assert st.sign == {-1: 1, 1: -1}
    for x in b.spectrum:
        assert st.theta[x] == pytest.approx(LN3, abs=1e-12)
        assert st.sign[x] * math.cosh(st.theta[x]) == pytest.approx(interference_lambda(h6.space, a, b, h6.context("C_hyp")).lam[x].value, abs=1e-10)
    assert st.born == {-1: 1, 1: 0}
    assert isinstance(st.born[-1], Fraction)
    assert st.residual({-1: 1, 1: 0}) <= 1e-12
    assert "no hyperbolic basis" in st.note


def test_split_amplitude_worked_values():
    # b_1 outcome of the hyperbolic H6 context: A = 1/20, B = 9/20, lambda = 5/3
    z, s, t = split_amplitude(Fraction(1, 20), Fraction(9, 20), Coefficient(Fraction(1, 2), Fraction(9, 400)))
    assert s == 1 and t == pytest.approx(LN3)
    assert split_modulus(z) == pytest.approx(1.0, abs=1e-12)


def test_boundary_reduces_to_square():
    z, _, t = split_amplitude(0.25, 0.09, 1.0)
    assert t == 0.0 and split_modulus(z) == pytest.approx((0.5 + 0.3) ** 2, abs=1e-15)


def test_trigonometric_context_refused(u4):
    with pytest.raises(ClassificationError):
        represent_hyperbolic(u4.space, *u4.pair(), u4.context("C1"))
