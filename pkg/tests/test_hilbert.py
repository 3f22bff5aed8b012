import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from kontext import hilbert as hb
from kontext.calculus import interference_lambda
from kontext.core import FiniteSpace, RandomVariable
from kontext.errors import ClassificationError, ConventionError, NotDoublyStochasticError
from kontext.hilbert import Branch, StateVector

R = math.sqrt(0.5)


@pytest.fixture(scope="module")
def skewed():
    # P(b|a) = [[1/3, 2/3], [1/2, 1/2]]
    s = FiniteSpace.from_weights({"p": "1/6", "q": "1/3", "r": "1/4", "t": "1/4"})
    a = RandomVariable("a", {"p": 0, "q": 0, "r": 1, "t": 1})
    b = RandomVariable("b", {"p": 0, "q": 1, "r": 0, "t": 1})
    return s, a, b


def test_represent_u4_c1(u4):
    a, b = u4.pair()
    st = hb.represent(u4.space, a, b, u4.context("C1"), "plus")
    theta = math.acos(math.sqrt(2) / 4)
    assert st.phases.theta[-1] == pytest.approx(1.209429, abs=1e-6)
    assert st.phases.theta[-1] == pytest.approx(theta, abs=1e-12)
    assert st.amplitude(-1) == pytest.approx(math.sqrt(1 / 6) + cmath.exp(1j * theta) * math.sqrt(1 / 3), abs=1e-15)
    probs = st.probabilities()
    assert probs[-1] == pytest.approx(2 / 3, abs=1e-12) and probs[1] == pytest.approx(1 / 3, abs=1e-12)
    assert st.norm == pytest.approx(1.0, abs=1e-12)


def test_represent_whole_space_is_a_quarter_turn(u4):
    st = hb.represent(u4.space, *u4.pair(), u4.space.omega)
    assert st.phases.theta[-1] == pytest.approx(math.pi / 2, abs=1e-15)
    assert abs(st.amplitude(-1)) ** 2 == pytest.approx(0.5, abs=1e-15)


def test_selection_context_gives_delta_function(u4):
    st = hb.represent(u4.space, *u4.pair(), u4.context("B1"))
    assert st.amplitudes.tolist() == [1, 0]
    st = hb.represent(u4.space, *u4.pair(), u4.context("B2"))
    assert st.amplitudes.tolist() == [0, 1]


def test_canonical_phases_differ_by_pi(h6):
    st = hb.represent(h6.space, *h6.pair(), {"w2", "w3", "w4"})
    assert st.phases.canonical
    d = (st.phases.theta[1] - st.phases.theta[-1]) % (2 * math.pi)
    assert d == pytest.approx(math.pi, abs=1e-12)


def test_plus_branch_range_and_minus_conjugates(u4):
    a, b = u4.pair()
    C = u4.context("C1")
    plus = hb.represent(u4.space, a, b, C, Branch.PLUS)
    minus = hb.represent(u4.space, a, b, C, Branch.MINUS)
    assert 0 <= plus.phases.theta[-1] <= math.pi
    assert np.allclose(minus.amplitudes, plus.amplitudes.conj(), atol=1e-15)
    assert minus.probabilities() == pytest.approx(plus.probabilities(), abs=1e-15)


def test_non_trigonometric_context_refused(h6):
    with pytest.raises(ClassificationError) as exc:
        hb.represent(h6.space, *h6.pair(), h6.context("C_hyp"))
    assert exc.value.lambdas[-1] == pytest.approx(5 / 3)


def test_canonical_needs_double_stochastic(skewed):
    s, a, b = skewed
    with pytest.raises(ConventionError):
        hb.represent(s, a, b, s.omega, convention="canonical")
    st = hb.represent(s, a, b, s.omega)
    assert not st.phases.canonical


def test_unknown_convention(u4):
    with pytest.raises(ValueError):
        hb.represent(u4.space, *u4.pair(), u4.space.omega, convention="other")


def test_born_b_residual_examples(u4):
    a, b = u4.pair()
    prof = interference_lambda(u4.space, a, b, u4.context("C1"))
    assert hb.born_b_residual(hb.represent(u4.space, a, b, u4.context("C1"), profile=prof), prof) <= 1e-15
    sel = interference_lambda(u4.space, a, b, u4.context("B1"))
    assert hb.born_b_residual(StateVector(b.spectrum, [1, 0]), sel) == 0
    assert hb.born_b_residual(StateVector(b.spectrum, [R, R]), sel) == pytest.approx(0.5, abs=1e-15)


def test_a_basis_u4(u4):
    a, b = u4.pair()
    basis = hb.build_a_basis(u4.space, a, b, u4.context("C1"))
    assert basis.unitarity_defect() <= 1e-12
    assert np.allclose(basis.e_a[0], [R, R], atol=1e-15)
    assert abs(np.vdot(basis.e_a[1], np.array([-R, R]))) == pytest.approx(1.0, abs=1e-12)
    assert basis.q == pytest.approx((R, R), abs=1e-15)


def test_a_basis_h6(h6):
    basis = hb.build_a_basis(h6.space, *h6.pair(), h6.context("Omega"))
    assert basis.q == pytest.approx((math.sqrt(0.1), math.sqrt(0.9)), abs=1e-15)
    assert hb.is_unitary(basis.V)


def test_a_basis_refused_without_double_stochasticity(skewed):
    s, a, b = skewed
    with pytest.raises(NotDoublyStochasticError) as exc:
        hb.build_a_basis(s, a, b, s.omega)
    assert exc.value.column_sums == (Fraction(5, 6), Fraction(7, 6))
    assert "5/6" in str(exc.value)


def test_born_a_examples(u4):
    a, b = u4.pair()
    C0 = u4.context("C1")
    basis = hb.build_a_basis(u4.space, a, b, C0)
    st = hb.represent(u4.space, a, b, C0)
    assert abs(st.inner(basis.e_a[0])) ** 2 == pytest.approx(1 / 3, abs=1e-15)
    assert hb.born_a_residual(u4.space, a, b, C0, C0) <= 1e-15
    assert hb.born_a_residual(u4.space, a, b, u4.space.omega, C0) <= 1e-12
    assert hb.born_a_residual(u4.space, a, b, u4.context("B1"), C0) <= 1e-12
    assert interference_lambda(u4.space, a, b, u4.context("B1")).pa == {-1: Fraction(1, 2), 1: Fraction(1, 2)}


def test_born_a_branch_mismatch(u4):
    a, b = u4.pair()
    basis = hb.build_a_basis(u4.space, a, b, u4.context("C1"), Branch.PLUS)
    with pytest.raises(ConventionError):
        hb.born_a_residual(u4.space, a, b, u4.space.omega, None, Branch.MINUS, basis)


def test_phase_telescoping(h6):
    a, b = h6.pair()
    ref = hb.represent(h6.space, a, b, h6.space.omega)
    for C in ({"w2", "w3", "w4"}, {"w1", "w3", "w4", "w6"}, h6.context("B1")):
        rel = hb.represent(h6.space, a, b, C).phases.relative(ref.phases)
        diff = (rel[-1] - rel[1]) % (2 * math.pi)
        assert min(diff, 2 * math.pi - diff) <= 1e-12


def test_operator_b():
    b = RandomVariable("b", {"p": -1, "q": 1})
    assert np.array_equal(hb.operator_b(b).matrix, np.diag([-1, 1]))
    b5 = RandomVariable("b", {"p": 0, "q": 5})
    assert np.array_equal(hb.operator_b(b5).matrix, np.diag([0, 5]))
    assert hb.expectation(hb.operator_b(b), StateVector((-1, 1), [R, R])) == pytest.approx(0.0, abs=1e-15)


def test_operator_a_u4(u4):
    a, b = u4.pair()
    op = hb.operator_a(a, hb.build_a_basis(u4.space, a, b, u4.context("C1")))
    # ascending spectrum a = (-1, 1): a_11 = 0, a_12 = (a_1 - a_2) q_1 q_2 = -1
    assert np.allclose(op.matrix, [[0, -1], [-1, 0]], atol=1e-12)
    assert op.is_self_adjoint
    assert op.eigenvalues() == pytest.approx([-1, 1], abs=1e-12)


def test_operator_a_h6(h6):
    a, b = h6.pair()
    op = hb.operator_a(a, hb.build_a_basis(h6.space, a, b, h6.context("Omega")))
    assert op.matrix[0, 0] == pytest.approx(0.8, abs=1e-12)
    assert op.matrix[1, 1] == pytest.approx(-0.8, abs=1e-12)
    assert op.matrix[0, 1] == pytest.approx(-0.6, abs=1e-12)
    assert op.matrix[1, 0] == pytest.approx(-0.6, abs=1e-12)


def test_commutator_examples(u4, h6):
    a, b = u4.pair()
    basis = hb.build_a_basis(u4.space, a, b, u4.context("C1"))
    A, B = hb.operator_a(a, basis), hb.operator_b(b)
    assert np.allclose(hb.commutator(A, B), [[0, -2], [2, 0]], atol=1e-12)
    assert np.allclose(hb.commutator(B, A), -hb.commutator(A, B), atol=0)
    assert np.array_equal(hb.commutator(B, B), np.zeros((2, 2)))
    a, b = h6.pair()
    basis = hb.build_a_basis(h6.space, a, b, h6.context("Omega"))
    m = hb.commutator(hb.operator_a(a, basis), hb.operator_b(b))
    assert m[0, 1] == pytest.approx(-1.2, abs=1e-12)
    assert np.allclose(m, hb.noncommutativity(a, b, basis), atol=1e-12)
    with pytest.raises(ValueError):
        hb.commutator(np.eye(2), np.eye(3))


def test_expectation_examples(u4):
    a, b = u4.pair()
    B = hb.operator_b(b)
    st = hb.represent(u4.space, a, b, u4.context("C1"))
    assert hb.expectation(B, st) == pytest.approx(-1 / 3, abs=1e-12)
    A = hb.operator_a(a, hb.build_a_basis(u4.space, a, b, u4.context("C1")))
    assert hb.expectation(A, hb.represent(u4.space, a, b, u4.space.omega)) == pytest.approx(0.0, abs=1e-12)
    assert hb.expectation(B, hb.represent(u4.space, a, b, u4.context("B1"))) == -1
    with pytest.raises(ValueError):
        hb.expectation(B, StateVector((-1, 1), [1, 1]))


def test_image_scan_u4(u4):
    scan = hb.image_scan(u4.space, *u4.pair())
    assert scan.scanned == 15 and sum(scan.skipped.values()) == 6
    assert len(scan.states) == 12 and sum(scan.counts) == 18
    assert scan.distance_to([1, 0]) == 0 and scan.distance_to([0, 1]) == 0
    # a point of the sphere far from every image state
    assert scan.distance_to([math.cos(0.3), math.sin(0.3)]) > 0.25


def test_single_context_gives_a_conjugate_pair(u4):
    a, b = u4.pair()
    p = hb.represent(u4.space, a, b, u4.space.omega, "plus")
    m = hb.represent(u4.space, a, b, u4.space.omega, "minus")
    assert not np.allclose(p.amplitudes, m.amplitudes)
    assert np.allclose(p.conj().amplitudes, m.amplitudes, atol=1e-15)
