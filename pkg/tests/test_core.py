from fractions import Fraction

import pytest

from kontext.core import FiniteSpace, RandomVariable, classical_ftp_residual, cond_prob, level_partition, measure
from kontext.errors import DegenerateContextError, ModelError


def test_measure_examples(u4):
    assert measure(u4.space, u4.space.omega) == 1
    assert measure(u4.space, {"w1", "w3"}) == Fraction(1, 2)
    assert measure(u4.space, frozenset()) == 0


def test_measure_unknown_point(u4):
    with pytest.raises(ModelError):
        measure(u4.space, {"w9"})


def test_cond_prob_examples(u4):
    s = u4.space
    assert cond_prob(s, {"w1", "w3"}, s.omega) == Fraction(1, 2)
    assert cond_prob(s, {"w1"}, {"w1", "w3", "w4"}) == Fraction(1, 3)
    C = {"w2", "w4"}
    assert cond_prob(s, C, C) == 1


def test_cond_prob_on_null_event_raises(u4):
    with pytest.raises(DegenerateContextError):
        cond_prob(u4.space, {"w1"}, set())


def test_level_partitions(u4):
    a, b = u4.pair()
    assert level_partition(u4.space, a).cells == (frozenset({"w1", "w2"}), frozenset({"w3", "w4"}))
    assert level_partition(u4.space, b).cells == (frozenset({"w1", "w3"}), frozenset({"w2", "w4"}))
    assert level_partition(u4.space, a).cell(1) == frozenset({"w3", "w4"})


def test_constant_variable_rejected():
    with pytest.raises(ModelError):
        RandomVariable("c", {"w1": 3, "w2": 3})


def test_spectrum_is_ascending():
    v = RandomVariable("v", {"p": 5, "q": -2, "r": 0})
    assert v.spectrum == (-2, 0, 5)
    assert not v.dichotomous


@pytest.mark.parametrize(
    "weights",
    [
        {"w1": "1/2", "w2": "1/3"},
        {"w1": "3/2", "w2": "-1/2"},
        {"w1": "abc", "w2": "1"},
    ],
)
def test_bad_spaces_rejected(weights):
    with pytest.raises(ModelError):
        FiniteSpace.from_weights(weights)


def test_duplicate_points_rejected():
    with pytest.raises(ModelError):
        FiniteSpace(("w1", "w1"), {"w1": Fraction(1)})


def test_float_mode_tolerance():
    s = FiniteSpace.from_weights({"w1": 0.1, "w2": 0.2, "w3": 0.7}, exact=False)
    assert not s.exact
    assert abs(measure(s, s.omega) - 1.0) < 1e-12
    with pytest.raises(ModelError):
        FiniteSpace.from_weights({"w1": 0.5, "w2": 0.5 + 1e-9}, exact=False)


def test_decimal_weights_are_read_as_decimals():
    s = FiniteSpace.from_weights({"w1": 0.1, "w2": 0.9})
    assert s.weights["w1"] == Fraction(1, 10)


def test_ftp_residual_examples(u4, h6):
    a, b = u4.pair()
    A = level_partition(u4.space, a).cells
    B1 = level_partition(u4.space, b).cell(-1)
    assert classical_ftp_residual(u4.space, B1, A, u4.space.omega) == 0
    assert classical_ftp_residual(u4.space, B1, A, u4.context("C1")) == 0
    a, b = h6.pair()
    A = level_partition(h6.space, a).cells
    r = classical_ftp_residual(h6.space, level_partition(h6.space, b).cell(-1), A, h6.context("C_hyp"))
    assert r == 0 and isinstance(r, Fraction)


def test_ftp_residual_names_degenerate_cells(u4):
    a, b = u4.pair()
    A = level_partition(u4.space, a).cells
    with pytest.raises(DegenerateContextError) as exc:
        classical_ftp_residual(u4.space, {"w1"}, A, {"w1"})
    assert exc.value.cells == (1,)


def test_relabel_keeps_measure(u4):
    mapping = {p: p.upper() for p in u4.space.points}
    s2 = u4.space.relabel(mapping)
    assert measure(s2, {"W1", "W3"}) == measure(u4.space, {"w1", "w3"})
