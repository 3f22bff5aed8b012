from fractions import Fraction

import pytest

from kontext.calculus import interference_lambda
from kontext.oracle import ftp_residual, oracle_record


def test_u4_c1(u4_data):
    rec = oracle_record(u4_data, context=["w1", "w3", "w4"])
    lam = rec["lambda"][-1]
    assert lam["numerator"] == Fraction(1, 6) and lam["radicand"] == Fraction(1, 18)
    assert lam["value"] == pytest.approx(2**0.5 / 4, abs=1e-15)
    assert rec["born_residual"][-1] <= 1e-12


def test_h6_hyperbolic(h6_data):
    rec = oracle_record(h6_data, context=["w1", "w5"])
    assert rec["lambda"][-1]["value"] == pytest.approx(5 / 3, abs=1e-12)
    assert -1 not in rec["born_residual"]


def test_u4_whole_space(u4_data):
    assert oracle_record(u4_data)["delta"] == {-1: 0, 1: 0}


@pytest.mark.parametrize("fixture,ctx", [("u4", "C1"), ("h6", "C_hyp"), ("h6", "B2"), ("u4", "Omega")])
def test_module_agreement(request, fixture, ctx):
    model = request.getfixturevalue(fixture)
    data = request.getfixturevalue(fixture + "_data")
    a, b = model.pair()
    prof = interference_lambda(model.space, a, b, model.context(ctx))
    rec = oracle_record(data, context=sorted(model.context(ctx)))
    assert rec["pa"] == prof.pa and rec["pb"] == prof.pb and rec["delta"] == prof.delta
    for x in b.spectrum:
        assert rec["lambda"][x]["numerator"] == prof.lam[x].numerator
        assert rec["lambda"][x]["radicand"] == prof.lam[x].radicand


def test_u9_mu_steps(u9):
    from kontext.fixtures import fixture_data

    rec = oracle_record(fixture_data("U9"))
    for x in (0, 1, 2):
        assert [s["numerator"] for s in rec["mu"][x]] == [0, 0]
        assert rec["final_lambda"][x]["numerator"] == 0


def test_ftp_residual_is_exact_zero(h6_data):
    assert ftp_residual(h6_data, ("a", "b"), ["w1", "w5"]) == {-1: 0, 1: 0}
