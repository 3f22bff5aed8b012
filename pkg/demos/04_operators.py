"""Operators for the two reference variables and their commutator.

b acts diagonally on its own delta basis; a is diagonal in the basis built
from a context. Incompatible variables give non-commuting operators.
"""

import numpy as np

from kontext import load_fixture
from kontext import hilbert as hb

np.set_printoptions(precision=6, suppress=True)
for name, ctx in (("U4", "C1"), ("H6", "Omega")):
    model = load_fixture(name)
    a, b = model.pair()
    basis = hb.build_a_basis(model.space, a, b, model.context(ctx))
    A, B = hb.operator_a(a, basis), hb.operator_b(b)
    print(f"{name}: a_hat =\n{A.matrix.real}\nb_hat =\n{B.matrix.real}")
    print("a_hat b_hat - b_hat a_hat =\n", hb.commutator(A, B).real)
    print("closed form             =\n", hb.noncommutativity(a, b, basis).real, "\n")
