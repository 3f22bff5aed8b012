"""Complex amplitudes for trigonometric contexts.

The amplitude of an outcome is sqrt(A) + exp(i theta) sqrt(B) with
cos(theta) equal to the interference coefficient, so its squared modulus
returns the contextual probability. A fixed context also determines an
orthonormal basis for a, and every other trigonometric context obeys the
Born rule in that same basis.
"""

import numpy as np

from kontext import load_fixture
from kontext import hilbert as hb
from kontext.calculus import ContextClass, enumerate_contexts, interference_lambda

np.set_printoptions(precision=6, suppress=True)
model = load_fixture("U4")
a, b = model.pair()

C = model.context("C1")
state = hb.represent(model.space, a, b, C)
print("phi_C1 =", state.amplitudes, " |phi|^2 =", np.abs(state.amplitudes) ** 2)
print("theta =", state.phases.theta)

basis = hb.build_a_basis(model.space, a, b, C)
print("\nchange of basis V =\n", basis.V, "\nunitarity defect", basis.unitarity_defect())

worst = 0.0
for ctx in enumerate_contexts(model.space):
    if interference_lambda(model.space, a, b, ctx).classification is ContextClass.TRIGONOMETRIC:
        worst = max(worst, hb.born_a_residual(model.space, a, b, ctx, None, basis=basis))
print("largest Born residual in the a-basis over all trigonometric contexts:", worst)

scan = hb.image_scan(model.space, a, b)
print(f"\n{len(scan.states)} distinct states from {scan.scanned} contexts; skipped {sum(scan.skipped.values())}")
