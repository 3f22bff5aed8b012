"""Conditioning on a context versus conditioning on the cells of a partition.

On the uniform four-point model the classical total-probability sum is an
identity for every context, while the "selection" version (which uses the
unconditioned transition probabilities) picks up a perturbation term.
"""

from kontext import load_fixture
from kontext.calculus import context_profile
from kontext.core import classical_ftp_residual, level_partition

model = load_fixture("U4")
a, b = model.pair()
A = level_partition(model.space, a)

for name in ("Omega", "C1", "B1"):
    C = model.context(name)
    prof = context_profile(model.space, a, b, C)
    print(f"context {name}: {sorted(C)}")
    for x, cell in zip(b.spectrum, level_partition(model.space, b).cells):
        classical = classical_ftp_residual(model.space, cell, A.cells, C)
        print(f"  b={x:+d}  P(b|C)={prof.pb[x]}  classical residual={classical}  perturbation={prof.delta[x]}")
