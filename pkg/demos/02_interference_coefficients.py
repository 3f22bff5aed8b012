"""Interference coefficients and the context census.

Each context gets a normalised perturbation per outcome of b. Where both
coefficients sit in [-1, 1] the context is trigonometric; outside it is
hyperbolic. Scanning every subset of the six-point model shows all classes.
"""

from kontext import census, load_fixture
from kontext.calculus import ContextClass, interference_lambda

model = load_fixture("H6")
a, b = model.pair()

for name, C in model.contexts.items():
    prof = interference_lambda(model.space, a, b, C)
    lams = ", ".join(f"{x:+d}: {c.value:+.6f}" for x, c in prof.lam.items())
    print(f"{name:6s} {prof.classification.value:13s} boundary={prof.boundary!s:5s} lambda {{{lams}}}")

cen = census(model.space, a, b)
print(f"\n{cen.total} nonempty contexts:")
for tag in ContextClass:
    print(f"  {tag.value:13s} {cen.counts[tag]:3d}  e.g. {sorted(cen.witnesses.get(tag, ())) or '-'}")
