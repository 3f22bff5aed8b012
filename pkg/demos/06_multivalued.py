"""Three-valued reference variables by repeated two-way splitting.

The a-cells are peeled off in ascending order; every split contributes a
coefficient and a phase, and the phases add up to one amplitude per
outcome. A seeded random model shows that the construction fails once a
coefficient leaves [-1, 1].
"""

from kontext import load_fixture, represent_multivalued
from kontext.calculus import context_profile
from kontext.errors import NonRepresentableError
from kontext.model_io import parse_model, random_model
from kontext.multivalued import interference_expansion

model = load_fixture("U9")
a, b = model.pair()
multi = represent_multivalued(model.space, a, b, model.space.omega)
for x, tr in multi.traces.items():
    steps = "; ".join(f"{s.kind} {s.coefficient.value:+.3f} gamma {s.gamma:.4f}" for s in tr.steps)
    print(f"b={x}: |phi|^2 = {abs(multi.amplitude(x)) ** 2:.12f}  betas {tuple(round(v, 6) for v in tr.betas)}  [{steps}]")

rnd = parse_model(random_model(12, 3, 3, seed=7))
a, b = rnd.pair()
ok = bad = 0
for k in range(1, 2 ** 12):
    C = frozenset(p for i, p in enumerate(rnd.space.points) if k >> i & 1)
    prof = context_profile(rnd.space, a, b, C)
    if not prof.nondegenerate:
        continue
    try:
        m = represent_multivalued(rnd.space, a, b, C, profile=prof)
    except NonRepresentableError:
        bad += 1
        continue
    ok += 1
    assert interference_expansion(m, prof) < 1e-10
print(f"\nrandom 3x3 model: {ok} representable contexts, {bad} refused")
