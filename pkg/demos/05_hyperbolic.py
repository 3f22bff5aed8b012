"""Split-complex amplitudes for a context with |lambda| > 1.

With j*j = +1 the squared modulus is re^2 - hy^2, and a cosh phase lets the
amplitude reproduce probabilities that a unit complex phase cannot.
"""

from kontext import load_fixture, represent_hyperbolic
from kontext.hyperbolic import split_modulus

model = load_fixture("H6")
a, b = model.pair()
hs = represent_hyperbolic(model.space, a, b, model.context("C_hyp"))
for x in b.spectrum:
    z = hs.amplitudes[x]
    print(f"b={x:+d}: z = {z.re:.6f} {z.hy:+.6f} j  sign {hs.sign[x]:+d}  theta {hs.theta[x]:.12f}")
    print(f"       z conj(z) exact = {hs.born[x]}, float = {split_modulus(z):.3e}")
print(hs.note)
