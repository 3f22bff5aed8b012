"""Complex amplitudes for n-valued reference variables by repeated dichotomous splitting.

For an outcome ``x`` of ``b`` the a-cells are peeled off in ascending order.
With ``h_j = p(x|a_j) P(a_j|C)`` and the tail ``T_j = P(b=x, a in {a_j..a_n} | C)``
each step writes ``T_j = h_j + T_{j+1} + 2 mu_j sqrt(h_j T_{j+1})`` and the
last one ``T_{n-1} = h_{n-1} + h_n + 2 lambda sqrt(h_{n-1} h_n)``. The phases
of these splits telescope into

    phi_C(x) = sum_j exp(i beta_j(x)) sqrt(h_j),   beta_1 = 0.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from ._numeric import clamp_unit, sqrt_real
from .calculus import Coefficient, context_profile, is_incompatible
from .core import cond_prob, level_partition, measure
from .errors import DegenerateContextError, IncompatibilityError, NonRepresentableError
from .hilbert import Branch


@dataclass(frozen=True)
class SplitStep:
    j: int
    kind: str
    tail_prob: object
    head: object
    rest: object
    coefficient: Coefficient
    gamma: float
    alpha: float | None
    beta: float
    flag: str | None = None


@dataclass(frozen=True)
class SplitTrace:
    outcome: object
    order: tuple
    steps: tuple
    final_theta: float
    betas: tuple
    branch: Branch

    @property
    def mus(self):
        return tuple(s.coefficient for s in self.steps if s.kind == "mu")


def _alpha(head, coef, rest, total, sign):
    """arg of sqrt(head) + e^{i gamma} sqrt(rest) from the cosine of the split."""
    n = sqrt_real(total)
    if n == 0:
        return 0.0, "zero amplitude: phase set to 0"
    if coef.zero_over_zero:
        m = sqrt_real(head)
    else:
        m = sqrt_real(head) + coef.value * sqrt_real(rest)
    return sign * math.acos(clamp_unit(m / n)), None


def split_trace(space, a, b, C, x, branch=Branch.PLUS):
    branch = Branch(branch)
    sign = branch.sign
    C = space.event(C)
    if not is_incompatible(space, a, b):
        raise IncompatibilityError(f"{a.name!r} and {b.name!r} are not incompatible")
    A = level_partition(space, a)
    bad = [y for y, cell in zip(A.values, A.cells) if measure(space, cell & C) == 0]
    if bad:
        raise DegenerateContextError(f"context misses the a-cells {bad}", bad)
    Bx = level_partition(space, b).cell(x)
    n = len(A)
    heads = [cond_prob(space, Bx, cell) * cond_prob(space, cell, C) for cell in A.cells]
    tails = []
    for j in range(n):
        union = frozenset().union(*A.cells[j:])
        tails.append(cond_prob(space, Bx & union, C))

    gammas, coefs, flags = [], [], []
    for j in range(n - 2):
        rest = tails[j + 1]
        coef = Coefficient(tails[j] - heads[j] - rest, heads[j] * rest)
        flag = None
        if coef.zero_over_zero:
            gamma = sign * math.pi / 2
            flag = "zero tail: gamma set to pi/2"
        elif coef.compare_unit() > 0:
            raise NonRepresentableError(
                f"|mu| = {abs(coef.value):.6g} > 1 at step {j + 1} for outcome {x!r}", j + 1, x, coef
            )
        else:
            c, s = coef.cos_sin(sign)
            gamma = math.atan2(s, c)
        gammas.append(gamma)
        coefs.append(coef)
        flags.append(flag)

    if n > 2 and measure(space, Bx & A.cells[-1] & C) == 0:
        raise NonRepresentableError(
            f"P(b={x!r}, a={A.values[-1]!r} | C) = 0 violates the positivity of the last split", n - 1, x, None
        )
    last = Coefficient(tails[n - 2] - heads[n - 2] - heads[n - 1], heads[n - 2] * heads[n - 1])
    if last.compare_unit() > 0:
        raise NonRepresentableError(
            f"|lambda| = {abs(last.value):.6g} > 1 at step {n - 1} for outcome {x!r}", n - 1, x, last
        )
    c, s = last.cos_sin(sign)
    theta = math.atan2(s, c)
    gammas.append(theta)
    coefs.append(last)
    flags.append(None)

    alphas = [None]
    for j in range(1, n - 1):
        rest = tails[j + 1] if j < n - 2 else heads[n - 1]
        alpha, note = _alpha(heads[j], coefs[j], rest, tails[j], sign)
        alphas.append(alpha)
        if note:
            flags[j] = note if flags[j] is None else f"{flags[j]}; {note}"

    betas = [0.0]
    for j in range(n - 2):
        betas.append(betas[j] + gammas[j] - alphas[j + 1])
    betas.append(betas[n - 2] + theta)

    steps = []
    for j in range(n - 1):
        kind = "mu" if j < n - 2 else "lambda"
        rest = tails[j + 1] if kind == "mu" else heads[n - 1]
        steps.append(SplitStep(j + 1, kind, tails[j], heads[j], rest, coefs[j], gammas[j], alphas[j], betas[j], flags[j]))
    return SplitTrace(x, A.values, tuple(steps), theta, tuple(betas), branch)


@dataclass(frozen=True, eq=False)
class MultiAmplitude:
    labels: tuple
    amplitudes: np.ndarray
    betas: dict
    order: tuple
    traces: dict = field(repr=False)
    context: frozenset | None = None

    def amplitude(self, x):
        return complex(self.amplitudes[self.labels.index(x)])

    def born_residual(self, pb):
        return max(abs(abs(self.amplitude(x)) ** 2 - float(pb[x])) for x in self.labels)


def represent_multivalued(space, a, b, C, branch=Branch.PLUS, profile=None):
    """Amplitude phi_C(x) = sum_y exp(i beta(x, y)) sqrt(P(a=y|C) p(x|y)) for every outcome.

    Raises ``NonRepresentableError`` carrying ``failures`` (outcome -> error)
    when any outcome has a splitting coefficient outside [-1, 1].
    """
    if profile is None:
        profile = context_profile(space, a, b, C)
    traces, failures = {}, {}
    for x in b.spectrum:
        try:
            traces[x] = split_trace(space, a, b, C, x, branch)
        except NonRepresentableError as exc:
            failures[x] = exc
    if failures:
        first = next(iter(failures.values()))
        err = NonRepresentableError(
            "; ".join(str(e) for e in failures.values()), first.step, first.outcome, first.coefficient
        )
        err.failures = failures
        err.traces = traces
        raise err
    trans = profile.transition
    amps, betas = [], {}
    for x in b.spectrum:
        tr = traces[x]
        z = 0j
        for y, beta in zip(a.spectrum, tr.betas):
            betas[(x, y)] = beta
            z += cmath.exp(1j * beta) * sqrt_real(profile.pa[y] * trans.p(x, y))
        amps.append(z)
    return MultiAmplitude(b.spectrum, np.array(amps), betas, a.spectrum, traces, profile.context)


def interference_expansion(m, profile):
    """max_x |sum_y P(a=y|C)p(x|y) + 2 sum_{y1<y2} cos(beta_2 - beta_1) sqrt(...) - P(b=x|C)|."""
    trans = profile.transition
    worst = 0.0
    for x in m.labels:
        terms = [float(profile.pa[y] * trans.p(x, y)) for y in m.order]
        total = sum(terms)
        for i in range(len(m.order)):
            for k in range(i + 1, len(m.order)):
                dphi = m.betas[(x, m.order[k])] - m.betas[(x, m.order[i])]
                total += 2.0 * math.cos(dphi) * math.sqrt(terms[i] * terms[k])
        worst = max(worst, abs(total - float(profile.pb[x])))
    return worst


__all__ = [
    "MultiAmplitude",
    "SplitStep",
    "SplitTrace",
    "interference_expansion",
    "represent_multivalued",
    "split_trace",
]
