"""Hyperbolic interference: split-complex amplitudes for contexts with |lambda| >= 1.

Only amplitudes and the per-outcome Born identity are built here; there is
no hyperbolic a-basis or operator representation.
"""

import math
from dataclasses import dataclass

from ._numeric import BOUNDARY_TOL, sqrt_real
from .calculus import Coefficient, ContextClass, interference_lambda
from .errors import ClassificationError, DomainError


@dataclass(frozen=True)
class SplitComplex:
    """``re + j*hy`` with ``j*j = +1``."""

    re: float
    hy: float = 0.0

    def __add__(self, other):
        other = _lift(other)
        return SplitComplex(self.re + other.re, self.hy + other.hy)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        return SplitComplex(self.re - other.re, self.hy - other.hy)

    def __mul__(self, other):
        other = _lift(other)
        return SplitComplex(self.re * other.re + self.hy * other.hy, self.re * other.hy + self.hy * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return SplitComplex(-self.re, -self.hy)

    def conj(self):
        return SplitComplex(self.re, -self.hy)

    def modulus(self):
        return split_modulus(self)


def _lift(x):
    return x if isinstance(x, SplitComplex) else SplitComplex(x, 0.0)


def split_modulus(z):
    """z * conj(z) = re^2 - hy^2; negative for time-like elements."""
    return z.re * z.re - z.hy * z.hy


def hyperbolic_unit(theta, sign=1):
    """sign * (cosh theta + j sinh theta)."""
    return SplitComplex(sign * math.cosh(theta), sign * math.sinh(theta))


def hyperbolic_phase(lambda_value):
    """(sign, theta) with sign * cosh(theta) = lambda and theta >= 0."""
    if isinstance(lambda_value, Coefficient):
        if lambda_value.is_infinite:
            raise DomainError("infinite coefficient has no hyperbolic phase")
        cmp = lambda_value.compare_unit()
        if cmp < 0:
            raise DomainError(f"|lambda| = {abs(lambda_value.value)!r} < 1; use the trigonometric representation")
        sign = 1 if lambda_value.numerator > 0 else -1
        if cmp == 0:
            return sign, 0.0
        return sign, math.acosh(abs(lambda_value.value))
    lam = float(lambda_value)
    mag = abs(lam)
    if mag < 1.0 - BOUNDARY_TOL:
        raise DomainError(f"|lambda| = {mag!r} < 1; use the trigonometric representation")
    sign = 1 if lam >= 0 else -1
    return sign, math.acosh(max(mag, 1.0))


def split_amplitude(head, tail, coefficient):
    """Split-complex z with z conj(z) = head + tail + 2 lambda sqrt(head tail).

    ``head`` and ``tail`` are the two classical terms P(a_1|C)p(x|a_1) and
    P(a_2|C)p(x|a_2); ``coefficient`` has |lambda| >= 1.
    """
    sign, theta = hyperbolic_phase(coefficient)
    if isinstance(coefficient, Coefficient) and coefficient.exact and theta > 0:
        cosh, sinh = abs(coefficient.value), sqrt_real(coefficient.squared - 1)
    else:
        cosh, sinh = math.cosh(theta), math.sinh(theta)
    rt = sqrt_real(tail)
    return SplitComplex(sqrt_real(head) + sign * cosh * rt, sign * sinh * rt), sign, theta


@dataclass(frozen=True)
class HyperbolicState:
    """Per-outcome split-complex amplitudes.

    ``born`` is z conj(z) evaluated from the exact squared parts
    ``re^2 = (2h + d)^2 / 4h`` and ``hy^2 = d^2 / 4h - t`` (h, t the two
    classical terms, d the perturbation) when the model is exact, and from
    the float amplitudes otherwise.
    """

    labels: tuple
    amplitudes: dict
    theta: dict
    sign: dict
    born: dict
    context: frozenset
    note: str = "amplitudes and Born identity only; no hyperbolic basis or operators"

    def residual(self, pb):
        return max(abs(split_modulus(self.amplitudes[x]) - float(pb[x])) for x in self.labels)


def represent_hyperbolic(space, a, b, C, profile=None):
    if profile is None:
        profile = interference_lambda(space, a, b, C)
    if profile.classification is not ContextClass.HYPERBOLIC:
        raise ClassificationError(
            f"context is {profile.classification.value}, not hyperbolic",
            profile.classification,
            profile.lambda_values(),
        )
    y1, y2 = a.spectrum
    trans = profile.transition
    amps, theta, sign, born = {}, {}, {}, {}
    for x in b.spectrum:
        head = profile.pa[y1] * trans.p(x, y1)
        tail = profile.pa[y2] * trans.p(x, y2)
        coef = profile.lam[x]
        z, s, t = split_amplitude(head, tail, coef)
        amps[x], sign[x], theta[x] = z, s, t
        if coef.exact:
            d = profile.delta[x]
            re_sq = (2 * head + d) ** 2 / (4 * head)
            hy_sq = d * d / (4 * head) - tail
            born[x] = re_sq - hy_sq
        else:
            born[x] = split_modulus(z)
    return HyperbolicState(b.spectrum, amps, theta, sign, born, profile.context)


__all__ = [
    "HyperbolicState",
    "SplitComplex",
    "hyperbolic_phase",
    "hyperbolic_unit",
    "represent_hyperbolic",
    "split_amplitude",
    "split_modulus",
]
