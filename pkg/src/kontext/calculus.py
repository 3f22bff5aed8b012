"""Transition matrices, interference coefficients and context classification."""

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ._numeric import BOUNDARY_TOL, SUM_TOL, close, is_exact, sqrt_decimal, sqrt_real
from .core import cond_prob, level_partition, measure
from .errors import DegenerateVariableError, KontextError, PositivityError

MAX_SCAN_SUBSETS = 2**24


@dataclass(frozen=True, eq=False)
class Coefficient:
    """The ratio ``numerator / (2 * sqrt(radicand))``.

    Interference coefficients are quotients of a rational perturbation by the
    square root of a rational product. Keeping both parts makes comparisons
    against 1, sign symmetry and equality exact whenever the inputs are
    exact; ``value`` gives the float.
    """

    numerator: object
    radicand: object

    @property
    def exact(self):
        return is_exact(self.numerator, self.radicand)

    @property
    def is_infinite(self):
        return self.radicand == 0 and self.numerator != 0

    @property
    def zero_over_zero(self):
        return self.radicand == 0 and self.numerator == 0

    @property
    def value(self):
        if self.radicand == 0:
            if self.numerator == 0:
                return 0.0
            return math.copysign(math.inf, self.numerator)
        return float(self.numerator) / (2.0 * sqrt_real(self.radicand))

    def __float__(self):
        return self.value

    def decimal(self, prec=50):
        """High-precision value; only meaningful for finite coefficients."""
        from decimal import Decimal, localcontext

        with localcontext() as ctx:
            ctx.prec = prec
            num = Fraction(self.numerator)
            return (Decimal(num.numerator) / Decimal(num.denominator)) / (2 * sqrt_decimal(self.radicand, prec))

    @property
    def squared(self):
        """coefficient**2 as numerator**2 / (4 radicand); exact in exact mode."""
        return self.numerator * self.numerator / (4 * self.radicand)

    def compare_unit(self, tol=BOUNDARY_TOL):
        """-1, 0 or +1 as |c| is below, on or above 1.

        Exact inputs compare exactly; floats treat ``| |c| - 1 | <= tol`` as on.
        """
        if self.is_infinite:
            return 1
        if self.zero_over_zero:
            return -1
        if self.exact:
            lhs = self.numerator * self.numerator
            rhs = 4 * self.radicand
            return (lhs > rhs) - (lhs < rhs)
        mag = abs(self.value)
        if abs(mag - 1.0) <= tol:
            return 0
        return 1 if mag > 1 else -1

    def cos_sin(self, sign=1):
        """(cos t, sin t) with cos t equal to the coefficient and sin t of the given sign.

        Builds the unit phase factor without a round trip through ``acos``, so
        coefficients of exactly 0 and +-1 give exact phase factors.
        """
        cmp = self.compare_unit()
        if cmp > 0:
            raise ValueError(f"|coefficient| = {abs(self.value)!r} > 1 has no trigonometric phase")
        if self.zero_over_zero:
            return 0.0, float(sign)
        if cmp == 0:
            return math.copysign(1.0, self.numerator), 0.0
        if self.exact:
            rest = 1 - self.squared
            return self.value, math.copysign(sqrt_real(rest), sign)
        c = self.value
        return c, math.copysign(math.sqrt(max(0.0, 1.0 - c * c)), sign)

    def __neg__(self):
        return Coefficient(-self.numerator, self.radicand)

    def __eq__(self, other):
        if isinstance(other, Coefficient):
            if self.radicand == 0 or other.radicand == 0:
                return self.value == other.value
            if _sign(self.numerator) != _sign(other.numerator):
                return False
            return self.numerator**2 * other.radicand == other.numerator**2 * self.radicand
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            if self.radicand == 0:
                return self.value == other
            if _sign(self.numerator) != _sign(other):
                return False
            return self.numerator**2 == 4 * self.radicand * other**2
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Coefficient({self.numerator!r} / (2*sqrt({self.radicand!r})) ~ {self.value:.12g})"


def _sign(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class TransitionMatrix:
    """rows[i][j] = P(to = col_labels[j] | from = row_labels[i])."""

    rows: tuple
    row_labels: tuple
    col_labels: tuple

    @property
    def shape(self):
        return len(self.rows), len(self.col_labels)

    @property
    def exact(self):
        return all(is_exact(v) for row in self.rows for v in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def p(self, to_value, from_value):
        """Entry for ``P(to = to_value | from = from_value)``."""
        return self.rows[self.row_labels.index(from_value)][self.col_labels.index(to_value)]

    def row_sums(self):
        return tuple(sum(row) for row in self.rows)

    def column_sums(self):
        return tuple(sum(row[j] for row in self.rows) for j in range(len(self.col_labels)))

    def to_array(self):
        import numpy as np

        return np.array([[float(v) for v in row] for row in self.rows])


def transition_matrix(space, from_var, to_var):
    src = level_partition(space, from_var)
    dst = level_partition(space, to_var)
    rows = []
    for value, cell in zip(src.values, src.cells):
        if measure(space, cell) == 0:
            raise DegenerateVariableError(f"cell {from_var.name}={value!r} has zero measure", value)
        rows.append(tuple(cond_prob(space, target, cell) for target in dst.cells))
    return TransitionMatrix(tuple(rows), src.values, dst.values)


def is_incompatible(space, a, b):
    """True iff every joint level set of ``a`` and ``b`` has positive measure."""
    pa, pb = level_partition(space, a), level_partition(space, b)
    return all(measure(space, ca & cb) > 0 for ca in pa for cb in pb)


def is_double_stochastic(m, tol=SUM_TOL):
    rows, cols = m.shape
    if rows != cols:
        raise ValueError(f"double stochasticity needs a square matrix, got {rows}x{cols}")
    sums = m.row_sums() + m.column_sums()
    return all(close(s, 1, tol) for s in sums)


class ContextClass(str, enum.Enum):
    TRIGONOMETRIC = "Trigonometric"
    HYPERBOLIC = "Hyperbolic"
    MIXED = "Mixed"
    DEGENERATE = "Degenerate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ContextProfile:
    """Probabilities and interference data of one context.

    ``pa``, ``pb`` map spectrum values to conditional probabilities given the
    context; ``delta`` and ``lam`` map b-values to the perturbation of the
    formula of total probability and the interference coefficient. ``lam`` is
    only filled for a dichotomous ``a`` and a nondegenerate context.
    """

    context: frozenset
    transition: TransitionMatrix
    pa: dict | None
    pb: dict | None
    delta: dict | None
    lam: dict | None
    classification: ContextClass
    boundary: bool = False
    reason: str | None = None
    flags: tuple = field(default=())

    @property
    def nondegenerate(self):
        return self.pa is not None and all(v > 0 for v in self.pa.values())

    def lambda_values(self):
        return {x: c.value for x, c in (self.lam or {}).items()}


def context_profile(space, a, b, C, transition=None):
    """Conditional marginals and, for dichotomous ``a``, the interference data of ``C``."""
    C = space.event(C)
    if transition is None:
        transition = transition_matrix(space, a, b)
    if measure(space, C) == 0:
        return ContextProfile(C, transition, None, None, None, None, ContextClass.DEGENERATE, reason="empty-context")
    A, B = level_partition(space, a), level_partition(space, b)
    pa = {y: cond_prob(space, cell, C) for y, cell in zip(A.values, A.cells)}
    pb = {x: cond_prob(space, cell, C) for x, cell in zip(B.values, B.cells)}
    delta = {x: pb[x] - sum(pa[y] * transition.p(x, y) for y in A.values) for x in B.values}
    if any(v == 0 for v in pa.values()):
        return ContextProfile(C, transition, pa, pb, delta, None, ContextClass.DEGENERATE, reason="zero-cell-intersection")
    if not a.dichotomous:
        return ContextProfile(C, transition, pa, pb, delta, None, ContextClass.DEGENERATE, reason="a-not-dichotomous")

    lam, flags = {}, []
    for x in B.values:
        radicand = 1
        for y in A.values:
            radicand = radicand * pa[y] * transition.p(x, y)
        c = Coefficient(delta[x], radicand)
        if c.zero_over_zero:
            flags.append(f"lambda({x!r}) = 0/0 set to 0")
        lam[x] = c
    tag, boundary, reason = _classify_coefficients(list(lam.values()))
    return ContextProfile(C, transition, pa, pb, delta, lam, tag, boundary, reason, tuple(flags))


def _classify_coefficients(coefs):
    infinite = [c.is_infinite for c in coefs]
    if all(infinite):
        return ContextClass.DEGENERATE, False, "infinite-lambda"
    if any(infinite):
        return ContextClass.DEGENERATE, False, "lambda-partially-undefined"
    cmps = [c.compare_unit() for c in coefs]
    boundary = 0 in cmps
    if all(s <= 0 for s in cmps):
        return ContextClass.TRIGONOMETRIC, boundary, None
    if all(s >= 0 for s in cmps):
        return ContextClass.HYPERBOLIC, boundary, None
    return ContextClass.MIXED, boundary, None


def interference_lambda(space, a, b, C):
    """Profile of ``C`` including the interference coefficients of both b-outcomes.

    Degenerate contexts are returned with tag ``DEGENERATE`` and no
    coefficients rather than raising.
    """
    if not a.dichotomous:
        raise ValueError(f"interference coefficients need a dichotomous a; {a.name!r} has {len(a)} values")
    return context_profile(space, a, b, C)


def classify(space, a, b, C):
    return interference_lambda(space, a, b, C).classification


def contextual_delta(space, B, D1, D2, C):
    """Perturbation P(B(D1 u D2)|C) - sum_j P(B|D_j) P(D_j|C) for disjoint D1, D2."""
    B, D1, D2, C = map(frozenset, (B, D1, D2, C))
    if D1 & D2:
        raise ValueError("D1 and D2 must be disjoint")
    lhs = cond_prob(space, B & (D1 | D2), C)
    return lhs - sum(cond_prob(space, B, D) * cond_prob(space, D, C) for D in (D1, D2))


def contextual_delta_split(space, B, D1, D2, C):
    """The same perturbation written as sum_j P(D_j|C) (P(B|D_j C) - P(B|D_j))."""
    B, D1, D2, C = map(frozenset, (B, D1, D2, C))
    return sum(cond_prob(space, D, C) * (cond_prob(space, B, D & C) - cond_prob(space, B, D)) for D in (D1, D2))


def contextual_lambda(space, B, D1, D2, C):
    """Interference coefficient of ``B`` with respect to the pair ``{D1, D2}`` in ``C``."""
    B, D1, D2, C = map(frozenset, (B, D1, D2, C))
    radicand = 1
    for D in (D1, D2):
        radicand = radicand * cond_prob(space, B, D) * cond_prob(space, D, C)
    return Coefficient(contextual_delta(space, B, D1, D2, C), radicand)


def interference_mu(space, B, D1, D2, C):
    """Coefficient of the split P(B(D1 u D2)|C) = P(B|D1)P(D1|C) + P(BD2|C) + 2 mu sqrt(...)."""
    B, D1, D2, C = map(frozenset, (B, D1, D2, C))
    if D1 & D2:
        raise ValueError("D1 and D2 must be disjoint")
    if measure(space, B & D1) == 0:
        raise PositivityError("P(B D1) = 0", "P(B D1)")
    if measure(space, C & D1) == 0:
        raise PositivityError("P(C D1) = 0", "P(C D1)")
    if measure(space, B & D2 & C) == 0:
        raise PositivityError("P(B D2 C) = 0", "P(B D2 C)")
    head = cond_prob(space, B, D1) * cond_prob(space, D1, C)
    tail = cond_prob(space, B & D2, C)
    total = cond_prob(space, B & (D1 | D2), C)
    return Coefficient(total - head - tail, head * tail)


@dataclass(frozen=True)
class SymmetryReport:
    both_double_stochastic: bool
    symmetric: bool
    uniform_marginals: bool

    @property
    def equivalent(self):
        return self.both_double_stochastic == self.symmetric == self.uniform_marginals


def check_symmetry_lemma(space, a, b, tol=SUM_TOL):
    """Double stochasticity of both transition matrices, symmetry, uniform marginals."""
    ba = transition_matrix(space, a, b)
    ab = transition_matrix(space, b, a)
    both = is_double_stochastic(ba, tol) and is_double_stochastic(ab, tol)
    symmetric = all(close(ba.p(x, y), ab.p(y, x), tol) for x in b.spectrum for y in a.spectrum)
    uniform = True
    for v in (a, b):
        part = level_partition(space, v)
        n = len(part)
        target = Fraction(1, n) if space.exact else 1.0 / n
        uniform = uniform and all(close(measure(space, cell), target, tol) for cell in part)
    return SymmetryReport(both, symmetric, uniform)


def selection_context_lambda(space, a, b, x):
    """Interference coefficient of ``B_x`` in its own selection context ``B_x``.

    Requires both transition matrices to be double stochastic, in which case
    the result equals 1.
    """
    ba = transition_matrix(space, a, b)
    ab = transition_matrix(space, b, a)
    if not (is_double_stochastic(ba) and is_double_stochastic(ab)):
        raise KontextError("selection-context coefficient needs both transition matrices double stochastic")
    cell = level_partition(space, b).cell(x)
    profile = interference_lambda(space, a, b, cell)
    if profile.lam is None:
        raise KontextError(f"selection context b={x!r} is degenerate with respect to a")
    return profile.lam[x]


def enumerate_contexts(space, max_size=None):
    """All nonempty subsets of the sample space up to ``max_size`` points, smallest first."""
    n = len(space.points)
    top = n if max_size is None else min(max_size, n)
    count = sum(math.comb(n, k) for k in range(1, top + 1))
    if count > MAX_SCAN_SUBSETS:
        raise KontextError(f"{count} subsets exceed the scan limit of {MAX_SCAN_SUBSETS}")
    for k in range(1, top + 1):
        for combo in itertools.combinations(space.points, k):
            yield frozenset(combo)


@dataclass
class Census:
    counts: dict
    witnesses: dict
    boundary: int
    total: int
    expected: int

    @property
    def conserved(self):
        return sum(self.counts.values()) == self.total == self.expected


def census(space, a, b, max_size=None):
    """Classify every context of the sample space and tally the classes."""
    n = len(space.points)
    top = n if max_size is None else min(max_size, n)
    expected = sum(math.comb(n, k) for k in range(1, top + 1))
    transition = transition_matrix(space, a, b)
    counts = {tag: 0 for tag in ContextClass}
    witnesses = {}
    boundary = total = 0
    for ctx in enumerate_contexts(space, max_size):
        prof = context_profile(space, a, b, ctx, transition)
        counts[prof.classification] += 1
        witnesses.setdefault(prof.classification, ctx)
        boundary += prof.boundary
        total += 1
    return Census(counts, witnesses, boundary, total, expected)
