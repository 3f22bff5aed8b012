"""Complex amplitudes for trigonometric contexts, the a-basis and the observables.

States are dense complex vectors in the delta-function basis of the
b-spectrum, with the inner product ``(phi, psi) = sum_x phi(x) conj(psi(x))``.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._numeric import SUM_TOL, close, sqrt_real
from .calculus import (
    ContextClass,
    enumerate_contexts,
    interference_lambda,
    context_profile,
    is_double_stochastic,
    transition_matrix,
)
from .errors import ClassificationError, ConventionError, NotDoublyStochasticError

TWO_PI = 2.0 * math.pi


class Branch(str, enum.Enum):
    """Sign choice in theta = +-arccos(lambda); ``PLUS`` keeps theta(b_1) in [0, pi]."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self):
        return 1.0 if self is Branch.PLUS else -1.0

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PhaseAssignment:
    theta: dict
    branch: Branch
    canonical: bool
    factors: dict

    def relative(self, other):
        """theta - other.theta per outcome, reduced to [0, 2 pi)."""
        return {x: (self.theta[x] - other.theta[x]) % TWO_PI for x in self.theta}


@dataclass(frozen=True, eq=False)
class StateVector:
    labels: tuple
    amplitudes: np.ndarray
    phases: PhaseAssignment | None = None
    context: frozenset | None = None

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", np.asarray(self.amplitudes, dtype=complex))

    @property
    def norm(self):
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def amplitude(self, x):
        return complex(self.amplitudes[self.labels.index(x)])

    def probabilities(self):
        return {x: float(abs(z) ** 2) for x, z in zip(self.labels, self.amplitudes)}

    def inner(self, other):
        """(self, other) = sum_x self(x) conj(other(x))."""
        other = other.amplitudes if isinstance(other, StateVector) else np.asarray(other)
        return complex(np.vdot(other, self.amplitudes))

    def conj(self):
        return StateVector(self.labels, self.amplitudes.conj(), None, self.context)


def _require_trigonometric(profile):
    if profile.classification is not ContextClass.TRIGONOMETRIC:
        raise ClassificationError(
            f"context is {profile.classification.value}, not trigonometric",
            profile.classification,
            profile.lambda_values(),
        )


def _phases(profile, branch, canonical):
    sign = Branch(branch).sign
    labels = tuple(profile.pb)
    factors = {}
    if canonical:
        if len(labels) != 2:
            raise ConventionError("the canonical phase convention needs a dichotomous b")
        x1, x2 = labels
        l1, l2 = profile.lam[x1], profile.lam[x2]
        if l1.exact and l2.exact:
            symmetric = l2 == -l1
        else:
            symmetric = abs(l1.value + l2.value) <= 1e-9
        if not symmetric:
            raise ConventionError(f"lambda(b_2) = {l2.value!r} is not -lambda(b_1) = {-l1.value!r}")
        c, s = l1.cos_sin(sign)
        factors[x1] = complex(c, s)
        factors[x2] = -factors[x1]
    else:
        for x in labels:
            c, s = profile.lam[x].cos_sin(sign)
            factors[x] = complex(c, s)
    theta = {x: math.atan2(f.imag, f.real) % TWO_PI for x, f in factors.items()}
    return PhaseAssignment(theta, Branch(branch), canonical, factors)


def represent(space, a, b, C, branch=Branch.PLUS, convention=None, profile=None):
    """Wave function of a trigonometric context.

    ``convention`` is ``"canonical"`` (theta(b_2) = theta(b_1) + pi, needs a
    double stochastic P(b|a)), ``"independent"`` (each outcome gets its own
    +-arccos lambda) or ``None`` to pick canonical whenever it is available.
    """
    if profile is None:
        profile = interference_lambda(space, a, b, C)
    _require_trigonometric(profile)
    trans = profile.transition
    ds = b.dichotomous and is_double_stochastic(trans)
    if convention is None:
        canonical = ds
    elif convention == "canonical":
        if not ds:
            raise ConventionError(
                f"canonical phases need a double stochastic P(b|a); column sums {trans.column_sums()}"
            )
        canonical = True
    elif convention == "independent":
        canonical = False
    else:
        raise ValueError(f"unknown convention {convention!r}")
    phases = _phases(profile, branch, canonical)
    y1, y2 = a.spectrum
    amps = []
    for x in b.spectrum:
        head = sqrt_real(profile.pa[y1] * trans.p(x, y1))
        tail = sqrt_real(profile.pa[y2] * trans.p(x, y2))
        amps.append(head + phases.factors[x] * tail)
    return StateVector(b.spectrum, np.array(amps), phases, profile.context)


def born_b_residual(state, profile):
    """max_x | |(phi, e_x)|^2 - P(b = x | C) |."""
    return max(abs(abs(state.amplitude(x)) ** 2 - float(p)) for x, p in profile.pb.items())


@dataclass(frozen=True, eq=False)
class BasisPair:
    """The delta basis of b, the a-basis built from a context, and the change of basis.

    Column ``j`` of ``V`` holds the b-coordinates of ``e_a[j]``.
    """

    a_labels: tuple
    b_labels: tuple
    e_b: np.ndarray
    e_a: tuple
    V: np.ndarray
    q: tuple
    branch: Branch
    context: frozenset

    def unitarity_defect(self):
        return float(np.max(np.abs(self.V @ self.V.conj().T - np.eye(len(self.V)))))


def build_a_basis(space, a, b, C0, branch=Branch.PLUS):
    """Orthonormal basis of eigenvectors for ``a`` fixed by the phases of ``C0``.

    Unitarity of the change of basis forces P(b|a) to be double stochastic;
    anything else is refused up front.
    """
    trans = transition_matrix(space, a, b)
    if not (a.dichotomous and b.dichotomous):
        raise ValueError("the a-basis is built for dichotomous reference variables")
    if not is_double_stochastic(trans):
        sums = trans.column_sums()
        raise NotDoublyStochasticError(
            f"P(b|a) is not double stochastic (column sums {', '.join(map(str, sums))}); "
            "no unitary change of basis exists",
            sums,
        )
    state0 = represent(space, a, b, C0, branch, convention="canonical")
    f1, f2 = (state0.phases.factors[x] for x in b.spectrum)
    u = [[sqrt_real(trans[i, j]) for j in range(2)] for i in range(2)]
    V = np.array([[u[0][0], f1 * u[1][0]], [u[0][1], f2 * u[1][1]]], dtype=complex)
    e_a = (V[:, 0].copy(), V[:, 1].copy())
    return BasisPair(a.spectrum, b.spectrum, np.eye(2, dtype=complex), e_a, V, (u[0][0], u[0][1]), Branch(branch), state0.context)


def born_a_residual(space, a, b, C, C0, branch=Branch.PLUS, basis=None):
    """max_j | |(phi_C, e_j^a(C0))|^2 - P(a = a_j | C) | using one fixed a-basis."""
    if basis is None:
        basis = build_a_basis(space, a, b, C0, branch)
    elif basis.branch is not Branch(branch):
        raise ConventionError(f"basis built on branch {basis.branch} but state requested on {Branch(branch)}")
    profile = interference_lambda(space, a, b, C)
    state = represent(space, a, b, C, branch, convention="canonical", profile=profile)
    return max(abs(abs(state.inner(e)) ** 2 - float(profile.pa[y])) for y, e in zip(basis.a_labels, basis.e_a))


@dataclass(frozen=True, eq=False)
class ObservableOperator:
    matrix: np.ndarray
    spectrum: tuple

    @property
    def is_self_adjoint(self):
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=1e-12, rtol=0))

    def eigenvalues(self):
        return np.linalg.eigvalsh(self.matrix)


def operator_b(b):
    """Multiplication operator of ``b`` in its own delta basis."""
    return ObservableOperator(np.diag(np.array(b.spectrum, dtype=complex)), b.spectrum)


def operator_a(a, basis):
    V = basis.V
    if basis.unitarity_defect() > 1e-12:
        raise ConventionError("change of basis is not unitary")
    m = V @ np.diag(np.array(a.spectrum, dtype=complex)) @ V.conj().T
    return ObservableOperator(m, a.spectrum)


def _matrix(x):
    return x.matrix if isinstance(x, ObservableOperator) else np.asarray(x)


def commutator(x, y):
    """``x @ y - y @ x``."""
    mx, my = _matrix(x), _matrix(y)
    if mx.shape != my.shape:
        raise ValueError(f"dimension mismatch {mx.shape} vs {my.shape}")
    return mx @ my - my @ mx


def noncommutativity(a, b, basis):
    """Closed form of ``commutator(operator_a(a, basis), operator_b(b))``.

    Zero diagonal and off-diagonal ``m_12 = -m_21 = (a_1 - a_2)(b_2 - b_1) q_1 q_2``.
    The opposite order ``commutator(b_op, a_op)`` is its negative.
    """
    (a1, a2), (b1, b2) = a.spectrum, b.spectrum
    q1, q2 = basis.q
    m12 = float(a1 - a2) * float(b2 - b1) * q1 * q2
    return np.array([[0.0, m12], [-m12, 0.0]], dtype=complex)


def expectation(op, state, tol=1e-10):
    """(op phi, phi) for a normalised state; real up to round-off."""
    if abs(state.norm - 1.0) > tol:
        raise ValueError(f"state is not normalised (norm {state.norm!r})")
    val = np.vdot(state.amplitudes, _matrix(op) @ state.amplitudes)
    if abs(val.imag) > 1e-12:
        raise ValueError(f"expectation has imaginary part {val.imag!r}; operator not self-adjoint?")
    return float(val.real)


def classical_expectation(values, probs):
    return sum(float(v) * float(probs[v]) for v in values)


@dataclass
class ImageScan:
    """De-duplicated image of the trigonometric contexts on the unit sphere."""

    states: list
    counts: list
    skipped: dict
    scanned: int

    def distance_to(self, vector):
        vector = np.asarray(vector, dtype=complex)
        return min(float(np.linalg.norm(s.amplitudes - vector)) for s in self.states)


def image_scan(space, a, b, max_context_size=None, branches=(Branch.PLUS, Branch.MINUS), convention=None):
    trans = transition_matrix(space, a, b)
    seen = {}
    states, counts = [], []
    skipped = {tag: 0 for tag in ContextClass if tag is not ContextClass.TRIGONOMETRIC}
    scanned = 0
    for ctx in enumerate_contexts(space, max_context_size):
        scanned += 1
        prof = context_profile(space, a, b, ctx, trans)
        if prof.classification is not ContextClass.TRIGONOMETRIC:
            skipped[prof.classification] += 1
            continue
        for br in branches:
            st = represent(space, a, b, ctx, br, convention, profile=prof)
            key = tuple((round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0) for z in st.amplitudes)
            if key in seen:
                counts[seen[key]] += 1
            else:
                seen[key] = len(states)
                states.append(st)
                counts.append(1)
    return ImageScan(states, counts, skipped, scanned)


def is_unitary(m, tol=SUM_TOL):
    m = np.asarray(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(len(m)))) <= tol)


__all__ = [
    "BasisPair",
    "Branch",
    "ImageScan",
    "ObservableOperator",
    "PhaseAssignment",
    "StateVector",
    "born_a_residual",
    "born_b_residual",
    "build_a_basis",
    "classical_expectation",
    "commutator",
    "expectation",
    "image_scan",
    "is_unitary",
    "noncommutativity",
    "operator_a",
    "operator_b",
    "represent",
]
