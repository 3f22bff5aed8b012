"""Contextual probability on finite spaces and its complex, split-complex and multivalued amplitude representations."""

from .calculus import (
    Census,
    Coefficient,
    ContextClass,
    ContextProfile,
    SymmetryReport,
    TransitionMatrix,
    census,
    check_symmetry_lemma,
    classify,
    context_profile,
    contextual_delta,
    contextual_delta_split,
    contextual_lambda,
    enumerate_contexts,
    interference_lambda,
    interference_mu,
    is_double_stochastic,
    is_incompatible,
    selection_context_lambda,
    transition_matrix,
)
from .core import (
    Event,
    FiniteSpace,
    Partition,
    RandomVariable,
    classical_ftp_residual,
    cond_prob,
    level_partition,
    measure,
)
from .errors import (
    ClassificationError,
    ConventionError,
    DegenerateContextError,
    DegenerateVariableError,
    DomainError,
    IncompatibilityError,
    KontextError,
    ModelError,
    NonRepresentableError,
    NotDoublyStochasticError,
    PositivityError,
)
from .fixtures import load_fixture
from .hilbert import (
    BasisPair,
    Branch,
    ObservableOperator,
    StateVector,
    born_a_residual,
    born_b_residual,
    build_a_basis,
    classical_expectation,
    commutator,
    expectation,
    image_scan,
    noncommutativity,
    operator_a,
    operator_b,
    represent,
)
from .hyperbolic import HyperbolicState, SplitComplex, hyperbolic_phase, represent_hyperbolic
from .model_io import Model, load_model, parse_model, random_model
from .multivalued import interference_expansion, represent_multivalued, split_trace

__version__ = "0.1.0"
