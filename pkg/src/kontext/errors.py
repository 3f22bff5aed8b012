"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures onto its documented exit statuses without a lookup table.
"""


class KontextError(Exception):
    exit_code = 2


class ModelError(KontextError, ValueError):
    """The model itself is inconsistent (weights, unknown points, bad variables)."""

    exit_code = 1


class DegenerateContextError(KontextError, ValueError):
    """Conditioning on an event of zero measure."""

    def __init__(self, message, cells=()):
        super().__init__(message)
        self.cells = tuple(cells)


class DegenerateVariableError(KontextError, ValueError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class IncompatibilityError(KontextError, ValueError):
    """The reference variables are not incompatible."""


class ClassificationError(KontextError, ValueError):
    """A context has the wrong class for the requested representation."""

    def __init__(self, message, tag=None, lambdas=None):
        super().__init__(message)
        self.tag = tag
        self.lambdas = dict(lambdas or {})


class ConventionError(KontextError, ValueError):
    """Phase convention cannot be honoured (branch mismatch, no double stochasticity)."""


class NotDoublyStochasticError(ConventionError):
    def __init__(self, message, column_sums=()):
        super().__init__(message)
        self.column_sums = tuple(column_sums)


class PositivityError(KontextError, ValueError):
    def __init__(self, message, quantity=None):
        super().__init__(message)
        self.quantity = quantity


class NonRepresentableError(KontextError, ValueError):
    """A splitting coefficient left the unit interval."""

    exit_code = 3

    def __init__(self, message, step=None, outcome=None, coefficient=None):
        super().__init__(message)
        self.step = step
        self.outcome = outcome
        self.coefficient = coefficient


class DomainError(KontextError, ValueError):
    pass
