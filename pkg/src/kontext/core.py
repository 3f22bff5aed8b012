"""Finite Kolmogorov probability spaces.

The sigma-algebra is the full power set of a finite sample space, so an
event is just a ``frozenset`` of point identifiers. Weights are exact
``Fraction`` values by default; a space built with ``exact=False`` stores
floats and checks its total mass to within ``SUM_TOL``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ._numeric import SUM_TOL, is_exact, parse_number
from .errors import DegenerateContextError, ModelError

Event = frozenset


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple
    weights: dict = field(repr=False)
    exact: bool = True

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ModelError("duplicate point identifiers")
        if set(self.weights) != set(self.points):
            missing = set(self.points) - set(self.weights)
            extra = set(self.weights) - set(self.points)
            raise ModelError(f"weights do not match points (missing {sorted(missing)}, extra {sorted(extra)})")
        for pt in self.points:
            if self.weights[pt] < 0:
                raise ModelError(f"negative weight at {pt!r}")
        total = sum(self.weights.values(), Fraction(0) if self.exact else 0.0)
        if self.exact:
            if total != 1:
                raise ModelError(f"total mass {total} != 1")
        elif abs(total - 1) > SUM_TOL:
            raise ModelError(f"total mass {total!r} != 1")

    @classmethod
    def from_weights(cls, weights, exact=True):
        """Build from a ``{point: weight}`` mapping; weights may be ``"p/q"`` strings."""
        try:
            parsed = {pt: parse_number(w, exact) for pt, w in weights.items()}
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelError(str(exc)) from None
        return cls(tuple(weights), parsed, exact)

    @classmethod
    def uniform(cls, points, exact=True):
        points = tuple(points)
        w = Fraction(1, len(points)) if exact else 1.0 / len(points)
        return cls(points, {pt: w for pt in points}, exact)

    @property
    def omega(self):
        return frozenset(self.points)

    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def event(self, members):
        e = frozenset(members)
        unknown = e - self.omega
        if unknown:
            raise ModelError(f"unknown points {sorted(map(str, unknown))}")
        return e

    def relabel(self, mapping):
        """Return a copy with point identifiers renamed through ``mapping``."""
        return FiniteSpace(
            tuple(mapping[p] for p in self.points),
            {mapping[p]: w for p, w in self.weights.items()},
            self.exact,
        )


class RandomVariable:
    """A real-valued function on the points of a finite space.

    The spectrum is sorted ascending and must contain at least two values.
    """

    def __init__(self, name, assignment):
        self.name = name
        self.assignment = dict(assignment)
        spectrum = sorted(set(self.assignment.values()))
        if len(spectrum) < 2:
            raise ModelError(f"variable {name!r} has spectrum {spectrum}; need at least two values")
        self.spectrum = tuple(spectrum)

    def __repr__(self):
        return f"RandomVariable({self.name!r}, spectrum={self.spectrum})"

    def __call__(self, point):
        return self.assignment[point]

    def __len__(self):
        return len(self.spectrum)

    @property
    def dichotomous(self):
        return len(self.spectrum) == 2

    def check_total(self, space):
        missing = space.omega - set(self.assignment)
        extra = set(self.assignment) - space.omega
        if missing or extra:
            raise ModelError(
                f"variable {self.name!r} is not a total map on the space "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )

    def relabel(self, mapping):
        return RandomVariable(self.name, {mapping[p]: v for p, v in self.assignment.items()})


@dataclass(frozen=True)
class Partition:
    values: tuple
    cells: tuple

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, i):
        return self.cells[i]

    def cell(self, value):
        return self.cells[self.values.index(value)]


def measure(space, e):
    """Total weight of the points in ``e``."""
    e = frozenset(e)
    w = space.weights
    try:
        return sum((w[pt] for pt in e), space.zero())
    except KeyError as exc:
        raise ModelError(f"unknown point {exc.args[0]!r}") from None


def cond_prob(space, a_event, given):
    """P(A | C) = P(A & C) / P(C)."""
    given = frozenset(given)
    pc = measure(space, given)
    if pc == 0:
        raise DegenerateContextError("conditioning event has zero measure")
    return measure(space, frozenset(a_event) & given) / pc


def level_partition(space, v):
    v.check_total(space)
    cells = tuple(frozenset(pt for pt in space.points if v(pt) == value) for value in v.spectrum)
    return Partition(v.spectrum, cells)


def classical_ftp_residual(space, B, cells, C):
    """P(B|C) - sum_j P(A_j|C) P(B|A_j C).

    Zero for every input; in exact mode the zero is exact. Raises if some cell
    has a zero-measure intersection with ``C``.
    """
    B, C = frozenset(B), frozenset(C)
    bad = [i for i, cell in enumerate(cells) if measure(space, cell & C) == 0]
    if bad:
        raise DegenerateContextError(f"cells {bad} have zero-measure intersection with the context", bad)
    total = space.zero()
    for cell in cells:
        total += cond_prob(space, cell, C) * cond_prob(space, B, cell & C)
    return cond_prob(space, B, C) - total


__all__ = [
    "Event",
    "FiniteSpace",
    "Partition",
    "RandomVariable",
    "classical_ftp_residual",
    "cond_prob",
    "is_exact",
    "level_partition",
    "measure",
]
