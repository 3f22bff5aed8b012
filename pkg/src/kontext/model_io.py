"""Model files: parsing, validation, serialisation and seeded random models.

A model file is JSON::

    {"space": {"points": [{"id": "w1", "weight": "1/4"}, ...]},
     "variables": {"a": {"w1": 1, ...}, "b": {...}},
     "contexts": {"C1": ["w1", "w3", "w4"], ...},
     "metadata": {"title": "...", "seed": 42}}
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ._numeric import SUM_TOL, parse_number
from .core import FiniteSpace, RandomVariable
from .errors import KontextError, ModelError


@dataclass
class Model:
    space: FiniteSpace
    variables: dict
    contexts: dict
    metadata: dict = field(default_factory=dict)

    def pair(self, names=None):
        """The reference pair; defaults to ``a, b`` or the first two variables."""
        if names is None:
            names = ("a", "b") if {"a", "b"} <= set(self.variables) else tuple(self.variables)[:2]
        if isinstance(names, str):
            names = tuple(n.strip() for n in names.split(","))
        if len(names) != 2:
            raise KontextError(f"a pair needs two variable names, got {names!r}")
        missing = [n for n in names if n not in self.variables]
        if missing:
            raise KontextError(f"unknown variables {missing}")
        return self.variables[names[0]], self.variables[names[1]]

    def context(self, name):
        try:
            return self.contexts[name]
        except KeyError:
            raise KontextError(f"unknown context {name!r}") from None


def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def validate_data(data):
    """List every violation in a decoded model file; empty means OK."""
    problems = []
    if not isinstance(data, dict):
        return ["top level must be an object"]
    points = (data.get("space") or {}).get("points")
    if not isinstance(points, list) or not points:
        return ["space.points must be a nonempty list"]
    ids, total, exact_total = [], Fraction(0), True
    for i, entry in enumerate(points):
        if not isinstance(entry, dict) or "id" not in entry or "weight" not in entry:
            problems.append(f"space.points[{i}] needs 'id' and 'weight'")
            continue
        pid = str(entry["id"])
        if pid in ids:
            problems.append(f"duplicate point id {pid!r}")
        ids.append(pid)
        try:
            w = parse_number(entry["weight"])
        except (ValueError, ZeroDivisionError):
            problems.append(f"point {pid!r}: weight {entry['weight']!r} is not a number")
            exact_total = False
            continue
        if w < 0:
            problems.append(f"point {pid!r}: negative weight {w}")
        total += w
    if exact_total and total != 1:
        problems.append(f"total mass {total} != 1")
    known = set(ids)
    variables = data.get("variables")
    if not isinstance(variables, dict) or len(variables) < 2:
        problems.append("need at least two variables")
        variables = variables if isinstance(variables, dict) else {}
    for name, assignment in variables.items():
        if not isinstance(assignment, dict):
            problems.append(f"variable {name!r} must map point ids to values")
            continue
        unknown = sorted(set(map(str, assignment)) - known)
        if unknown:
            problems.append(f"variable {name!r} names unknown points {unknown}")
        missing = sorted(known - set(map(str, assignment)))
        if missing:
            problems.append(f"variable {name!r} undefined at {missing}")
        bad = [k for k, v in assignment.items() if not _is_number(v)]
        if bad:
            problems.append(f"variable {name!r} has non-numeric values at {sorted(map(str, bad))}")
        elif len(set(assignment.values())) < 2:
            problems.append(f"variable {name!r} takes fewer than two values")
    contexts = data.get("contexts", {})
    if not isinstance(contexts, dict):
        problems.append("contexts must be an object")
        contexts = {}
    for name, members in contexts.items():
        if not isinstance(members, list):
            problems.append(f"context {name!r} must be a list of point ids")
            continue
        unknown = sorted(set(map(str, members)) - known)
        if unknown:
            problems.append(f"context {name!r} names unknown points {unknown}")
    return problems


def parse_model(data, exact=True):
    problems = validate_data(data)
    if problems:
        raise ModelError("; ".join(problems))
    weights = {str(p["id"]): p["weight"] for p in data["space"]["points"]}
    space = FiniteSpace.from_weights(weights, exact)
    variables = {}
    for name, assignment in data["variables"].items():
        v = RandomVariable(name, {str(k): _value(val, exact) for k, val in assignment.items()})
        v.check_total(space)
        variables[name] = v
    contexts = {name: space.event(map(str, members)) for name, members in data.get("contexts", {}).items()}
    return Model(space, variables, contexts, dict(data.get("metadata", {})))


def _value(v, exact):
    if isinstance(v, float) and exact and v != int(v):
        return parse_number(v)
    return v


def load_json(path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_model(path, exact=True):
    return parse_model(load_json(path), exact)


def _weight_text(w):
    if isinstance(w, Fraction):
        return str(w)
    return repr(w)


def model_to_data(model):
    space = model.space
    data = {
        "space": {"points": [{"id": p, "weight": _weight_text(space.weights[p])} for p in space.points]},
        "variables": {name: {p: v(p) for p in space.points} for name, v in model.variables.items()},
        "contexts": {name: [p for p in space.points if p in ctx] for name, ctx in model.contexts.items()},
    }
    if model.metadata:
        data["metadata"] = dict(model.metadata)
    return data


def dumps_model(model):
    return json.dumps(model_to_data(model), indent=2) + "\n"


def _spectrum(n):
    return [-1, 1] if n == 2 else list(range(n))


def _split_units(rng, units, parts):
    """Random composition of ``units`` into ``parts`` positive integers."""
    if parts > units:
        raise ValueError("cannot split into more positive parts than units")
    cuts = sorted(rng.sample(range(1, units), parts - 1))
    bounds = [0, *cuts, units]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def random_model(points, values_a, values_b, seed, *, doubly_stochastic=False, uniform=False, bits=16):
    """Seeded model whose joint cells of ``a`` and ``b`` all carry positive dyadic mass.

    ``doubly_stochastic`` (2x2 only) makes P(b|a) double stochastic;
    ``uniform`` additionally makes the marginal of ``a`` uniform, which makes
    both transition matrices double stochastic.
    """
    if points < values_a * values_b:
        raise KontextError(f"{points} points cannot cover {values_a}x{values_b} joint cells")
    if values_a < 2 or values_b < 2:
        raise KontextError("both variables need at least two values")
    rng = random.Random(seed)
    cells = [(i, j) for i in range(values_a) for j in range(values_b)]
    owner = list(cells) + [rng.choice(cells) for _ in range(points - len(cells))]
    rng.shuffle(owner)
    per_cell = {c: [k for k, o in enumerate(owner) if o == c] for c in cells}
    denom = 2**bits

    if doubly_stochastic or uniform:
        if (values_a, values_b) != (2, 2):
            raise KontextError("double stochastic generation is implemented for 2x2 models")
        step = 16
        r = Fraction(8 if uniform else rng.randrange(1, step), step)
        p = Fraction(rng.randrange(1, step), step)
        cell_mass = {(0, 0): r * p, (0, 1): r * (1 - p), (1, 0): (1 - r) * (1 - p), (1, 1): (1 - r) * p}
        weights = [None] * points
        for c, idx in per_cell.items():
            units = cell_mass[c] * denom
            for k, u in zip(idx, _split_units(rng, int(units), len(idx))):
                weights[k] = Fraction(u, denom)
    else:
        weights = [Fraction(u, denom) for u in _split_units(rng, denom, points)]

    ids = [f"w{k + 1}" for k in range(points)]
    sa, sb = _spectrum(values_a), _spectrum(values_b)
    data = {
        "space": {"points": [{"id": pid, "weight": str(w)} for pid, w in zip(ids, weights)]},
        "variables": {
            "a": {pid: sa[owner[k][0]] for k, pid in enumerate(ids)},
            "b": {pid: sb[owner[k][1]] for k, pid in enumerate(ids)},
        },
        "contexts": {"Omega": list(ids)},
        "metadata": {"title": f"random {values_a}x{values_b} model", "seed": seed},
    }
    return data


def random_context(space, rng, min_size=1):
    pts = list(space.points)
    k = rng.randrange(min_size, len(pts) + 1)
    return frozenset(rng.sample(pts, k))


__all__ = [
    "Model",
    "SUM_TOL",
    "dumps_model",
    "load_json",
    "load_model",
    "model_to_data",
    "parse_model",
    "random_context",
    "random_model",
    "validate_data",
]
