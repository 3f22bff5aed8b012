"""Serialisation of profiles, states, matrices and traces to JSON-ready dicts and CSV."""

import csv
import enum
import io
from fractions import Fraction

import numpy as np

from ._numeric import fmt
from .calculus import Coefficient


def jsonable(x, exact=True):
    """Convert library values to plain JSON types; rationals become ``"p/q"`` strings in exact mode."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, Fraction):
        if not exact:
            return float(x)
        return str(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x if np.isfinite(x) else str(x)
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": float(x.real), "im": float(x.imag)}
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, Coefficient):
        return {
            "value": jsonable(x.value),
            "numerator": jsonable(x.numerator, exact),
            "radicand": jsonable(x.radicand, exact),
        }
    if isinstance(x, np.ndarray):
        return [jsonable(v, exact) for v in x.tolist()]
    if isinstance(x, (frozenset, set)):
        return sorted(map(str, x))
    if isinstance(x, dict):
        return {str(k): jsonable(v, exact) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v, exact) for v in x]
    return str(x)


def matrix_record(m):
    """Row-major matrix with ``{re, im}`` entries."""
    m = np.asarray(m, dtype=complex)
    return [[{"re": float(z.real), "im": float(z.imag)} for z in row] for row in m]


def transition_record(t, exact=True):
    return {
        "rows": jsonable(t.row_labels),
        "cols": jsonable(t.col_labels),
        "entries": [[jsonable(v, exact) for v in row] for row in t.rows],
    }


def profile_record(name, profile, exact=True):
    return {
        "context": name,
        "members": sorted(profile.context),
        "pa": jsonable(profile.pa, exact),
        "pb": jsonable(profile.pb, exact),
        "delta": jsonable(profile.delta, exact),
        "lambda": jsonable(profile.lam, exact),
        "class": profile.classification.value,
        "boundary": profile.boundary,
        "reason": profile.reason,
        "flags": list(profile.flags),
    }


def state_record(name, state, residuals=None):
    ph = state.phases
    return {
        "context": name,
        "branch": ph.branch.value if ph else None,
        "convention": ("canonical" if ph.canonical else "independent") if ph else None,
        "amplitudes": {str(x): {"re": float(z.real), "im": float(z.imag)} for x, z in zip(state.labels, state.amplitudes)},
        "theta": {str(x): t for x, t in ph.theta.items()} if ph else None,
        "residuals": dict(residuals or {}),
    }


def hyperbolic_record(name, hs, residual=None, exact=True):
    return {
        "context": name,
        "amplitudes": {str(x): {"re": z.re, "hy": z.hy} for x, z in hs.amplitudes.items()},
        "sign": {str(x): s for x, s in hs.sign.items()},
        "theta": {str(x): t for x, t in hs.theta.items()},
        "born": jsonable(hs.born, exact),
        "residuals": {"born_split": residual} if residual is not None else {},
        "note": hs.note,
    }


def trace_record(name, multi, exact=True):
    out = {"context": name, "splitting_order": jsonable(multi.order), "outcomes": {}}
    for x, tr in multi.traces.items():
        out["outcomes"][str(x)] = {
            "branch": tr.branch.value,
            "amplitude": jsonable(multi.amplitude(x)),
            "final_theta": tr.final_theta,
            "betas": list(tr.betas),
            "steps": [
                {
                    "j": s.j,
                    "kind": s.kind,
                    "T": jsonable(s.tail_prob, exact),
                    "head": jsonable(s.head, exact),
                    "rest": jsonable(s.rest, exact),
                    "coefficient": jsonable(s.coefficient, exact),
                    "gamma": s.gamma,
                    "alpha": s.alpha,
                    "beta": s.beta,
                    "flag": s.flag,
                }
                for s in tr.steps
            ],
        }
    return out


CSV_FIELDS = ("context", "members", "class", "boundary", "reason", "pa", "pb", "delta", "lambda", "status")


def _cell(v):
    if isinstance(v, dict):
        parts = []
        for k, val in v.items():
            if isinstance(val, dict) and "value" in val:
                val = val["value"]
            parts.append(f"{k}:{val}")
        return ";".join(parts)
    if isinstance(v, list):
        return " ".join(map(str, v))
    return "" if v is None else v


def rows_to_csv(rows):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in CSV_FIELDS})
    return buf.getvalue()


def render_text(obj, indent=0):
    """Indented plain-text rendering with 12 significant digits."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(lines)


def _flat(v):
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list)) or _is_complex(x) for x in v.values()) and len(v) <= 6
    return all(not isinstance(x, (dict, list)) for x in v) and len(v) <= 8


def _is_complex(x):
    return isinstance(x, dict) and set(x) in ({"re", "im"}, {"re", "hy"})


def _scalar(v):
    if isinstance(v, dict):
        if _is_complex(v):
            unit = "j" if "im" in v else "h"
            other = v.get("im", v.get("hy"))
            return f"{fmt(float(v['re']))}{'+' if other >= 0 else '-'}{fmt(abs(float(other)))}{unit}"
        return "{" + ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, float):
        return fmt(v)
    return str(v)
