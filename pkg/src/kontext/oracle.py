"""Brute-force recomputation of every probability and coefficient.

Works on the decoded model file directly with explicit sums over the sample
points, sharing no code with the analytical modules, so the two routes can
be cross-checked. All rational quantities are exact ``Fraction`` values.
"""

import cmath
import math
from fractions import Fraction


def _weights(data):
    return {str(p["id"]): Fraction(str(p["weight"])) for p in data["space"]["points"]}


def _prob(w, pred):
    total = Fraction(0)
    for pt, wt in w.items():
        if pred(pt):
            total += wt
    return total


def oracle_record(data, pair=("a", "b"), context=None):
    """Every quantity of one context of one reference pair, by direct summation.

    ``context`` is a list of point ids (``None`` means the whole space).
    """
    w = _weights(data)
    a = {str(k): v for k, v in data["variables"][pair[0]].items()}
    b = {str(k): v for k, v in data["variables"][pair[1]].items()}
    C = set(w) if context is None else {str(p) for p in context}
    ys = sorted(set(a.values()))
    xs = sorted(set(b.values()))

    pC = _prob(w, lambda t: t in C)
    pa = {y: _prob(w, lambda t, y=y: t in C and a[t] == y) / pC for y in ys}
    pb = {x: _prob(w, lambda t, x=x: t in C and b[t] == x) / pC for x in xs}
    marg_a = {y: _prob(w, lambda t, y=y: a[t] == y) for y in ys}
    trans = {
        (x, y): _prob(w, lambda t, x=x, y=y: a[t] == y and b[t] == x) / marg_a[y] for x in xs for y in ys
    }
    rec = {
        "pa": pa,
        "pb": pb,
        "transition": trans,
        "delta": {},
        "lambda": {},
        "mu": {},
        "final_lambda": {},
        "born_residual": {},
    }
    for x in xs:
        rec["delta"][x] = pb[x] - sum(pa[y] * trans[(x, y)] for y in ys)

    if len(ys) == 2 and all(pa[y] > 0 for y in ys):
        for x in xs:
            radicand = pa[ys[0]] * trans[(x, ys[0])] * pa[ys[1]] * trans[(x, ys[1])]
            num = rec["delta"][x]
            value = float(num) / (2 * math.sqrt(radicand)) if radicand > 0 else None
            rec["lambda"][x] = {"numerator": num, "radicand": radicand, "value": value}
            if value is not None and abs(value) <= 1:
                A = float(pa[ys[0]] * trans[(x, ys[0])])
                B = float(pa[ys[1]] * trans[(x, ys[1])])
                phi = math.sqrt(A) + cmath.exp(1j * math.acos(value)) * math.sqrt(B)
                rec["born_residual"][x] = abs(abs(phi) ** 2 - float(pb[x]))

    if all(pa[y] > 0 for y in ys):
        for x in xs:
            steps = []
            for j in range(len(ys) - 1):
                head = trans[(x, ys[j])] * pa[ys[j]]
                rest_ys = set(ys[j + 1:])
                total = _prob(w, lambda t: t in C and b[t] == x and a[t] in ys[j:]) / pC
                rest = _prob(w, lambda t: t in C and b[t] == x and a[t] in rest_ys) / pC
                num = total - head - rest
                radicand = head * rest
                value = float(num) / (2 * math.sqrt(radicand)) if radicand > 0 else None
                steps.append({"numerator": num, "radicand": radicand, "value": value})
            rec["mu"][x] = steps
            y1, y2 = ys[-2], ys[-1]
            h1, h2 = trans[(x, y1)] * pa[y1], trans[(x, y2)] * pa[y2]
            tail = _prob(w, lambda t: t in C and b[t] == x and a[t] in (y1, y2)) / pC
            radicand = h1 * h2
            value = float(tail - h1 - h2) / (2 * math.sqrt(radicand)) if radicand > 0 else None
            rec["final_lambda"][x] = {"numerator": tail - h1 - h2, "radicand": radicand, "value": value}
    return rec


def ftp_residual(data, pair, context):
    """P(B|C) - sum_j P(A_j|C) P(B|A_j C) for every b-outcome B, exactly."""
    w = _weights(data)
    a = {str(k): v for k, v in data["variables"][pair[0]].items()}
    b = {str(k): v for k, v in data["variables"][pair[1]].items()}
    C = {str(p) for p in context}
    pC = _prob(w, lambda t: t in C)
    out = {}
    for x in sorted(set(b.values())):
        lhs = _prob(w, lambda t: t in C and b[t] == x) / pC
        rhs = Fraction(0)
        for y in sorted(set(a.values())):
            pAC = _prob(w, lambda t: t in C and a[t] == y)
            if pAC == 0:
                continue
            rhs += (pAC / pC) * (_prob(w, lambda t: t in C and a[t] == y and b[t] == x) / pAC)
        out[x] = lhs - rhs
    return out
