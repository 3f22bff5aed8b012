"""Small numeric helpers shared by the exact and floating-point code paths."""

import math
from decimal import Decimal, localcontext
from fractions import Fraction

# float mode: total mass, stochasticity and similar sums
SUM_TOL = 1e-12
# float mode: |lambda| == 1 boundary and arccos clamping
BOUNDARY_TOL = 1e-9


def is_exact(*values):
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


def parse_number(text, exact=True):
    """Parse ``"p/q"``, a decimal string or a plain number."""
    if isinstance(text, bool):
        raise ValueError(f"not a number: {text!r}")
    if isinstance(text, str):
        value = Fraction(text.strip())
    elif isinstance(text, (int, Fraction)):
        value = Fraction(text)
    elif isinstance(text, float):
        if not math.isfinite(text):
            raise ValueError(f"not a finite number: {text!r}")
        # decimals written in JSON are meant as decimals, not binary fractions
        value = Fraction(repr(text))
    else:
        raise ValueError(f"not a number: {text!r}")
    return value if exact else float(value)


def sqrt_real(x):
    """Square root as a float, correctly rounded for rationals."""
    if isinstance(x, Fraction) or (isinstance(x, int) and not isinstance(x, bool)):
        x = Fraction(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return float(Fraction(rn, rd))
        with localcontext() as ctx:
            ctx.prec = 40
            return float((Decimal(n) / Decimal(d)).sqrt())
    return math.sqrt(x)


def sqrt_decimal(x, prec=50):
    with localcontext() as ctx:
        ctx.prec = prec
        x = Fraction(x)
        return (Decimal(x.numerator) / Decimal(x.denominator)).sqrt()


def close(x, y, tol=SUM_TOL):
    if is_exact(x, y):
        return x == y
    return abs(x - y) <= tol


def is_zero(x, tol=0.0):
    if is_exact(x):
        return x == 0
    return abs(x) <= tol


def clamp_unit(c, tol=BOUNDARY_TOL):
    """Clamp a cosine into [-1, 1]; values further than ``tol`` outside are an error."""
    if c > 1:
        if c - 1 > tol:
            raise ValueError(f"cosine {c!r} outside [-1, 1]")
        return 1.0
    if c < -1:
        if -1 - c > tol:
            raise ValueError(f"cosine {c!r} outside [-1, 1]")
        return -1.0
    return c


def fmt(x, digits=12):
    """Text rendering with ``digits`` significant digits; rationals also shown exactly."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x} (~{float(x):.{digits}g})"
    if isinstance(x, complex):
        return f"{x.real:.{digits}g}{x.imag:+.{digits}g}j"
    if isinstance(x, float):
        return f"{x:.{digits}g}"
    return str(x)
