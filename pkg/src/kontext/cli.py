"""Command line front end: ``kontext validate|analyze|scan|represent|random|oracle``.

Exit codes: 0 success, 1 invalid model, 2 failed precondition (degenerate
context, incompatible pair, wrong context class), 3 non-representable.
"""

import argparse
import json
import sys

from . import calculus as cc
from . import hilbert as hb
from ._numeric import close
from .calculus import ContextClass
from .errors import KontextError, ModelError
from .hyperbolic import represent_hyperbolic
from .model_io import dumps_model, load_json, parse_model, random_model, validate_data
from .multivalued import interference_expansion, represent_multivalued
from .oracle import oracle_record
from .report import (
    hyperbolic_record,
    jsonable,
    matrix_record,
    profile_record,
    render_text,
    rows_to_csv,
    state_record,
    trace_record,
    transition_record,
)

EXIT_OK, EXIT_MODEL, EXIT_PRECONDITION, EXIT_NONREP = 0, 1, 2, 3

# documented tolerances for residual fields
TOL_BORN_B = 1e-12
TOL_BORN_A = 1e-10
TOL_EXPECT = 1e-10
TOL_BORN_SPLIT = 1e-12
TOL_MULTI = 1e-10


class PreconditionFailed(KontextError):
    """Raised with a partial report attached."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


def _load(path, exact):
    return parse_model(load_json(path), exact)


def cmd_validate(path):
    """Invariant violations of a model file; an empty list means OK."""
    try:
        data = load_json(path)
    except OSError as exc:
        return [f"cannot read {path}: {exc}"]
    except ModelError as exc:
        return [str(exc)]
    problems = validate_data(data)
    if problems:
        return problems
    try:
        parse_model(data)
    except KontextError as exc:
        return [str(exc)]
    return []


def _elect_basis_context(model, a, b, trans, explicit=None):
    if explicit is not None:
        return explicit
    for name in sorted(model.contexts):
        prof = cc.context_profile(model.space, a, b, model.contexts[name], trans)
        if prof.classification is ContextClass.TRIGONOMETRIC:
            return name
    return None


def _pair_diagnostics(model, a, b, exact):
    space = model.space
    ba = cc.transition_matrix(space, a, b)
    ab = cc.transition_matrix(space, b, a)
    square = len(a) == len(b)
    diag = {
        "incompatible": cc.is_incompatible(space, a, b),
        "P(b|a)": transition_record(ba, exact),
        "P(a|b)": transition_record(ab, exact),
        "P(b|a) stochastic": all(close(s, 1) for s in ba.row_sums()),
        "P(b|a) double stochastic": square and cc.is_double_stochastic(ba),
        "P(a|b) double stochastic": square and cc.is_double_stochastic(ab),
    }
    if a.dichotomous and b.dichotomous:
        sym = cc.check_symmetry_lemma(space, a, b)
        diag["symmetric transitions"] = sym.symmetric
        diag["uniform marginals"] = sym.uniform_marginals
        diag["three-way equivalence"] = sym.equivalent
    return diag, ba


def _operators(model, a, b, C0, branch):
    basis = hb.build_a_basis(model.space, a, b, C0, branch)
    a_op, b_op = hb.operator_a(a, basis), hb.operator_b(b)
    m = hb.commutator(a_op, b_op)
    closed = hb.noncommutativity(a, b, basis)
    return basis, {
        "V": matrix_record(basis.V),
        "unitarity_defect": basis.unitarity_defect(),
        "q": list(basis.q),
        "a_hat": matrix_record(a_op.matrix),
        "b_hat": matrix_record(b_op.matrix),
        "m = a_hat b_hat - b_hat a_hat": matrix_record(m),
        "closed_form_defect": float(abs(m - closed).max()),
    }


def _status(residuals, limits):
    return "PASS" if all(residuals[k] <= limits[k] for k in residuals) else "FAIL"


def cmd_analyze(path, pair=None, contexts=None, branch="plus", basis_context=None, exact=True):
    """Per-context profiles, representations and residuals for one reference pair."""
    model = _load(path, exact)
    a, b = model.pair(pair)
    space = model.space
    names = list(model.contexts) if not contexts else list(contexts)
    for n in names:
        model.context(n)
    report = {
        "model": model.metadata.get("title", str(path)),
        "pair": [a.name, b.name],
        "mode": "exact" if exact else "float",
        "branch": branch,
    }
    diag, trans = _pair_diagnostics(model, a, b, exact)
    report["matrices"] = diag
    if not diag["incompatible"]:
        report["status"] = f"{a.name!r} and {b.name!r} are not incompatible; nothing to represent"
        raise PreconditionFailed(report["status"], report)

    dichotomous = a.dichotomous and b.dichotomous
    ds = dichotomous and diag["P(b|a) double stochastic"]
    C0_name = _elect_basis_context(model, a, b, trans, basis_context) if ds else None
    basis = None
    if C0_name is not None:
        basis, report["operators"] = _operators(model, a, b, model.context(C0_name), branch)
        report["basis_context"] = C0_name

    rows, census = [], {tag.value: 0 for tag in ContextClass}
    for name in names:
        C = model.contexts[name]
        prof = cc.context_profile(space, a, b, C, trans)
        row = profile_record(name, prof, exact)
        residuals, limits = {}, {}
        census[prof.classification.value] += 1
        if not a.dichotomous:
            if prof.nondegenerate:
                try:
                    multi = represent_multivalued(space, a, b, C, branch, profile=prof)
                except KontextError as exc:
                    row["representation"] = f"not representable: {exc}"
                else:
                    residuals["born_b"] = multi.born_residual(prof.pb)
                    residuals["expansion"] = interference_expansion(multi, prof)
                    limits.update(born_b=TOL_MULTI, expansion=TOL_MULTI)
                    row["trace"] = trace_record(name, multi, exact)
        elif prof.classification is ContextClass.TRIGONOMETRIC:
            state = hb.represent(space, a, b, C, branch, profile=prof)
            residuals["born_b"] = hb.born_b_residual(state, prof)
            limits["born_b"] = TOL_BORN_B
            e_b = hb.expectation(hb.operator_b(b), state)
            residuals["expectation_b"] = abs(e_b - hb.classical_expectation(b.spectrum, prof.pb))
            limits["expectation_b"] = TOL_EXPECT
            if basis is not None:
                residuals["born_a"] = hb.born_a_residual(space, a, b, C, None, branch, basis)
                limits["born_a"] = TOL_BORN_A
                e_a = hb.expectation(hb.operator_a(a, basis), state)
                residuals["expectation_a"] = abs(e_a - hb.classical_expectation(a.spectrum, prof.pa))
                limits["expectation_a"] = TOL_EXPECT
            row["state"] = state_record(name, state)
        elif prof.classification is ContextClass.HYPERBOLIC:
            hs = represent_hyperbolic(space, a, b, C, profile=prof)
            residuals["born_split"] = hs.residual(prof.pb)
            limits["born_split"] = TOL_BORN_SPLIT
            row["hyperbolic"] = hyperbolic_record(name, hs, exact=exact)
        row["residuals"] = residuals
        row["status"] = _status(residuals, limits) if residuals else "n/a"
        rows.append(row)
    report["contexts"] = rows
    report["census"] = census
    report["status"] = "FAIL" if any(r["status"] == "FAIL" for r in rows) else "OK"
    return report


def cmd_scan(path, pair=None, max_size=None, exact=True):
    """Classify every subset of the sample space (up to ``max_size`` points)."""
    model = _load(path, exact)
    a, b = model.pair(pair)
    cen = cc.census(model.space, a, b, max_size)
    if not cen.conserved:
        raise KontextError(f"census counts {sum(cen.counts.values())} != {cen.expected} enumerated contexts")
    return {
        "model": model.metadata.get("title", str(path)),
        "pair": [a.name, b.name],
        "points": len(model.space.points),
        "max_size": max_size,
        "contexts": cen.total,
        "expected": cen.expected,
        "counts": {tag.value: n for tag, n in cen.counts.items()},
        "boundary": cen.boundary,
        "witnesses": {tag.value: sorted(ctx) for tag, ctx in cen.witnesses.items()},
    }


def cmd_represent(path, context, pair=None, branch="plus", basis_context=None, exact=True):
    """State dump for one context: complex, split-complex or multivalued trace."""
    model = _load(path, exact)
    a, b = model.pair(pair)
    space = model.space
    C = model.context(context)
    prof = cc.context_profile(space, a, b, C)
    if not cc.is_incompatible(space, a, b):
        raise KontextError(f"{a.name!r} and {b.name!r} are not incompatible")
    if not a.dichotomous:
        multi = represent_multivalued(space, a, b, C, branch, profile=prof)
        rec = trace_record(context, multi, exact)
        rec["residuals"] = {"born_b": multi.born_residual(prof.pb), "expansion": interference_expansion(multi, prof)}
        return rec
    if prof.classification is ContextClass.HYPERBOLIC:
        hs = represent_hyperbolic(space, a, b, C, profile=prof)
        return hyperbolic_record(context, hs, hs.residual(prof.pb), exact)
    state = hb.represent(space, a, b, C, branch, profile=prof)
    residuals = {"born_b": hb.born_b_residual(state, prof)}
    rec = state_record(context, state, residuals)
    if b.dichotomous and cc.is_double_stochastic(prof.transition):
        C0_name = _elect_basis_context(model, a, b, prof.transition, basis_context)
        if C0_name is not None:
            basis = hb.build_a_basis(space, a, b, model.context(C0_name), branch)
            rec["residuals"]["born_a"] = hb.born_a_residual(space, a, b, C, None, branch, basis)
            rec["basis_context"] = C0_name
            rec["V"] = matrix_record(basis.V)
    return rec


def cmd_random(points, values_a, values_b, seed, doubly_stochastic=False, uniform=False):
    """JSON text of a seeded random model; identical seeds give identical bytes."""
    data = random_model(points, values_a, values_b, seed, doubly_stochastic=doubly_stochastic, uniform=uniform)
    return dumps_model(parse_model(data))


def cmd_oracle(path, context, pair=None):
    """Brute-force record for one context, next to the analytical values."""
    data = load_json(path)
    model = parse_model(data)
    a, b = model.pair(pair)
    C = model.context(context)
    rec = oracle_record(data, (a.name, b.name), sorted(C))
    out = {"context": context, "oracle": jsonable(rec)}
    if a.dichotomous:
        prof = cc.interference_lambda(model.space, a, b, C)
        agree = prof.lam is not None and all(
            prof.lam[x].numerator == rec["lambda"][x]["numerator"]
            and prof.lam[x].radicand == rec["lambda"][x]["radicand"]
            for x in b.spectrum
        )
        out["module_lambda"] = jsonable(prof.lam)
        out["agreement"] = agree
    return out


def _emit(obj, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(jsonable(obj), indent=2) + "\n")
    elif fmt == "csv":
        rows = obj.get("contexts") if isinstance(obj, dict) else None
        if isinstance(rows, list):
            stream.write(rows_to_csv(rows))
        else:
            stream.write(rows_to_csv([obj]))
    else:
        stream.write(render_text(jsonable(obj)) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="kontext", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, context=False):
        sp.add_argument("path")
        sp.add_argument("--pair", default=None, help="reference pair as A,B (default a,b)")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        mode = sp.add_mutually_exclusive_group()
        mode.add_argument("--exact", dest="exact", action="store_true", default=True)
        mode.add_argument("--float", dest="exact", action="store_false")
        if context:
            sp.add_argument("--branch", choices=("plus", "minus"), default="plus")
            sp.add_argument("--basis-context", default=None)

    sp = sub.add_parser("validate", help="check a model file")
    sp.add_argument("path")

    sp = sub.add_parser("analyze", help="profiles, classes and representations of named contexts")
    common(sp, context=True)
    sp.add_argument("--context", action="append", default=None)

    sp = sub.add_parser("scan", help="classify every subset of the sample space")
    common(sp)
    sp.add_argument("--max-size", type=int, default=None)

    sp = sub.add_parser("represent", help="amplitude dump for one context")
    common(sp, context=True)
    sp.add_argument("--context", required=True)

    sp = sub.add_parser("random", help="seeded random model")
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--values-a", type=int, default=2)
    sp.add_argument("--values-b", type=int, default=2)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--doubly-stochastic", action="store_true")
    sp.add_argument("--uniform", action="store_true")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("oracle", help="brute-force recomputation for one context")
    sp.add_argument("path")
    sp.add_argument("--pair", default=None)
    sp.add_argument("--context", required=True)
    sp.add_argument("--format", choices=("text", "json"), default="json")
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            problems = cmd_validate(args.path)
            if problems:
                for line in problems:
                    stdout.write(f"violation: {line}\n")
                return EXIT_MODEL
            stdout.write("OK\n")
            return EXIT_OK
        if args.command == "analyze":
            report = cmd_analyze(args.path, args.pair, args.context, args.branch, args.basis_context, args.exact)
            _emit(report, args.format, stdout)
            return EXIT_OK if report["status"] == "OK" else EXIT_PRECONDITION
        if args.command == "scan":
            _emit(cmd_scan(args.path, args.pair, args.max_size, args.exact), args.format, stdout)
            return EXIT_OK
        if args.command == "represent":
            rec = cmd_represent(args.path, args.context, args.pair, args.branch, args.basis_context, args.exact)
            _emit(rec, args.format, stdout)
            return EXIT_OK
        if args.command == "random":
            text = cmd_random(args.points, args.values_a, args.values_b, args.seed, args.doubly_stochastic, args.uniform)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                stdout.write(text)
            return EXIT_OK
        if args.command == "oracle":
            _emit(cmd_oracle(args.path, args.context, args.pair), args.format, stdout)
            return EXIT_OK
    except PreconditionFailed as exc:
        _emit(exc.report, getattr(args, "format", "text"), stdout)
        stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except KontextError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
