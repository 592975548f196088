"""Command-line front end.

Exit codes: 0 verified or found, 1 refuted or none exists, 2 input error.
ALG arguments name a catalog algebra (``h1``, ``r3_lambda`` ...), its tangent
algebra (``ct_h1``), its cotangent algebra (``ct_star_h1``) or a
``lie_algebra`` JSON file.
"""

import argparse
import json
import os
import sys
from itertools import combinations

from . import __version__
from .complex import (
    AlmostComplexStructure,
    ascending_series,
    classify,
    eigenspace_closure,
    is_integrable,
    nonsingular_witness,
    totally_real_acs,
    totally_real_space,
)
from .constructions import CATALOG_NAMES, catalog, cotangent, semidirect, tangent
from .errors import DocumentError, LiecheckError
from .exact.matrix import Matrix, kernel_basis
from .exact.scalars import format_rational, to_rational
from .geometry import curvature_report, is_parallel, is_totally_geodesic, levi_civita
from .io import document_of, dumps, read_document
from .lie import adjoint_rep, coadjoint_rep, derivation_space, is_subalgebra
from .notation import format_vector
from .symplectic import (
    Metric,
    TwoForm,
    closed_form_space,
    compatible_closed_space,
    format_symmetric,
    format_two_form,
    hermitian_check,
    is_closed,
    is_compatible,
    is_nondegenerate,
    kahler_metric,
    signature,
    symplectic_witness,
)

OK, REFUTED, INPUT_ERROR = 0, 1, 2


class Result:
    """Human lines plus a machine report; ``code`` is the exit code."""

    def __init__(self, command, code=OK):
        self.command = command
        self.code = code
        self.lines = []
        self.data = {}

    def say(self, line=""):
        self.lines.append(line)

    def put(self, key, value):
        self.data[key] = value

    def report(self):
        return {"command": self.command, "exit_code": self.code, **self.data}


def seed_from_env():
    text = os.environ.get("LIECHECK_SEED", "0")
    try:
        return int(text)
    except ValueError:
        raise DocumentError(f"LIECHECK_SEED must be an integer, got {text!r}") from None


# algebra resolution -----------------------------------------------------------------


def _params(args):
    lam = getattr(args, "lam", None)
    eta = getattr(args, "eta", None)
    try:
        return (
            None if lam is None else to_rational(lam),
            None if eta is None else to_rational(eta),
        )
    except (ValueError, ZeroDivisionError):
        raise DocumentError("--lambda and --eta take integers or p/q literals") from None


def resolve(spec, args):
    """Return ``(algebra, semidirect_or_None)`` for an ALG argument."""
    lam, eta = _params(args)
    if spec.startswith("ct_star_"):
        sd = cotangent(catalog(spec[len("ct_star_"):], lam, eta))
        return sd.total, sd
    if spec.startswith("ct_"):
        sd = tangent(catalog(spec[len("ct_"):], lam, eta))
        return sd.total, sd
    if spec in CATALOG_NAMES:
        return catalog(spec, lam, eta), None
    if os.path.exists(spec):
        return read_document(spec, "lie_algebra").payload, None
    raise DocumentError(
        f"{spec!r} is neither a catalog name, ct_<name>, ct_star_<name> nor a file"
    )


def _base(spec, args):
    g, sd = resolve(spec, args)
    if sd is not None:
        raise DocumentError("this command takes a base algebra, not ct_ or ct_star_")
    return g


def _acs(g, path):
    return AlmostComplexStructure(g, read_document(path, "acs").payload)


# formatting ------------------------------------------------------------------------


def _fmt_matrix(m):
    width = max((len(format_rational(c)) for c in m.flatten()), default=1)
    return ["[" + " ".join(format_rational(c).rjust(width) for c in row) + "]" for row in m.rows]


def _fmt_images(m):
    """Nonzero columns as ``e_j -> image``."""
    return [
        f"e{j + 1} -> {format_vector(m.col(j))}" for j in range(m.ncols) if any(m.col(j))
    ]


def _relation(v, names):
    parts = []
    for c, name in zip(v, names):
        if c:
            mag = abs(c)
            body = name if mag == 1 else f"{format_rational(mag)}{name}"
            parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text + " = 0"


def _common_radical(fam):
    """Vectors killed by every member of a linear family of forms."""
    n = fam.parent.dim
    rows = [r for d in (fam.base, *fam.directions) for r in d.rows]
    return kernel_basis(Matrix(rows, n))


def _form_constraints(fam):
    names = [f"α{i + 1}{j + 1}" for i, j in combinations(range(fam.parent.dim), 2)]
    return [_relation(v, names) for v in fam.constraints().basis]


# commands ----------------------------------------------------------------------------


def cmd_catalog(args):
    res = Result("catalog")
    if args.action == "list":
        res.put("names", list(CATALOG_NAMES))
        for name in CATALOG_NAMES:
            res.say(name)
        return res
    if not args.name:
        raise DocumentError("catalog get needs a NAME")
    lam, eta = _params(args)
    g = catalog(args.name, lam, eta)
    res.put("algebra", document_and_object(g))
    res.put("jacobi", True)
    res.say(f"{g.name} (dim {g.dim}), Jacobi identity verified")
    _table_lines(res, g)
    return res


def _table_lines(res, g):
    rows = g.table()
    if not rows:
        res.say("abelian")
    for i, j, v in rows:
        res.say(f"[{g.labels[i]},{g.labels[j]}] = {format_vector(v, g.labels)}")


def document_and_object(obj):
    return json.loads(dumps(document_of(obj)))


def _construct(kind):
    def run(args):
        res = Result(kind)
        h = _base(args.alg, args)
        sd = tangent(h) if kind == "tangent" else cotangent(h)
        res.put("algebra", document_and_object(sd.total))
        res.say(f"{sd.total.name or kind} (dim {sd.dim}); basis h = e1..e{h.dim}, V = e{h.dim + 1}..e{sd.dim}")
        _table_lines(res, sd.total)
        return res

    return run


def cmd_verify_jacobi(args):
    res = Result("verify-jacobi")
    g = read_document(args.file, "lie_algebra", validate=False).payload
    for i, j, k in combinations(range(g.dim), 3):
        r = g.jacobi_residual(i, j, k)
        if any(r):
            res.code = REFUTED
            res.put("jacobi", False)
            res.put("triple", [i + 1, j + 1, k + 1])
            res.put("residual", list(r))
            res.say(f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1}): residual {format_vector(r)}")
            return res
    res.put("jacobi", True)
    res.say(f"Jacobi identity holds (dim {g.dim})")
    return res


def cmd_nijenhuis(args):
    res = Result("nijenhuis")
    g, _ = resolve(args.alg, args)
    J = _acs(g, args.acs)
    v = is_integrable(J)
    dual = eigenspace_closure(J)
    if bool(v) != bool(dual):
        raise AssertionError("Nijenhuis test and eigenspace test disagree")
    res.put("integrable", bool(v))
    res.put("eigenspace_closed", bool(dual))
    if v:
        res.say("integrable: N_J vanishes on all basis pairs; the i-eigenspace is a subalgebra")
    else:
        i, j = v.witness
        res.code = REFUTED
        res.put("witness", [i + 1, j + 1])
        res.put("value", list(v.value))
        res.say(f"not integrable: N_J(e{i + 1}, e{j + 1}) = {format_vector(v.value)}")
    return res


def cmd_classify(args):
    res = Result("classify-acs")
    g, sd = resolve(args.alg, args)
    J = _acs(g, args.acs)
    c = classify(J, sd)
    series = ascending_series(J)
    integrable = bool(is_integrable(J))
    res.put("integrable", integrable)
    res.put("abelian", c.abelian)
    res.put("bi_invariant", c.bi_invariant)
    res.put("totally_real", c.totally_real)
    res.put("nilpotent", series.nilpotent)
    res.put("nilpotency_step", series.step)
    res.put("ascending_series", [[format_vector(b) for b in t.basis] for t in series.terms])
    res.say(f"integrable:    {integrable}")
    res.say(f"abelian:       {c.abelian}")
    res.say(f"bi-invariant:  {c.bi_invariant}")
    res.say(f"totally real:  {'n/a' if c.totally_real is None else c.totally_real}")
    step = series.step if series.nilpotent else "not nilpotent"
    res.say(f"nilpotency:    {step}")
    res.say("ascending series: " + " ⊂ ".join(repr(t) for t in series.terms))
    return res


def _witness_lines(res, w, label):
    res.put("witness_found", w.found)
    if w.zero_test is not None:
        res.put("identity_test", {
            "method": w.zero_test.method,
            "exact": w.zero_test.exact,
            "seed": w.zero_test.seed,
            "error_bound": w.zero_test.error_bound,
        })
    if w.found:
        res.put("witness_point", list(w.point))
        res.put("witness", w.value)
        res.put(label, w.determinant)
        res.say(f"witness at parameters ({', '.join(format_rational(c) for c in w.point)}), {label} {format_rational(w.determinant)}:")
        for line in _fmt_matrix(w.value):
            res.say("  " + line)
    else:
        res.code = REFUTED
        how = "exact symbolic test" if w.zero_test is None or w.zero_test.exact else (
            f"sampled test, seed {w.zero_test.seed}, error bound {format_rational(w.zero_test.error_bound)}"
        )
        res.say(f"none exists: the {label} vanishes identically on the family ({how})")


def _family_lines(res, fam):
    res.put("dimension", fam.dim)
    res.put("basis", list(fam.directions))
    res.say(f"dimension {fam.dim}")


def cmd_derivations(args):
    res = Result("derivations")
    h = _base(args.alg, args)
    fam = derivation_space(h)
    _family_lines(res, fam)
    for k, d in enumerate(fam.directions):
        res.say(f"D{k + 1}: " + "; ".join(_fmt_images(d)))
    if args.nonsingular_witness:
        _witness_lines(res, nonsingular_witness(fam, args.identity_test, seed_from_env()), "determinant")
    return res


def cmd_totally_real(args):
    res = Result("totally-real")
    h = _base(args.alg, args)
    rep = adjoint_rep(h) if args.rep == "ad" else coadjoint_rep(h)
    fam = totally_real_space(h, rep)
    res.put("representation", args.rep)
    _family_lines(res, fam)
    for k, d in enumerate(fam.directions):
        res.say(f"j{k + 1}: " + "; ".join(_fmt_images(d)))
    if args.witness:
        w = nonsingular_witness(fam, args.identity_test, seed_from_env())
        _witness_lines(res, w, "determinant")
        if w.found:
            sd = semidirect(h, rep)
            J = totally_real_acs(sd, w.value)
            res.put("acs", J.matrix)
            res.put("integrable", bool(is_integrable(J)))
            res.say("complex structure: " + ", ".join(f"J{line}" for line in _fmt_images(J.matrix)))
    return res


def cmd_closed_forms(args):
    res = Result("closed-forms")
    g, _ = resolve(args.alg, args)
    if args.compatible_with:
        J = _acs(g, args.compatible_with)
        fam = compatible_closed_space(g, J)
        res.say("closed 2-forms compatible with J")
    else:
        fam = closed_form_space(g)
        res.say("closed 2-forms")
    _family_lines(res, fam)
    cons = _form_constraints(fam)
    res.put("constraints", cons)
    res.say("constraints: " + ("none" if not cons else ", ".join(cons)))
    radical = _common_radical(fam)
    res.put("common_radical", [format_vector(v) for v in radical])
    if radical:
        res.say("every member vanishes on: " + ", ".join(format_vector(v) for v in radical))
    for k, d in enumerate(fam.directions):
        res.say(f"t{k + 1}: {format_two_form(d)}")
    if args.symplectic_witness:
        _witness_lines(res, symplectic_witness(fam, args.identity_test, seed_from_env()), "pfaffian")
    return res


def _geometry_lines(res, g, metric, sd):
    conn = levi_civita(g, metric)
    rep = curvature_report(conn)
    conn_lines = []
    for i in range(g.dim):
        for j in range(g.dim):
            v = conn.gamma[i][j]
            if any(v):
                conn_lines.append(f"∇_e{i + 1} e{j + 1} = {format_vector(v)}")
    curv = {}
    for (a, b), op in rep.operators.items():
        if not op.is_zero():
            curv[f"e{a + 1},e{b + 1}"] = _fmt_images(op)
    res.put("connection", conn_lines)
    res.put("curvature", curv)
    res.put("flat", rep.flat)
    res.put("ricci", rep.ricci)
    res.put("ricci_flat", rep.ricci_flat)
    res.say("connection: " + ("zero" if not conn_lines else ""))
    for line in conn_lines:
        res.say("  " + line)
    res.say(f"flat: {rep.flat}")
    for key, lines in curv.items():
        res.say(f"  R({key}): " + "; ".join(lines))
    res.say(f"Ricci: {format_symmetric(rep.ricci) if not rep.ricci.is_zero() else '0'}")
    res.say(f"Ricci flat: {rep.ricci_flat}")
    geo = {}
    if sd is not None:
        for part, s in (("h", sd.h_part), ("V", sd.v_part)):
            if is_subalgebra(g, s):
                geo[part] = bool(is_totally_geodesic(conn, s))
                res.say(f"{part} totally geodesic: {geo[part]}")
    res.put("totally_geodesic", geo)
    return conn


def cmd_kahler(args):
    res = Result("kahler")
    g, sd = resolve(args.alg, args)
    J = _acs(g, args.acs)
    omega = TwoForm(g, read_document(args.form, "two_form").payload)
    checks = {
        "integrable": bool(is_integrable(J)),
        "closed": bool(is_closed(omega)),
        "nondegenerate": is_nondegenerate(omega),
        "compatible": bool(is_compatible(J, omega)),
    }
    for k, v in checks.items():
        res.put(k, v)
        res.say(f"{k}: {v}")
    if not (checks["compatible"] and checks["nondegenerate"]):
        res.code = REFUTED
        res.say("no induced metric")
        return res
    metric = kahler_metric(omega, J)
    res.put("metric", metric.matrix)
    res.put("signature", list(signature(metric)))
    res.put("hermitian", bool(hermitian_check(J, metric)))
    res.say(f"metric g(x,y) = ω(Jx,y): {format_symmetric(metric.matrix)}")
    res.say("signature (+, -, 0): {}".format(signature(metric)))
    conn = _geometry_lines(res, g, metric, sd)
    parallel = bool(is_parallel(conn, J))
    res.put("parallel_J", parallel)
    res.say(f"∇J = 0: {parallel}")
    if not (all(checks.values()) and parallel):
        res.code = REFUTED
    res.put("kahler", res.code == OK)
    res.say("Kähler pair verified" if res.code == OK else "not a Kähler pair")
    return res


def cmd_metric_geometry(args):
    res = Result("metric-geometry")
    g, sd = resolve(args.alg, args)
    metric = Metric(g, read_document(args.metric, "metric").payload)
    res.put("signature", list(signature(metric)))
    res.say(f"metric: {format_symmetric(metric.matrix)}")
    res.say("signature (+, -, 0): {}".format(signature(metric)))
    _geometry_lines(res, g, metric, sd)
    return res


# parser ------------------------------------------------------------------------------


def _add_params(p):
    p.add_argument("--lambda", dest="lam", metavar="Q", help="parameter of r3_lambda")
    p.add_argument("--eta", metavar="Q", help="parameter of r3p_eta")


def _add_identity(p):
    p.add_argument(
        "--identity-test",
        choices=("symbolic", "auto", "sampled"),
        default="symbolic",
        help="polynomial zero test; sampled mode reads LIECHECK_SEED",
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="liecheck", description="Exact checks on Lie algebra structures.")
    parser.add_argument("--version", action="version", version=f"liecheck {__version__}")
    parser.add_argument("--json", action="store_true", help="print a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or print catalog algebras")
    p.add_argument("action", choices=("list", "get"))
    p.add_argument("name", nargs="?")
    _add_params(p)
    p.set_defaults(func=cmd_catalog)

    for kind in ("tangent", "cotangent"):
        p = sub.add_parser(kind, help=f"bracket table of the {kind} algebra")
        p.add_argument("alg")
        _add_params(p)
        p.set_defaults(func=_construct(kind))

    p = sub.add_parser("verify-jacobi", help="check the Jacobi identity of a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_jacobi)

    for name, func in (("nijenhuis", cmd_nijenhuis), ("classify-acs", cmd_classify)):
        p = sub.add_parser(name)
        p.add_argument("alg")
        p.add_argument("--acs", required=True, metavar="FILE")
        _add_params(p)
        p.set_defaults(func=func)

    p = sub.add_parser("derivations", help="derivation algebra")
    p.add_argument("alg")
    p.add_argument("--nonsingular-witness", action="store_true")
    _add_params(p)
    _add_identity(p)
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("totally-real", help="totally real structures on h x V")
    p.add_argument("alg")
    p.add_argument("--rep", choices=("ad", "coad"), required=True)
    p.add_argument("--witness", action="store_true")
    _add_params(p)
    _add_identity(p)
    p.set_defaults(func=cmd_totally_real)

    p = sub.add_parser("closed-forms", help="closed 2-forms and symplectic witnesses")
    p.add_argument("alg")
    p.add_argument("--compatible-with", metavar="FILE")
    p.add_argument("--symplectic-witness", action="store_true")
    _add_params(p)
    _add_identity(p)
    p.set_defaults(func=cmd_closed_forms)

    p = sub.add_parser("kahler", help="Kähler pair report")
    p.add_argument("alg")
    p.add_argument("--acs", required=True, metavar="FILE")
    p.add_argument("--form", required=True, metavar="FILE")
    _add_params(p)
    p.set_defaults(func=cmd_kahler)

    p = sub.add_parser("metric-geometry", help="Levi-Civita connection and curvature")
    p.add_argument("alg")
    p.add_argument("--metric", required=True, metavar="FILE")
    _add_params(p)
    p.set_defaults(func=cmd_metric_geometry)
    return parser


def main(argv=None, stdout=None, stderr=None):
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    try:
        res = args.func(args)
    except LiecheckError as exc:
        name = type(exc).__name__
        if args.json:
            out.write(dumps({"command": args.command, "exit_code": INPUT_ERROR, "error": name, "message": str(exc)}) + "\n")
        err.write(f"error: {name}: {exc}\n")
        return INPUT_ERROR
    if args.json:
        out.write(dumps(res.report()) + "\n")
    else:
        out.write("\n".join(res.lines) + "\n")
    return res.code


if __name__ == "__main__":
    sys.exit(main())
