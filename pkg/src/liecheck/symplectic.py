"""Two-forms and metrics on Lie algebras: closedness, nondegeneracy,
compatibility with complex structures, Kähler metrics and isotropy."""

from itertools import combinations

from .complex import Verdict, is_integrable, is_totally_real
from .errors import (
    Degenerate,
    DegenerateMetric,
    DimensionMismatch,
    MetricNotAdInvariant,
    NotACotangent,
    NotAntisymmetric,
    NotCompatible,
    NotIntegrable,
    NotSymmetric,
    NotTotallyReal,
    OddDimension,
)
from .exact.family import ParamFamily, find_nonvanishing_member, linear_solution_space
from .exact.matrix import Matrix, bilinear, det, kernel_basis, pfaffian
from .lie import Subspace, derivation_residual


class TwoForm:
    """``matrix[i][j] = omega(e_i, e_j)``."""

    def __init__(self, parent, matrix):
        if matrix.shape != (parent.dim, parent.dim):
            raise DimensionMismatch("form must be a dim x dim matrix")
        if not matrix.is_antisymmetric():
            raise NotAntisymmetric("2-form matrix is not antisymmetric")
        self.parent = parent
        self.matrix = matrix

    def __call__(self, x, y):
        return bilinear(self.matrix, x, y)

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return self.parent == other.parent and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"<TwoForm {format_two_form(self.matrix)}>"


class Metric:
    """Nondegenerate symmetric bilinear form, ``matrix[i][j] = g(e_i, e_j)``."""

    def __init__(self, parent, matrix):
        if matrix.shape != (parent.dim, parent.dim):
            raise DimensionMismatch("metric must be a dim x dim matrix")
        if not matrix.is_symmetric():
            raise NotSymmetric("metric matrix is not symmetric")
        if det(matrix) == 0:
            raise DegenerateMetric("metric is degenerate")
        self.parent = parent
        self.matrix = matrix

    def __call__(self, x, y):
        return bilinear(self.matrix, x, y)

    def __eq__(self, other):
        if not isinstance(other, Metric):
            return NotImplemented
        return self.parent == other.parent and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"<Metric {format_symmetric(self.matrix)}>"


def _term(c, body):
    from .exact.scalars import format_rational

    mag = abs(c)
    return ("-" if c < 0 else "+", body if mag == 1 else f"{format_rational(mag)}{body}")


def _join(parts):
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_two_form(m):
    n = m.nrows
    sep = "" if n < 10 else "^e"
    return _join(
        [_term(m[i, j], f"e{i + 1}{sep}{j + 1}") for i, j in combinations(range(n), 2) if m[i, j]]
    )


def format_symmetric(m):
    n = m.nrows
    return _join(
        [_term(m[i, j], f"e{i + 1}.e{j + 1}") for i in range(n) for j in range(i, n) if m[i, j]]
    )


# closedness and nondegeneracy ---------------------------------------------------------


def closedness_residual(g, m):
    out = []
    for i, j, k in combinations(range(g.dim), 3):
        ei, ej, ek = g.basis_vector(i), g.basis_vector(j), g.basis_vector(k)
        out.append(
            bilinear(m, g.basis_bracket(i, j), ek)
            + bilinear(m, g.basis_bracket(j, k), ei)
            + bilinear(m, g.basis_bracket(k, i), ej)
        )
    return out


def is_closed(omega):
    """Cyclic sum omega([x,y],z) + omega([y,z],x) + omega([z,x],y) on basis triples."""
    g = omega.parent
    for (i, j, k), r in zip(combinations(range(g.dim), 3), closedness_residual(g, omega.matrix)):
        if r:
            return Verdict(False, (i, j, k), r)
    return Verdict(True)


def is_nondegenerate(omega):
    m = omega.matrix if hasattr(omega, "matrix") else omega
    if m.nrows % 2:
        raise OddDimension("nondegenerate 2-forms need even dimension")
    return pfaffian(m) != 0


def compatibility_residual(j, m):
    return list((j.T @ m @ j - m).flatten())


def is_compatible(J, omega):
    """omega(Jx, Jy) = omega(x, y)."""
    return J.matrix.T @ omega.matrix @ J.matrix == omega.matrix


# families ----------------------------------------------------------------------------


class FormFamily(ParamFamily):
    """A linear family of 2-forms with parameters ``a<i><j>`` style names."""

    def __init__(self, parent, base, directions, names=None):
        super().__init__(base, directions, names)
        self.parent = parent

    def form(self, values):
        return TwoForm(self.parent, self.member(values))

    def coordinates(self, m):
        """Upper-triangle coordinates alpha_ij (i < j) of a 2-form matrix."""
        return tuple(m[i, j] for i, j in combinations(range(self.parent.dim), 2))

    def constraints(self):
        """Echelon basis of the linear relations satisfied by every member."""
        pts = [self.coordinates(d) for d in self.directions]
        n = len(list(combinations(range(self.parent.dim), 2)))
        if not pts:
            return Subspace.whole(n)
        return Subspace(n, kernel_basis(Matrix(pts, n)))


def two_form_units(dim):
    out, names = [], []
    for i, j in combinations(range(dim), 2):
        rows = [[0] * dim for _ in range(dim)]
        rows[i][j] = 1
        rows[j][i] = -1
        out.append(Matrix(rows, dim))
        names.append(f"a{i + 1}{j + 1}" if dim < 10 else f"a{i + 1}_{j + 1}")
    return out, names


def _form_family(g, residual):
    units, _ = two_form_units(g.dim)
    fam = linear_solution_space(units, residual)
    names = [f"t{k + 1}" for k in range(fam.dim)]
    return FormFamily(g, fam.base, fam.directions, names)


def closed_form_space(g):
    return _form_family(g, lambda m: closedness_residual(g, m))


def compatible_closed_space(g, J):
    return _form_family(
        g, lambda m: closedness_residual(g, m) + compatibility_residual(J.matrix, m)
    )


def symplectic_witness(family, method="symbolic", seed=0):
    """A closed nondegenerate member of smallest height, or ``found=False``."""
    if family.shape[0] % 2:
        raise OddDimension("symplectic forms need even dimension")
    return find_nonvanishing_member(family, "pfaffian", method, seed)


# metrics --------------------------------------------------------------------------------


def kahler_metric(omega, J):
    """g(x, y) = omega(Jx, y)."""
    if not is_compatible(J, omega):
        raise NotCompatible("omega(Jx, Jy) differs from omega(x, y)")
    if not is_nondegenerate(omega):
        raise Degenerate("omega is degenerate")
    m = J.matrix.T @ omega.matrix
    if not m.is_symmetric():
        raise AssertionError("compatible pair produced a non-symmetric metric")
    g = Metric(omega.parent, m)
    if not hermitian_check(J, g):
        raise AssertionError("Kähler metric is not Hermitian")
    return g


def signature(m):
    """(positive, negative, zero) counts by exact congruence diagonalisation."""
    m = m.matrix if hasattr(m, "matrix") else m
    a = [list(r) for r in m.rows]
    n = len(a)
    pos = neg = 0
    size = n
    k = 0
    while k < size:
        # bring a nonzero diagonal entry to position k
        piv = next((i for i in range(k, size) if a[i][i]), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, size) for j in range(i + 1, size) if a[i][j]), None
            )
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j gives diagonal 2 a_ij != 0
            for r in range(n):
                a[r][i] += a[r][j]
            for c in range(n):
                a[i][c] += a[j][c]
            piv = i
        a[k], a[piv] = a[piv], a[k]
        for r in a:
            r[k], r[piv] = r[piv], r[k]
        d = a[k][k]
        for i in range(k + 1, size):
            f = a[i][k] / d
            if f:
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, neg, n - pos - neg


def canonical_cotangent_metric(sd):
    """The neutral pairing of h with its dual on a cotangent algebra."""
    if getattr(sd, "kind", None) != "cotangent":
        raise NotACotangent("the canonical metric is defined on cotangent algebras only")
    n = sd.h.dim
    z, one = Matrix.zeros(n), Matrix.identity(n)
    return Metric(sd.total, Matrix.block([[z, one], [one, z]]))


def is_ad_invariant(g, metric):
    """<[x,y],z> + <y,[x,z]> = 0, i.e. ad(x)^T G + G ad(x) = 0 for basis x."""
    m = metric.matrix if hasattr(metric, "matrix") else metric
    for i in range(g.dim):
        a = g.ad(i)
        r = a.T @ m + m @ a
        if not r.is_zero():
            return Verdict(False, (i,))
    return Verdict(True)


def hermitian_check(J, metric):
    m = metric.matrix if hasattr(metric, "matrix") else metric
    for i in range(J.parent.dim):
        for j in range(i, J.parent.dim):
            x, y = J.parent.basis_vector(i), J.parent.basis_vector(j)
            if bilinear(m, J(x), J(y)) != bilinear(m, x, y):
                return Verdict(False, (i, j))
    return Verdict(True)


def generalized_cs_check(sd, J):
    """``complex``, ``symplectic``, ``hermitian_only`` or ``not_hermitian``."""
    metric = canonical_cotangent_metric(sd)
    if not is_integrable(J):
        raise NotIntegrable("J is not integrable")
    if not hermitian_check(J, metric):
        return "not_hermitian"
    image = sd.h_part.image(J.matrix)
    if image == sd.h_part:
        return "complex"
    if image == sd.v_part:
        return "symplectic"
    return "hermitian_only"


def orthogonal(s, m):
    rows = [Matrix([v], len(v)).__matmul__(m).rows[0] for v in s.basis]
    if not rows:
        return Subspace.whole(s.ambient)
    return Subspace(s.ambient, kernel_basis(Matrix(rows, s.ambient)))


def isotropy_type(s, form):
    """``nondegenerate``, ``isotropic``, ``totally_isotropic`` or ``degenerate``.

    For 2-forms a subspace equal to its orthogonal is reported as ``lagrangian``.
    """
    m = form.matrix if hasattr(form, "matrix") else form
    perp = orthogonal(s, m)
    if s == perp:
        return "lagrangian" if m.is_antisymmetric() and not m.is_zero() else "totally_isotropic"
    if s.issubset(perp):
        return "isotropic"
    if s.intersection(perp).dim == 0:
        return "nondegenerate"
    return "degenerate"


def lagrangian_form(sd, J):
    """omega_J(x + u, y + v) = v(Jx) - u(Jy) on the dual semidirect product.

    Returns ``(dual_algebra, TwoForm)``.
    """
    from .constructions import dual_representation, semidirect

    if not is_totally_real(J, sd):
        raise NotTotallyReal("J does not map h onto V")
    if not is_integrable(J):
        raise NotIntegrable("J is not integrable")
    n = sd.h.dim
    j = Matrix([[J.matrix[n + a, i] for i in range(n)] for a in range(n)], n)
    dual = semidirect(sd.h, dual_representation(sd.rep))
    z = Matrix.zeros(n)
    omega = TwoForm(dual.total, Matrix.block([[z, j.T], [-j, z]]))
    return dual, omega


def skew_nonsingular_derivation(h, metric):
    """A nonsingular derivation skew for ``metric``, or ``found=False``."""
    from .exact.family import matrix_units

    m = metric.matrix if hasattr(metric, "matrix") else metric
    if not is_ad_invariant(h, m):
        raise MetricNotAdInvariant("the metric is not ad-invariant")

    def residual(d):
        return derivation_residual(h, d) + list((d.T @ m + m @ d).flatten())

    fam = linear_solution_space(matrix_units(h.dim), residual)
    return find_nonvanishing_member(fam, "det")


def form_family_from_terms(parent, terms):
    """Linear family spanned by the given 2-form matrices."""
    return FormFamily(parent, Matrix.zeros(parent.dim), terms, [f"t{k + 1}" for k in range(len(terms))])
