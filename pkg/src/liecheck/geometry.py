"""Left-invariant pseudo-Riemannian geometry computed on the Lie algebra."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .complex import Verdict
from .errors import DegenerateMetric, NotASubalgebra
from .exact.matrix import Matrix, bilinear, det, inverse
from .lie import is_subalgebra


class Connection:
    """``gamma[i][j]`` is the coordinate vector of nabla_{e_i} e_j."""

    def __init__(self, parent, gamma, metric=None):
        self.parent = parent
        self.gamma = tuple(tuple(tuple(v) for v in row) for row in gamma)
        self.metric = metric
        self._mats = {}

    def matrix(self, x):
        """Matrix of nabla_x; column j is nabla_x e_j."""
        n = self.parent.dim
        cols = []
        for j in range(n):
            col = [Fraction(0)] * n
            for i, c in enumerate(x):
                if c:
                    col = [a + c * b for a, b in zip(col, self.gamma[i][j])]
            cols.append(col)
        return Matrix.from_columns(cols, n)

    def basis_matrix(self, i):
        if i not in self._mats:
            self._mats[i] = self.matrix(self.parent.basis_vector(i))
        return self._mats[i]

    def nabla(self, x, y):
        return self.matrix(x).apply(y)

    def is_zero(self):
        return not any(any(v) for row in self.gamma for v in row)

    def torsion_free(self):
        g = self.parent
        for i, j in combinations(range(g.dim), 2):
            lhs = [a - b for a, b in zip(self.gamma[i][j], self.gamma[j][i])]
            if tuple(lhs) != g.basis_bracket(i, j):
                return Verdict(False, (i, j))
        return Verdict(True)

    def metric_compatible(self, metric=None):
        m = metric if metric is not None else self.metric
        m = m.matrix if hasattr(m, "matrix") else m
        for i in range(self.parent.dim):
            a = self.basis_matrix(i)
            if not (a.T @ m + m @ a).is_zero():
                return Verdict(False, (i,))
        return Verdict(True)


def levi_civita(g, metric):
    """Koszul formula for left-invariant fields:
    2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>."""
    m = metric.matrix if hasattr(metric, "matrix") else metric
    if det(m) == 0:
        raise DegenerateMetric("metric is degenerate")
    m_inv = inverse(m)
    n = g.dim
    half = Fraction(1, 2)
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = []
            for k in range(n):
                ei, ej, ek = g.basis_vector(i), g.basis_vector(j), g.basis_vector(k)
                rhs.append(
                    half
                    * (
                        bilinear(m, g.basis_bracket(i, j), ek)
                        - bilinear(m, g.basis_bracket(j, k), ei)
                        + bilinear(m, g.basis_bracket(k, i), ej)
                    )
                )
            row.append(m_inv.apply(rhs))
        gamma.append(row)
    conn = Connection(g, gamma, m)
    if not conn.torsion_free():
        raise AssertionError("Levi-Civita connection has torsion")
    if not conn.metric_compatible():
        raise AssertionError("Levi-Civita connection is not metric")
    return conn


@dataclass(frozen=True)
class CurvatureReport:
    operators: dict
    ricci: Matrix
    flat: bool
    ricci_flat: bool

    def R(self, a, b):
        """Curvature operator R(e_a, e_b) as a matrix."""
        if a == b:
            return Matrix.zeros(self.ricci.nrows)
        if a < b:
            return self.operators[(a, b)]
        return -self.operators[(b, a)]

    def apply(self, x, y, z):
        """R(x, y) z for coordinate vectors."""
        n = self.ricci.nrows
        out = [Fraction(0)] * n
        for a in range(n):
            for b in range(n):
                c = x[a] * y[b]
                if c and a != b:
                    out = [o + c * v for o, v in zip(out, self.R(a, b).apply(z))]
        return tuple(out)

    def nonzero_pairs(self):
        return [k for k, v in self.operators.items() if not v.is_zero()]


def curvature_report(conn):
    """R(x,y) = [nabla_x, nabla_y] - nabla_[x,y] on basis pairs, plus Ricci.

    Ricci is r(x, y) = trace of v -> R(x, v) y.
    """
    g = conn.parent
    n = g.dim
    ops = {}
    for a, b in combinations(range(n), 2):
        na, nb = conn.basis_matrix(a), conn.basis_matrix(b)
        ops[(a, b)] = na @ nb - nb @ na - conn.matrix(g.basis_bracket(a, b))
    rep = CurvatureReport(ops, Matrix.zeros(n), False, False)
    ric = []
    for x in range(n):
        row = []
        for y in range(n):
            row.append(sum((rep.R(x, v)[v, y] for v in range(n)), Fraction(0)))
        ric.append(row)
    ricci = Matrix(ric, n)
    flat = all(op.is_zero() for op in ops.values())
    return CurvatureReport(ops, ricci, flat, ricci.is_zero())


def bianchi_holds(report, n):
    """Cyclic sum R(x,y)z + R(y,z)x + R(z,x)y = 0; repeated indices cancel trivially."""
    for x, y, z in combinations(range(n), 3):
        s = [a + b + c for a, b, c in zip(
            report.R(x, y).col(z), report.R(y, z).col(x), report.R(z, x).col(y)
        )]
        if any(s):
            return False
    return True


def is_parallel(conn, J):
    """nabla_{e_i}(J e_j) = J nabla_{e_i} e_j for all i, j."""
    jm = J.matrix if hasattr(J, "matrix") else J
    for i in range(conn.parent.dim):
        a = conn.basis_matrix(i)
        if a @ jm != jm @ a:
            return Verdict(False, (i,))
    return Verdict(True)


def is_totally_geodesic(conn, s):
    g = conn.parent
    if not is_subalgebra(g, s):
        raise NotASubalgebra("subspace is not closed under the bracket")
    for x in s.basis:
        for y in s.basis:
            v = conn.nabla(x, y)
            if not s.contains(v):
                return Verdict(False, (x, y), v)
    return Verdict(True)


def flat_on(report, s):
    """R(x, y) z = 0 for all x, y, z in the subspace."""
    for x in s.basis:
        for y in s.basis:
            for z in s.basis:
                if any(report.apply(x, y, z)):
                    return False
    return True
