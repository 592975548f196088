"""Almost complex structures: integrability, special types, the ascending
series and totally real structures on semidirect products."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    DimensionMismatch,
    NotADerivation,
    NotAlmostComplex,
    OddDimension,
    SingularMap,
    Underdetermined,
)
from .exact.family import find_nonvanishing_member, linear_solution_space, matrix_units
from .exact.matrix import Matrix, det, inverse, kernel_basis, rref
from .exact.scalars import GaussianRational
from .lie import Subspace, adjoint_rep, center, commutator, is_abelian_subalgebra, is_derivation


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check over basis elements; ``witness`` is the first failure."""

    ok: bool
    witness: tuple = None
    value: tuple = None

    def __bool__(self):
        return self.ok


class AlmostComplexStructure:
    def __init__(self, parent, matrix):
        if parent.dim % 2:
            raise OddDimension(f"dimension {parent.dim} is odd")
        if matrix.shape != (parent.dim, parent.dim):
            raise DimensionMismatch("J must be a dim x dim matrix")
        if matrix @ matrix != -Matrix.identity(parent.dim):
            raise NotAlmostComplex("J^2 is not -I")
        self.parent = parent
        self.matrix = matrix

    @classmethod
    def from_images(cls, parent, images):
        return cls(parent, complete_acs(parent.dim, images))

    def __call__(self, v):
        return self.matrix.apply(v)

    def __eq__(self, other):
        if not isinstance(other, AlmostComplexStructure):
            return NotImplemented
        return self.parent == other.parent and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        from .notation import format_vector

        imgs = ", ".join(
            f"Je{j + 1}={format_vector(self.matrix.col(j))}" for j in range(self.parent.dim)
        )
        return f"<J {imgs}>"


def complete_acs(dim, images):
    """Solve for J with J^2 = -I from a partial list of images.

    ``images`` maps 0-based indices (or coordinate vectors) to image vectors.
    Each ``J u = w`` also forces ``J w = -u``. The completion must be unique.
    """
    pairs = []
    for key, w in dict(images).items():
        u = tuple(Fraction(int(k == key)) for k in range(dim)) if isinstance(key, int) else tuple(key)
        w = tuple(Fraction(c) for c in w)
        pairs.append((u, w))
        pairs.append((w, tuple(-c for c in u)))
    n2 = dim * dim
    rows = []
    for u, w in pairs:
        for r in range(dim):
            row = [Fraction(0)] * (n2 + 1)
            for c in range(dim):
                row[r * dim + c] = u[c]
            row[n2] = w[r]
            rows.append(row)
    reduced, pivots = rref(rows, n2 + 1)
    if n2 in pivots:
        raise NotAlmostComplex("the prescribed images are inconsistent with J^2 = -I")
    if len(pivots) < n2:
        raise Underdetermined(
            f"the images fix only {len(pivots)} of {n2} entries of J; give more images"
        )
    entries = [Fraction(0)] * n2
    for row, p in zip(reduced, pivots):
        entries[p] = row[n2]
    m = Matrix([entries[r * dim : (r + 1) * dim] for r in range(dim)], dim)
    if m @ m != -Matrix.identity(dim):
        raise NotAlmostComplex("completed map does not square to -I")
    return m


def nijenhuis(J, x, y):
    g = J.parent
    jx, jy = J(x), J(y)
    a = g.bracket(jx, jy)
    b = g.bracket(x, y)
    c = J(g.bracket(jx, y))
    d = J(g.bracket(x, jy))
    return tuple(p - q - r - s for p, q, r, s in zip(a, b, c, d))


def is_integrable(J):
    g = J.parent
    for i, j in combinations(range(g.dim), 2):
        n = nijenhuis(J, g.basis_vector(i), g.basis_vector(j))
        if any(n):
            return Verdict(False, (i, j), n)
    return Verdict(True)


def is_abelian_structure(J):
    g = J.parent
    for i, j in combinations(range(g.dim), 2):
        x, y = g.basis_vector(i), g.basis_vector(j)
        if g.bracket(J(x), J(y)) != g.bracket(x, y):
            return Verdict(False, (i, j))
    return Verdict(True)


def is_bi_invariant(J):
    g = J.parent
    for i in range(g.dim):
        for j in range(g.dim):
            x, y = g.basis_vector(i), g.basis_vector(j)
            if J(g.bracket(x, y)) != g.bracket(x, J(y)):
                return Verdict(False, (i, j))
    return Verdict(True)


def _split(splitting):
    if splitting is None:
        return None
    if hasattr(splitting, "h_part"):
        return splitting.h_part, splitting.v_part
    return splitting


def is_totally_real(J, splitting):
    h_part, v_part = _split(splitting)
    return h_part.image(J.matrix) == v_part


@dataclass(frozen=True)
class Classification:
    abelian: bool
    bi_invariant: bool
    totally_real: bool = None


def classify(J, splitting=None):
    tr = None if splitting is None else is_totally_real(J, splitting)
    return Classification(bool(is_abelian_structure(J)), bool(is_bi_invariant(J)), tr)


# ascending series ----------------------------------------------------------------


@dataclass(frozen=True)
class AscendingSeries:
    terms: tuple
    nilpotent: bool

    @property
    def step(self):
        return len(self.terms) - 1 if self.nilpotent else None


def ascending_series(J):
    g = J.parent
    terms = [Subspace.zero(g.dim)]
    for _ in range(g.dim + 1):
        p = Matrix(terms[-1].annihilator_rows(), g.dim)
        rows = []
        for k in range(g.dim):
            a = p @ g.ad(k)
            rows.extend(a.rows)
            rows.extend((a @ J.matrix).rows)
        nxt = Subspace(g.dim, kernel_basis(Matrix(rows, g.dim)))
        if nxt == terms[-1]:
            return AscendingSeries(tuple(terms), False)
        terms.append(nxt)
        if nxt.is_whole():
            return AscendingSeries(tuple(terms), True)
    raise AssertionError("ascending series did not stabilise")


def nilpotency_step(J):
    """First l with a_l(J) = g, or the string ``"not nilpotent"``."""
    s = ascending_series(J)
    return s.step if s.nilpotent else "not nilpotent"


# eigenspace of i -------------------------------------------------------------------


def _complex_span_contains(basis, v, dim):
    if not any(v):
        return True
    return len(rref(list(basis) + [tuple(v)], dim)[1]) == len(basis)


def eigenspace_basis(J):
    """Echelon basis over Q(i) of m = {x - iJx}."""
    g = J.parent
    vecs = []
    for k in range(g.dim):
        jk = J.matrix.col(k)
        vecs.append(
            tuple(GaussianRational(int(r == k), -jk[r]) for r in range(g.dim))
        )
    return rref(vecs, g.dim)[0]


def eigenspace_closure(J):
    """Whether [m, m] lies in m, computed over the Gaussian rationals."""
    g = J.parent
    m = eigenspace_basis(J)
    for a, b in combinations(range(len(m)), 2):
        br = g.bracket(m[a], m[b])
        if not _complex_span_contains(m, br, g.dim):
            return Verdict(False, (a, b), br)
    return Verdict(True)


def eigenspace_is_ideal(J):
    """Whether [g^C, m] lies in m."""
    g = J.parent
    m = eigenspace_basis(J)
    for k in range(g.dim):
        e = tuple(GaussianRational(int(r == k)) for r in range(g.dim))
        for a, u in enumerate(m):
            br = g.bracket(e, u)
            if not _complex_span_contains(m, br, g.dim):
                return Verdict(False, (k, a), br)
    return Verdict(True)


# totally real structures -------------------------------------------------------------


def totally_real_residual(h, rep, j):
    out = []
    for a, b in combinations(range(h.dim), 2):
        lhs = j.apply(h.basis_bracket(a, b))
        p = rep.action[a].apply(j.col(b))
        q = rep.action[b].apply(j.col(a))
        out.extend(x - y + z for x, y, z in zip(lhs, p, q))
    return out


def totally_real_space(h, rep):
    """All maps j: h -> V with j[x,y] = pi(x) j y - pi(y) j x (not necessarily invertible)."""
    if rep.space_dim != h.dim:
        raise DimensionMismatch("totally real structures need dim V = dim h")
    return linear_solution_space(matrix_units(h.dim), lambda j: totally_real_residual(h, rep, j))


def nonsingular_witness(family, method="symbolic", seed=0):
    return find_nonvanishing_member(family, "det", method, seed)


def totally_real_matrix(j):
    if det(j) == 0:
        raise SingularMap("the map j is singular")
    n = j.nrows
    z = Matrix.zeros(n)
    return Matrix.block([[z, -inverse(j)], [j, z]])


def totally_real_acs(sd, j):
    """``J(x, v) = (-j^-1 v, j x)`` on the semidirect algebra ``sd``."""
    if j.shape != (sd.h.dim, sd.h.dim) or sd.rep.space_dim != sd.h.dim:
        raise DimensionMismatch("j must be a square map h -> V")
    return AlmostComplexStructure(sd.total, totally_real_matrix(j))


def derivation_to_totally_real(h, d):
    from .constructions import tangent

    if not is_derivation(h, d):
        raise NotADerivation("the map is not a derivation")
    return totally_real_acs(tangent(h), d)


@dataclass(frozen=True)
class ObstructionReport:
    center_dim: int
    center_dim_odd: bool
    commutator_abelian: bool

    @property
    def obstructed(self):
        return self.center_dim_odd or not self.commutator_abelian


def abelian_obstruction(g):
    """Cheap necessary conditions for an abelian complex structure to exist."""
    z = center(g)
    return ObstructionReport(z.dim, z.dim % 2 == 1, is_abelian_subalgebra(g, commutator(g)))


def tangent_totally_real_equals_derivations(h):
    from .lie import derivation_space

    return totally_real_space(h, adjoint_rep(h)).same_span(derivation_space(h))
