"""Lie algebras given by structure constants, subspaces and derivations."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    JacobiViolation,
    RepresentationInvalid,
)
from .exact.family import linear_solution_space, matrix_units
from .exact.matrix import MAX_DIM, Matrix, kernel_basis, rref
from .exact.scalars import to_rational
from .notation import format_vector, parse_relations


def _zero_like(x):
    return x * 0 if not isinstance(x, int) else Fraction(0)


class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i, j][k] e_k`` stored for i < j.

    Indices are 0-based internally; labels default to ``e1 .. en``.
    """

    def __init__(self, dim, structure=None, labels=None, name=None, validate=True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if dim > MAX_DIM:
            raise DimensionTooLarge(f"dimension {dim} exceeds {MAX_DIM}")
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"e{k + 1}" for k in range(dim))
        if len(self.labels) != dim:
            raise DimensionMismatch("one label per basis element is required")
        self.name = name
        table = {}
        for (i, j), vec in (structure or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) out of range")
            vec = tuple(to_rational(c) for c in vec)
            if len(vec) != dim:
                raise DimensionMismatch("bracket value has the wrong length")
            if i == j:
                if any(vec):
                    raise ValueError("[e_i, e_i] must vanish")
                continue
            if i > j:
                i, j = j, i
                vec = tuple(-c for c in vec)
            if any(vec):
                table[(i, j)] = vec
        self.structure = dict(sorted(table.items()))
        self._ad = None
        if validate:
            self.check_jacobi()

    @classmethod
    def from_relations(cls, text, dim, name=None, labels=None):
        return cls(dim, parse_relations(text, dim), labels=labels, name=name)

    # brackets ---------------------------------------------------------------
    def basis_bracket(self, i, j):
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self.structure.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-c for c in self.structure.get((j, i), (0,) * self.dim))

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"vectors must have length {self.dim}")
        out = None
        for (i, j), v in self.structure.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                if out is None:
                    out = [c * a for a in v]
                else:
                    out = [o + c * a for o, a in zip(out, v)]
        if out is None:
            z = _zero_like(x[0])
            return (z,) * self.dim
        return tuple(out)

    def ad(self, i):
        """Matrix of ad(e_i); column j is [e_i, e_j]."""
        if self._ad is None:
            self._ad = tuple(
                Matrix.from_columns([self.basis_bracket(k, j) for j in range(self.dim)])
                for k in range(self.dim)
            )
        return self._ad[i]

    def ad_of(self, x):
        out = Matrix.zeros(self.dim)
        for i, c in enumerate(x):
            if c:
                out = out + self.ad(i) * c
        return out

    def basis_vector(self, i):
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    # validation ---------------------------------------------------------------
    def jacobi_residual(self, i, j, k):
        e = self.basis_vector
        a = self.bracket(self.basis_bracket(i, j), e(k))
        b = self.bracket(self.basis_bracket(j, k), e(i))
        c = self.bracket(self.basis_bracket(k, i), e(j))
        return tuple(x + y + z for x, y, z in zip(a, b, c))

    def check_jacobi(self):
        for i, j, k in combinations(range(self.dim), 3):
            r = self.jacobi_residual(i, j, k)
            if any(r):
                raise JacobiViolation(i, j, k, r)

    # presentation ---------------------------------------------------------------
    def table(self):
        """Nonzero brackets as ``(i, j, vector)`` with 0-based i < j."""
        return [(i, j, v) for (i, j), v in self.structure.items()]

    def relations(self):
        return ", ".join(
            f"[{self.labels[i]},{self.labels[j]}]={format_vector(v, self.labels)}"
            for i, j, v in self.table()
        )

    def is_abelian(self):
        return not self.structure

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure == other.structure

    def __hash__(self):
        return hash((self.dim, tuple(self.structure.items())))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<LieAlgebra{tag} dim={self.dim}: {self.relations() or 'abelian'}>"


def make_lie_algebra(dim, labels=None, table=None, name=None):
    """Build and validate an algebra; ``table`` maps (i, j) to vectors or is relation text."""
    if isinstance(table, str):
        table = parse_relations(table, dim)
    return LieAlgebra(dim, table or {}, labels=labels, name=name)


def abelian(dim, name=None):
    return LieAlgebra(dim, {}, name=name or f"R{dim}")


# subspaces ---------------------------------------------------------------------


class Subspace:
    """A subspace of Q^n held by its reduced echelon basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, vectors=()):
        self.ambient = ambient
        vecs = [tuple(to_rational(c) for c in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch("vector length does not match ambient dimension")
        self.basis = tuple(rref(vecs, ambient)[0]) if vecs else ()

    @classmethod
    def whole(cls, n):
        return cls(n, [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def span_of_basis(cls, n, indices):
        return cls(n, [tuple(Fraction(int(i == j)) for j in range(n)) for i in indices])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def contains(self, v):
        if not any(v):
            return True
        return len(rref(list(self.basis) + [tuple(v)], self.ambient)[1]) == self.dim

    __contains__ = contains

    def issubset(self, other):
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __add__(self, other):
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other):
        if not self.basis or not other.basis:
            return Subspace(self.ambient)
        a, b = self.basis, other.basis
        cols = list(a) + [tuple(-c for c in v) for v in b]
        m = Matrix.from_columns(cols, self.ambient)
        vecs = []
        for k in kernel_basis(m):
            v = [Fraction(0)] * self.ambient
            for c, u in zip(k[: len(a)], a):
                if c:
                    v = [x + c * y for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace(self.ambient, vecs)

    def image(self, matrix):
        return Subspace(self.ambient, [matrix.apply(v) for v in self.basis])

    def annihilator_rows(self):
        """Rows of a matrix whose kernel is exactly this subspace."""
        if not self.basis:
            return [tuple(Fraction(int(i == j)) for j in range(self.ambient)) for i in range(self.ambient)]
        return kernel_basis(Matrix(self.basis, self.ambient))

    def is_whole(self):
        return self.dim == self.ambient

    def labels(self):
        return [format_vector(v) for v in self.basis]

    def __repr__(self):
        return f"span{{{', '.join(self.labels())}}}" if self.basis else "{0}"


def bracket_span(g, s, t):
    return Subspace(g.dim, [g.bracket(x, y) for x in s.basis for y in t.basis])


def is_subalgebra(g, s):
    return bracket_span(g, s, s).issubset(s)


def is_ideal(g, s):
    return bracket_span(g, Subspace.whole(g.dim), s).issubset(s)


def is_abelian_subalgebra(g, s):
    return bracket_span(g, s, s).dim == 0


def center(g):
    rows = [r for i in range(g.dim) for r in g.ad(i).rows]
    return Subspace(g.dim, kernel_basis(Matrix(rows, g.dim)))


def commutator(g):
    return Subspace(g.dim, [v for _, _, v in g.table()])


def lower_central_series(g):
    whole = Subspace.whole(g.dim)
    series = [whole]
    for _ in range(g.dim + 1):
        nxt = bracket_span(g, whole, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def derived_series(g):
    series = [Subspace.whole(g.dim)]
    for _ in range(g.dim + 1):
        nxt = bracket_span(g, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


@dataclass(frozen=True)
class CharacteristicReport:
    center: Subspace
    commutator: Subspace
    lower_central: tuple
    derived: tuple
    is_nilpotent: bool
    is_solvable: bool
    is_unimodular: bool


def characteristic_report(g):
    lcs = lower_central_series(g)
    ds = derived_series(g)
    trace_free = all(sum(g.ad(i)[k, k] for k in range(g.dim)) == 0 for i in range(g.dim))
    return CharacteristicReport(
        center=center(g),
        commutator=commutator(g),
        lower_central=tuple(lcs),
        derived=tuple(ds),
        is_nilpotent=lcs[-1].dim == 0,
        is_solvable=ds[-1].dim == 0,
        is_unimodular=trace_free,
    )


def is_nilpotent(g):
    return lower_central_series(g)[-1].dim == 0


# derivations -------------------------------------------------------------------


def derivation_residual(g, d):
    out = []
    for i, j in combinations(range(g.dim), 2):
        lhs = d.apply(g.basis_bracket(i, j))
        a = g.bracket(d.col(i), g.basis_vector(j))
        b = g.bracket(g.basis_vector(i), d.col(j))
        out.extend(x - y - z for x, y, z in zip(lhs, a, b))
    return out


def is_derivation(g, d):
    return not any(derivation_residual(g, d))


def derivation_space(g):
    """All derivations, as a linear family of dim x dim matrices."""
    return linear_solution_space(matrix_units(g.dim), lambda d: derivation_residual(g, d))


# representations ---------------------------------------------------------------


class Representation:
    """Action matrices ``action[i] = pi(e_i)`` of ``source`` on Q^space_dim."""

    def __init__(self, source, action, space_dim=None, name=None, validate=True):
        self.source = source
        self.action = tuple(action)
        if len(self.action) != source.dim:
            raise RepresentationInvalid("one action matrix per basis element is required")
        if space_dim is None:
            space_dim = self.action[0].nrows if self.action else 0
        self.space_dim = space_dim
        self.name = name
        for a in self.action:
            if a.shape != (space_dim, space_dim):
                raise RepresentationInvalid("action matrices must be square of size dim V")
        if validate:
            self.check()

    def check(self):
        g = self.source
        for i, j in combinations(range(g.dim), 2):
            lhs = self.matrix_of(g.basis_bracket(i, j))
            a, b = self.action[i], self.action[j]
            if lhs != a @ b - b @ a:
                raise RepresentationInvalid(
                    f"pi([e{i + 1},e{j + 1}]) differs from [pi(e{i + 1}), pi(e{j + 1})]"
                )

    def matrix_of(self, x):
        out = Matrix.zeros(self.space_dim)
        for c, a in zip(x, self.action):
            if c:
                out = out + a * c
        return out

    def is_zero(self):
        return all(a.is_zero() for a in self.action)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.source == other.source and self.action == other.action

    def __hash__(self):
        return hash((self.source, self.action))

    def __repr__(self):
        return f"<Representation {self.name or ''} of dim {self.space_dim}>"


def adjoint_rep(g):
    return Representation(g, [g.ad(i) for i in range(g.dim)], g.dim, name="ad")


def coadjoint_rep(g):
    """Action ``-(ad e_i)^T`` on the dual space in the dual basis."""
    return Representation(g, [-g.ad(i).T for i in range(g.dim)], g.dim, name="coad")


def zero_rep(g, space_dim):
    return Representation(g, [Matrix.zeros(space_dim) for _ in range(g.dim)], space_dim, name="zero")
