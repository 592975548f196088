"""Dense exact matrices and the linear-algebra kernels built on them.

Entries may be Fractions, GaussianRationals or MultiPolys. Row reduction
needs a field (Fractions or GaussianRationals); determinants and Pfaffians
work over any of the three.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

from ..errors import (
    DimensionMismatch,
    DimensionTooLarge,
    PfaffianOnNonAntisymmetric,
    PfaffianOnOddDim,
)
from .poly import MultiPoly
from .scalars import GaussianRational, to_rational

MAX_DIM = 16


def _scalar(x):
    if type(x) is Fraction:
        return x
    if isinstance(x, (GaussianRational, MultiPoly)):
        return x
    return to_rational(x)


def _is_zero(x):
    return not x


class Matrix:
    """Immutable dense matrix. ``m[i, j]`` is row i, column j (0-based)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(_scalar(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @classmethod
    def unit(cls, nrows, ncols, i, j):
        rows = [[0] * ncols for _ in range(nrows)]
        rows[i][j] = 1
        return cls(rows, ncols)

    @classmethod
    def block(cls, blocks):
        """Assemble from a 2-D list of matrices."""
        rows = []
        for brow in blocks:
            height = brow[0].nrows
            for i in range(height):
                rows.append([x for b in brow for x in b.rows[i]])
        return cls(rows)

    # access ---------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self):
        return [list(r) for r in self.rows]

    @property
    def T(self):
        return Matrix([self.col(j) for j in range(self.ncols)], self.nrows)

    def map(self, fn):
        return Matrix([[fn(x) for x in r] for r in self.rows], self.ncols)

    def flatten(self):
        return tuple(x for r in self.rows for x in r)

    # arithmetic -----------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            out_row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out, other.ncols)

    def apply(self, vector):
        """Matrix times a coordinate column (given as a sequence)."""
        if len(vector) != self.ncols:
            raise DimensionMismatch("vector length does not match matrix columns")
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, vector):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(_scalar(x) for x in out)

    def __pow__(self, n):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(n):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    # predicates -----------------------------------------------------------
    def is_square(self):
        return self.nrows == self.ncols

    def is_zero(self):
        return all(_is_zero(x) for r in self.rows for x in r)

    def is_symmetric(self):
        return self.is_square() and self == self.T

    def is_antisymmetric(self):
        return self.is_square() and self == -self.T

    # linear algebra ---------------------------------------------------------
    def rank(self):
        return rank(self)

    def det(self):
        return det(self)

    def pfaffian(self):
        return pfaffian(self)

    def inverse(self):
        return inverse(self)

    def kernel(self):
        return kernel_basis(self)


def _guard(m):
    if m.nrows > MAX_DIM or m.ncols > MAX_DIM:
        raise DimensionTooLarge(f"matrices larger than {MAX_DIM}x{MAX_DIM} are rejected")


def rref(rows, ncols=None):
    """Reduced row echelon form over a field.

    Returns ``(rows, pivots)`` with zero rows dropped. Entries must support
    exact division (Fraction or GaussianRational).
    """
    work = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pr = work[r]
        inv = pr[c]
        if inv != 1:
            pr[:] = [x / inv for x in pr]
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                if f:
                    wi = work[i]
                    for k in range(c, ncols):
                        if pr[k]:
                            wi[k] = wi[k] - f * pr[k]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], pivots


def rank(m):
    rows = m.rows if isinstance(m, Matrix) else m
    return len(rref(rows)[1])


def kernel_basis(m):
    """Basis of ``{v : m v = 0}``, one vector per free column.

    Each vector has a 1 in its free column, 0 in the other free columns and
    the values forced on the pivot columns, so the output is deterministic.
    """
    ncols = m.ncols
    reduced, pivots = rref(m.rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(_scalar(x) for x in v))
    return basis


def echelon_basis(vectors, dim):
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    return tuple(rref([tuple(v) for v in vectors], dim)[0])


def _bareiss_integer(a):
    """Fraction-free determinant of a square integer matrix (list of lists)."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(m):
    scales = []
    rows = []
    for r in m.rows:
        s = lcm(*(x.denominator for x in r)) if r else 1
        scales.append(s)
        rows.append([int(x * s) for x in r])
    d = Fraction(_bareiss_integer(rows))
    for s in scales:
        d /= s
    return d


def _det_field(m):
    a = [list(r) for r in m.rows]
    n = len(a)
    d = GaussianRational(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return GaussianRational(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d = d * a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def _det_expansion(m):
    """Division-free cofactor expansion, memoised on column subsets."""
    n = m.nrows
    rows = m.rows
    zero = rows[0][0] * 0 if n else 0

    @lru_cache(maxsize=None)
    def minor(cols):
        k = n - len(cols)
        if not cols:
            return zero + 1
        total = zero
        for idx, c in enumerate(cols):
            a = rows[k][c]
            if a:
                sub = minor(cols[:idx] + cols[idx + 1 :])
                total = total + a * sub if idx % 2 == 0 else total - a * sub
        return total

    return minor(tuple(range(n)))


def _entry_kind(m):
    kinds = {type(x) for r in m.rows for x in r}
    if MultiPoly in kinds:
        return "poly"
    if GaussianRational in kinds:
        return "gauss"
    return "rational"


def det(m):
    if not m.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    _guard(m)
    if m.nrows == 0:
        return Fraction(1)
    kind = _entry_kind(m)
    if kind == "rational":
        return _det_fraction(m)
    if kind == "gauss":
        return _det_field(m.map(lambda x: x if isinstance(x, GaussianRational) else GaussianRational(x)))
    return _det_expansion(m)


def pfaffian(m):
    """Pfaffian by recursive expansion along the first row.

    Convention: the block-diagonal matrix with blocks [[0, 1], [-1, 0]] has
    Pfaffian +1.
    """
    if not m.is_square():
        raise DimensionMismatch("Pfaffian of a non-square matrix")
    _guard(m)
    n = m.nrows
    if n % 2:
        raise PfaffianOnOddDim(f"Pfaffian needs even dimension, got {n}")
    if not m.is_antisymmetric():
        raise PfaffianOnNonAntisymmetric("Pfaffian needs an antisymmetric matrix")
    rows = m.rows
    zero = rows[0][0] * 0 if n else 0

    @lru_cache(maxsize=None)
    def pf(idx):
        if not idx:
            return zero + 1
        first = idx[0]
        total = zero
        for pos in range(1, len(idx)):
            a = rows[first][idx[pos]]
            if a:
                rest = idx[1:pos] + idx[pos + 1 :]
                term = a * pf(rest)
                total = total + term if pos % 2 == 1 else total - term
        return total

    return pf(tuple(range(n)))


def det_and_pfaffian(m, mode="det"):
    if mode == "det":
        return det(m)
    if mode == "pfaffian":
        return pfaffian(m)
    raise ValueError(f"mode must be 'det' or 'pfaffian', not {mode!r}")


def inverse(m):
    if not m.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.nrows
    aug = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, r in enumerate(m.rows)]
    reduced, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix([row[n:] for row in reduced[:n]], n)


def solve(m, rhs):
    """One solution of ``m x = rhs`` or None when inconsistent."""
    ncols = m.ncols
    aug = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_is_zero(v):
    return not any(v)


def dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def bilinear(m, u, v):
    """``u^T m v``."""
    return dot(u, m.apply(v))
