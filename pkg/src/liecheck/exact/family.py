"""Affine families of matrices, polynomial identity tests and witness search."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..errors import DimensionMismatch
from .matrix import Matrix, det, echelon_basis, kernel_basis, pfaffian, rref
from .poly import MultiPoly

SYMBOLIC_MAX_VARS = 8
SYMBOLIC_MAX_DEGREE = 6


class ParamFamily:
    """The affine space ``base + sum_k t_k * directions[k]``.

    Most families produced by the solvers are linear (``base`` is zero).
    """

    def __init__(self, base, directions, names=None):
        self.base = base
        self.directions = tuple(directions)
        for d in self.directions:
            if d.shape != base.shape:
                raise DimensionMismatch("family directions must match the base shape")
        if names is None:
            names = [f"t{k + 1}" for k in range(len(self.directions))]
        self.names = tuple(names)
        if len(self.names) != len(self.directions):
            raise ValueError("one parameter name per direction is required")

    @classmethod
    def linear(cls, directions, shape, names=None):
        return cls(Matrix.zeros(*shape), directions, names)

    @property
    def dim(self):
        return len(self.directions)

    @property
    def shape(self):
        return self.base.shape

    def __len__(self):
        return self.dim

    def member(self, values):
        values = list(values)
        if len(values) != self.dim:
            raise ValueError(f"expected {self.dim} parameter values")
        out = self.base
        for c, d in zip(values, self.directions):
            if c:
                out = out + d * Fraction(c)
        return out

    def generic(self):
        """The family as a matrix of polynomials in its parameters."""
        gens = MultiPoly.generators(self.names)
        nrows, ncols = self.shape
        rows = []
        for i in range(nrows):
            row = []
            for j in range(ncols):
                p = MultiPoly.constant(self.names, self.base[i, j])
                for g, d in zip(gens, self.directions):
                    if d[i, j]:
                        p = p + g * d[i, j]
                row.append(p)
            rows.append(row)
        return Matrix(rows, ncols)

    def det_poly(self):
        return det(self.generic())

    def pfaffian_poly(self):
        return pfaffian(self.generic())

    def span_basis(self):
        """Echelon basis of the direction span (flattened), for set comparisons."""
        n = self.shape[0] * self.shape[1]
        return echelon_basis([d.flatten() for d in self.directions], n)

    def same_span(self, other):
        return self.shape == other.shape and self.span_basis() == other.span_basis()

    def contains(self, m):
        """True when ``m`` is a member of the family."""
        target = [a - b for a, b in zip(m.flatten(), self.base.flatten())]
        cols = [d.flatten() for d in self.directions]
        rows = [[c[i] for c in cols] + [target[i]] for i in range(len(target))]
        _, pivots = rref(rows, self.dim + 1)
        return self.dim not in pivots

    def __repr__(self):
        return f"ParamFamily(dim={self.dim}, shape={self.shape})"


def linear_solution_space(unknown_basis, residual, names=None):
    """All combinations of ``unknown_basis`` matrices killed by a linear map.

    ``residual(X)`` must be linear in ``X`` and return a flat sequence of
    scalars. The system matrix is assembled column by column from the
    residuals of the basis elements, then its kernel is taken.
    """
    unknown_basis = list(unknown_basis)
    columns = [tuple(residual(b)) for b in unknown_basis]
    shape = unknown_basis[0].shape
    if not columns or not columns[0]:
        return ParamFamily.linear(unknown_basis, shape, names)
    system = Matrix.from_columns(columns)
    dirs = []
    for v in kernel_basis(system):
        acc = Matrix.zeros(*shape)
        for c, b in zip(v, unknown_basis):
            if c:
                acc = acc + b * c
        dirs.append(acc)
    return ParamFamily.linear(dirs, shape, names)


def matrix_units(nrows, ncols=None):
    ncols = nrows if ncols is None else ncols
    return [Matrix.unit(nrows, ncols, i, j) for i in range(nrows) for j in range(ncols)]


@dataclass(frozen=True)
class ZeroTest:
    zero: bool
    exact: bool
    method: str
    seed: int = None
    samples: int = 0
    error_bound: Fraction = Fraction(0)

    def __bool__(self):
        return self.zero


def _sample_set(deg):
    # |S| = 4*deg + 4 keeps the per-sample error at most 1/4
    size = 4 * max(deg, 1) + 4
    half = size // 2
    return [Fraction(k) for k in range(-half, size - half)]


def is_identically_zero(p, method="auto", seed=0, samples=16):
    """Decide whether ``p`` is the zero polynomial.

    ``symbolic`` inspects terms and is exact. ``sampled`` evaluates at random
    points of a finite set S and reports the Schwartz-Zippel bound
    ``(deg/|S|)**samples`` on a false "zero" verdict. ``auto`` picks
    symbolic for small polynomials.
    """
    if not isinstance(p, MultiPoly):
        return ZeroTest(not p, True, "symbolic")
    if method == "auto":
        small = len(p.variables) <= SYMBOLIC_MAX_VARS and p.degree() <= SYMBOLIC_MAX_DEGREE
        method = "symbolic" if small else "sampled"
    if method == "symbolic":
        return ZeroTest(p.is_zero(), True, "symbolic")
    if method != "sampled":
        raise ValueError(f"unknown method {method!r}")
    deg = p.degree()
    pool = _sample_set(deg)
    rng = random.Random(seed)
    for _ in range(samples):
        point = [rng.choice(pool) for _ in p.variables]
        if p.evaluate(point):
            return ZeroTest(False, True, "sampled", seed, samples, Fraction(0))
    bound = Fraction(deg, len(pool)) ** samples
    return ZeroTest(True, deg == 0, "sampled", seed, samples, bound)


def value_rank(c):
    """0, 1, -1, 2, -2, ... get ranks 0, 1, 2, 3, 4, ..."""
    return 2 * c - 1 if c > 0 else -2 * c


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_points(n, max_height):
    """Integer points graded by height ``sum |c_i|``.

    Inside a grade, points are ordered colexicographically on value ranks,
    so earlier coordinates vary fastest: (1,0), (-1,0), (0,1), (0,-1), ...
    """
    if n == 0:
        yield ()
        return
    for h in range(max_height + 1):
        grade = []
        for mags in _compositions(h, n):
            choices = [(m,) if m == 0 else (m, -m) for m in mags]
            grade.extend(product(*choices))
        grade.sort(key=lambda pt: tuple(value_rank(c) for c in reversed(pt)))
        yield from grade


@dataclass(frozen=True)
class Witness:
    found: bool
    point: tuple = None
    value: Matrix = None
    determinant: object = None
    polynomial: MultiPoly = None
    zero_test: ZeroTest = field(default=None, repr=False)

    def __bool__(self):
        return self.found


def find_nonvanishing_member(family, mode="det", method="symbolic", seed=0):
    """Smallest-height member whose determinant (or Pfaffian) is nonzero.

    Returns a Witness with ``found=False`` when the polynomial vanishes
    identically. ``method`` is passed to :func:`is_identically_zero`; the
    default symbolic test is exact.
    """
    if family.dim == 0:
        value = family.base
        d = det(value) if mode == "det" else pfaffian(value)
        return Witness(bool(d), (), value if d else None, d)
    generic = family.generic()
    poly = det(generic) if mode == "det" else pfaffian(generic)
    test = is_identically_zero(poly, method, seed=seed)
    if test.zero:
        return Witness(False, polynomial=poly, zero_test=test)
    # a nonzero polynomial of degree d has a nonroot in {-d..d}^n
    bound = family.dim * max(poly.degree(), 1)
    for point in enumerate_points(family.dim, bound):
        val = poly.evaluate(point)
        if val:
            member = family.member(point)
            check = det(member) if mode == "det" else pfaffian(member)
            assert check == val
            return Witness(True, tuple(Fraction(c) for c in point), member, val, poly, test)
    raise AssertionError("witness search exhausted its height bound")
