"""Semidirect products, tangent and cotangent algebras, the 3-dimensional
catalog and transport of structures along isomorphisms."""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingParameter, NotAnIsomorphism, RepresentationInvalid, UnknownAlgebra
from .exact.matrix import Matrix, inverse, rank
from .exact.scalars import format_rational, to_rational
from .lie import LieAlgebra, Representation, Subspace, adjoint_rep, coadjoint_rep


@dataclass(frozen=True)
class SemidirectAlgebra:
    """``h`` acting on ``V`` through ``rep``; basis is h first, then V."""

    total: LieAlgebra
    h: LieAlgebra
    rep: Representation
    h_part: Subspace
    v_part: Subspace
    kind: str = "semidirect"

    @property
    def dim(self):
        return self.total.dim


def semidirect(h, rep, name=None, kind="semidirect"):
    if rep.source != h:
        raise RepresentationInvalid("representation is not defined on this algebra")
    rep.check()
    n, m = h.dim, rep.space_dim
    total_dim = n + m
    table = {}
    for (i, j), v in h.structure.items():
        table[(i, j)] = tuple(v) + (Fraction(0),) * m
    for i in range(n):
        a = rep.action[i]
        for b in range(m):
            col = a.col(b)
            if any(col):
                table[(i, n + b)] = (Fraction(0),) * n + tuple(col)
    total = LieAlgebra(total_dim, table, name=name)
    return SemidirectAlgebra(
        total,
        h,
        rep,
        Subspace.span_of_basis(total_dim, range(n)),
        Subspace.span_of_basis(total_dim, range(n, total_dim)),
        kind,
    )


def tangent(h):
    name = f"T {h.name}" if h.name else None
    return semidirect(h, adjoint_rep(h), name=name, kind="tangent")


def cotangent(h):
    name = f"T* {h.name}" if h.name else None
    return semidirect(h, coadjoint_rep(h), name=name, kind="cotangent")


def dual_representation(rep):
    """Action ``-pi(x)^T`` on the dual space."""
    return Representation(
        rep.source,
        [-a.T for a in rep.action],
        rep.space_dim,
        name=f"dual({rep.name})" if rep.name else None,
    )


def conjugate_representation(rep, t):
    """The equivalent representation ``T pi(x) T^-1``."""
    t_inv = inverse(t)
    return Representation(rep.source, [t @ a @ t_inv for a in rep.action], rep.space_dim)


# catalog -----------------------------------------------------------------------

CATALOG_NAMES = ("h1", "r3", "r3_lambda", "r3p_eta", "sl2", "so3", "h1_complexified_real")

_FIXED = {
    "h1": (3, "[e1,e2]=e3"),
    "r3": (3, "[e1,e2]=e2, [e1,e3]=e2+e3"),
    "sl2": (3, "[e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2"),
    "so3": (3, "[e1,e2]=e3, [e3,e1]=e2, [e3,e2]=-e1"),
    # basis x, y, z, Jx, Jy, Jz of the Heisenberg algebra over C, viewed as real
    "h1_complexified_real": (6, "[e1,e2]=e3, [e4,e2]=e6, [e1,e5]=e6, [e4,e5]=-e3"),
}


def catalog(name, lam=None, eta=None):
    """A 3-dimensional algebra from the classification list, or the
    6-dimensional realified complex Heisenberg algebra."""
    if name in _FIXED:
        dim, rel = _FIXED[name]
        return LieAlgebra.from_relations(rel, dim, name=name)
    if name == "r3_lambda":
        if lam is None:
            raise MissingParameter("r3_lambda needs a value for lambda")
        lam = to_rational(lam)
        if abs(lam) > 1:
            warnings.warn(f"lambda = {format_rational(lam)} lies outside the normal form range |lambda| <= 1")
        table = {(0, 1): (0, 1, 0), (0, 2): (0, 0, lam)}
        return LieAlgebra(3, table, name=f"r3_lambda({format_rational(lam)})")
    if name == "r3p_eta":
        if eta is None:
            raise MissingParameter("r3p_eta needs a value for eta")
        eta = to_rational(eta)
        if eta < 0:
            warnings.warn(f"eta = {format_rational(eta)} lies outside the normal form range eta >= 0")
        table = {(0, 1): (0, eta, -1), (0, 2): (0, 1, eta)}
        return LieAlgebra(3, table, name=f"r3p_eta({format_rational(eta)})")
    raise UnknownAlgebra(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")


def realified_complex_structure():
    """Multiplication by i on the realified complex Heisenberg algebra: e1->e4, e2->e5, e3->e6."""
    z = Matrix.zeros(3)
    one = Matrix.identity(3)
    return Matrix.block([[z, -one], [one, z]])


# isomorphisms and transport -----------------------------------------------------


def block_map(psi, t):
    """``psi + T`` acting on h (first block) and V (second block)."""
    return Matrix.block(
        [[psi, Matrix.zeros(psi.nrows, t.ncols)], [Matrix.zeros(t.nrows, psi.ncols), t]]
    )


def transported_algebra(phi, g, name=None):
    """The algebra on the same space with ``[x, y]' = phi[phi^-1 x, phi^-1 y]``,
    so that ``phi`` is an isomorphism from ``g`` onto it."""
    phi_inv = inverse(phi)
    cols = [phi_inv.col(k) for k in range(g.dim)]
    table = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = phi.apply(g.bracket(cols[i], cols[j]))
            if any(v):
                table[(i, j)] = v
    # an isomorphic image of a Lie algebra needs no Jacobi check
    return LieAlgebra(g.dim, table, name=name, validate=False)


def check_isomorphism(phi, source, target):
    """Raise NotAnIsomorphism unless ``phi`` is an invertible bracket-preserving map."""
    if phi.shape != (target.dim, source.dim) or source.dim != target.dim:
        raise NotAnIsomorphism("map has the wrong shape")
    if rank(phi) != source.dim:
        raise NotAnIsomorphism("map is not invertible")
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = phi.apply(source.basis_bracket(i, j))
            rhs = target.bracket(phi.col(i), phi.col(j))
            if lhs != rhs:
                raise NotAnIsomorphism(
                    f"bracket of e{i + 1}, e{j + 1} is not preserved", witness=(i, j)
                )
    return True


def transport(phi, source, target, structure, check=True):
    """Push a structure on ``source`` forward along an isomorphism ``phi``.

    Complex structures become ``phi J phi^-1``; bilinear forms become
    ``B'(x, y) = B(phi^-1 x, phi^-1 y)``. A ``(J, omega)`` pair is moved as a
    pair. Integrability, closedness, nondegeneracy, compatibility and the
    ascending series dimensions are re-checked on the result unless
    ``check`` is false.
    """
    from .complex import AlmostComplexStructure, ascending_series, is_integrable
    from .symplectic import Metric, TwoForm, is_closed, is_compatible, is_nondegenerate

    check_isomorphism(phi, source, target)
    phi_inv = inverse(phi)

    def move(s):
        if isinstance(s, AlmostComplexStructure):
            out = AlmostComplexStructure(target, phi @ s.matrix @ phi_inv)
            if not check:
                return out
            if bool(is_integrable(s)) != bool(is_integrable(out)):
                raise AssertionError("integrability not preserved")
            before = [t.dim for t in ascending_series(s).terms]
            after = [t.dim for t in ascending_series(out).terms]
            if before != after:
                raise AssertionError("ascending series not preserved")
            return out
        if isinstance(s, (TwoForm, Metric)):
            m = phi_inv.T @ s.matrix @ phi_inv
            out = type(s)(target, m)
            if check and isinstance(s, TwoForm):
                if bool(is_closed(s)) != bool(is_closed(out)):
                    raise AssertionError("closedness not preserved")
                if is_nondegenerate(s) != is_nondegenerate(out):
                    raise AssertionError("nondegeneracy not preserved")
            return out
        raise TypeError(f"cannot transport {type(s).__name__}")

    if isinstance(structure, tuple):
        moved = tuple(move(s) for s in structure)
        js = [s for s in structure if isinstance(s, AlmostComplexStructure)]
        ws = [s for s in structure if isinstance(s, TwoForm)]
        if check and js and ws:
            jm = [s for s in moved if isinstance(s, AlmostComplexStructure)][0]
            wm = [s for s in moved if isinstance(s, TwoForm)][0]
            if is_compatible(js[0], ws[0]) != is_compatible(jm, wm):
                raise AssertionError("compatibility not preserved")
        return moved
    return move(structure)
