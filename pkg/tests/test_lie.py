from fractions import Fraction

import pytest

from liecheck import (
    LieAlgebra,
    Matrix,
    Representation,
    Subspace,
    adjoint_rep,
    catalog,
    characteristic_report,
    coadjoint_rep,
    derivation_space,
    is_derivation,
    make_lie_algebra,
)
from liecheck.errors import DimensionMismatch, JacobiViolation, NotationError, RepresentationInvalid
from liecheck.lie import center, commutator, derived_series, is_ideal, is_nilpotent, is_subalgebra
from liecheck.notation import (
    format_vector,
    parse_images,
    parse_relations,
    parse_symmetric,
    parse_two_form,
    parse_vector,
)

CATALOG_SAMPLES = [
    ("h1", {}),
    ("r3", {}),
    ("sl2", {}),
    ("so3", {}),
    *[("r3_lambda", {"lam": lam}) for lam in (-1, 0, Fraction(1, 2), 1)],
    *[("r3p_eta", {"eta": eta}) for eta in (0, 1)],
]

# dimension of the derivation algebra, from an independent symbolic computation
DERIVATION_DIMENSIONS = {
    "h1": 6, "r3": 4, "sl2": 3, "so3": 3,
    "r3_lambda(-1)": 4, "r3_lambda(0)": 4, "r3_lambda(1/2)": 4, "r3_lambda(1)": 6,
    "r3p_eta(0)": 4, "r3p_eta(1)": 4,
}


def test_notation_vectors_and_relations():
    assert parse_vector("e3 - 2e5 + 1/2e1", 5) == (Fraction(1, 2), 0, 1, 0, -2)
    assert parse_vector("-(e1+e6)", 6) == (-1, 0, 0, 0, 0, -1)
    assert parse_vector("(−3/2)e2", 2) == (0, Fraction(-3, 2))
    assert format_vector((Fraction(1, 2), 0, -1)) == "1/2e1 - e3"
    rel = parse_relations("[e3,e1]=2e1", 3)
    assert rel == {(0, 2): (-2, 0, 0)}


def test_notation_forms_and_images():
    w = parse_two_form("e45 - 2e12", 6)
    assert w[3, 4] == 1 and w[4, 3] == -1 and w[0, 1] == -2
    g = parse_symmetric("2e1.e5 + e3.e3", 6)
    assert g[0, 4] == g[4, 0] == 2 and g[2, 2] == 1
    assert parse_images("Je1=e4, Je2=-e5", 6)[1] == (0, 0, 0, 0, -1, 0)


@pytest.mark.parametrize(
    "bad", ["e1 +", "2", "e9", "e1 e2", "(e1", "3e"]
)
def test_notation_errors(bad):
    with pytest.raises(NotationError):
        parse_vector(bad, 3)


def test_conflicting_relations_are_rejected():
    with pytest.raises(NotationError):
        parse_relations("[e1,e2]=e3, [e2,e1]=e3", 3)


@pytest.mark.parametrize("name,params", CATALOG_SAMPLES)
def test_catalog_passes_jacobi_and_has_known_derivations(name, params):
    g = catalog(name, **params)
    g.check_jacobi()
    assert derivation_space(g).dim == DERIVATION_DIMENSIONS[g.name]


def test_jacobi_violation_reports_triple():
    with pytest.raises(JacobiViolation) as info:
        make_lie_algebra(3, table="[e1,e2]=e1, [e1,e3]=e2")
    assert info.value.triple == (0, 1, 2)


def test_bracket_is_bilinear_and_antisymmetric():
    g = catalog("sl2")
    x, y = (1, 2, Fraction(1, 3)), (0, -1, 4)
    assert g.bracket(x, y) == tuple(-c for c in g.bracket(y, x))
    assert g.bracket(x, x) == (0, 0, 0)


def test_adjoint_columns():
    g = catalog("h1")
    assert g.ad(0).col(1) == (0, 0, 1)


def test_series_and_center():
    h = catalog("h1")
    assert center(h) == Subspace(3, [(0, 0, 1)])
    assert commutator(h) == center(h)
    assert is_nilpotent(h)
    assert not is_nilpotent(catalog("r3"))
    assert len(derived_series(catalog("sl2"))) == 1
    rep = characteristic_report(catalog("r3_lambda", lam=0))
    assert rep.is_solvable and not rep.is_nilpotent


def test_subalgebras_and_ideals():
    g = catalog("r3")
    assert is_ideal(g, Subspace(3, [(0, 1, 0), (0, 0, 1)]))
    assert is_subalgebra(g, Subspace(3, [(1, 0, 0)]))
    assert not is_ideal(g, Subspace(3, [(1, 0, 0)]))


def test_inner_derivations_are_derivations():
    g = catalog("so3")
    for i in range(3):
        assert is_derivation(g, g.ad(i))
    assert not is_derivation(g, Matrix.identity(3))


def test_representations():
    g = catalog("r3")
    adjoint_rep(g).check()
    coadjoint_rep(g).check()
    bad = [Matrix.identity(3), Matrix.identity(3), Matrix.zeros(3)]
    with pytest.raises(RepresentationInvalid):
        Representation(g, bad, 3)
    with pytest.raises(RepresentationInvalid):
        Representation(g, [Matrix.zeros(2)] * 2, 2)


def test_labels_and_dimension_errors():
    with pytest.raises(DimensionMismatch):
        LieAlgebra(2, {(0, 1): (1, 0, 0)})
    g = LieAlgebra(2, {(1, 0): (0, -1)}, labels=["x", "y"])
    assert g.basis_bracket(0, 1) == (0, 1)
    assert g.relations() == "[x,y]=y"
