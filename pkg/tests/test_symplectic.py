from fractions import Fraction
from itertools import combinations

import pytest

from known_structures import (
    ABELIAN_TANGENT_AFF,
    ABELIAN_TANGENT_H1,
    COTANGENT_H1_METRIC,
    INTEGRABILITY_FIXTURES,
    KAHLER_TANGENT_H1,
    NILPOTENT_COTANGENT_H1,
    acs,
    aff_form,
    cotangent_h1_family_form,
    cotangent_of,
    form,
    kahler_form_two,
    metric,
    tangent_of,
    totally_real_tangent_h1,
)
from liecheck import (
    AlmostComplexStructure,
    Matrix,
    Metric,
    TwoForm,
    canonical_cotangent_metric,
    catalog,
    closed_form_space,
    compatible_closed_space,
    cotangent,
    generalized_cs_check,
    is_ad_invariant,
    is_closed,
    is_nondegenerate,
    isotropy_type,
    kahler_metric,
    lagrangian_form,
    signature,
    skew_nonsingular_derivation,
    symplectic_witness,
    tangent,
)
from liecheck.errors import (
    Degenerate,
    DegenerateMetric,
    MetricNotAdInvariant,
    NotACotangent,
    NotAntisymmetric,
    NotCompatible,
    NotIntegrable,
    NotSymmetric,
    NotTotallyReal,
)
from liecheck.lie import Subspace, abelian
from liecheck.notation import parse_symmetric, parse_two_form
from liecheck.symplectic import format_symmetric, is_compatible

SAMPLES = [
    ("h1", {}), ("r3", {}), ("sl2", {}), ("so3", {}),
    ("r3_lambda", {"lam": -1}), ("r3_lambda", {"lam": 0}),
    ("r3_lambda", {"lam": Fraction(1, 2)}), ("r3_lambda", {"lam": 1}),
    ("r3p_eta", {"eta": 0}), ("r3p_eta", {"eta": 1}),
]
# dimensions of the closed 2-forms on T h and T* h, from an independent symbolic computation
CLOSED_DIMENSIONS = {
    "h1": (10, 11), "r3": (5, 6), "sl2": (6, 6), "so3": (6, 6),
    "r3_lambda(-1)": (7, 8), "r3_lambda(0)": (8, 6), "r3_lambda(1/2)": (5, 6), "r3_lambda(1)": (5, 8),
    "r3p_eta(0)": (7, 8), "r3p_eta(1)": (5, 6),
}
PAIRS = list(combinations(range(6), 2))


def relation(terms):
    """Coefficient vector on the alpha_ij coordinates from {(i, j): c} with 1-based i < j."""
    return tuple(Fraction(terms.get((i + 1, j + 1), 0)) for i, j in PAIRS)


def test_form_types_validate():
    g = tangent_of("h1").total
    with pytest.raises(NotAntisymmetric):
        TwoForm(g, Matrix.identity(6))
    with pytest.raises(NotSymmetric):
        Metric(g, parse_two_form("e12", 6))
    with pytest.raises(DegenerateMetric):
        Metric(g, parse_symmetric("e1.e1", 6))


@pytest.mark.parametrize("name,params", SAMPLES)
def test_closed_form_dimensions(name, params):
    h = catalog(name, **params)
    dims = (closed_form_space(tangent(h).total).dim, closed_form_space(cotangent(h).total).dim)
    assert dims == CLOSED_DIMENSIONS[h.name]


def test_closed_forms_on_tangent_heisenberg_constraints():
    fam = closed_form_space(tangent_of("h1").total)
    expected = Subspace(15, [
        relation({(3, 6): 1}), relation({(4, 6): 1}), relation({(5, 6): 1}),
        relation({(3, 4): 1, (1, 6): 1}), relation({(3, 5): 1, (2, 6): 1}),
    ])
    assert fam.constraints() == expected


def test_closed_forms_on_cotangent_heisenberg_constraints():
    fam = closed_form_space(cotangent_of("h1").total)
    expected = Subspace(15, [
        relation({(3, 4): 1}), relation({(3, 5): 1}), relation({(4, 5): 1}),
        relation({(3, 6): 1, (1, 4): -1, (2, 5): -1}),
    ])
    assert fam.constraints() == expected


def test_closedness_verdict_names_a_triple():
    v = is_closed(form(tangent_of("h1"), "e36"))
    assert not v and v.witness == (0, 1, 5)


def test_abelian_structure_has_no_compatible_symplectic_form():
    sd = tangent_of("h1")
    fam = compatible_closed_space(sd.total, acs(sd, ABELIAN_TANGENT_H1))
    e6 = (0, 0, 0, 0, 0, 1)
    assert all(not any(d.apply(e6)) for d in fam.directions)
    assert not symplectic_witness(fam)


@pytest.mark.parametrize("s", [0, 1])
def test_totally_real_structures_have_no_compatible_symplectic_form(s):
    sd = tangent_of("h1")
    assert not symplectic_witness(compatible_closed_space(sd.total, acs(sd, totally_real_tangent_h1(s))))


def test_compatible_closed_family_for_kahler_tangent_structure():
    sd = tangent_of("h1")
    fam = compatible_closed_space(sd.total, acs(sd, KAHLER_TANGENT_H1))
    assert fam.dim == 5
    for t in ("e45 - 2e12", "e14", "e24 - 2e15", "e25", "e26 - e35"):
        assert fam.contains(form(sd, t).matrix)
    for t in ("e26 + e35", "e36"):
        assert not fam.contains(form(sd, t).matrix)
    assert symplectic_witness(fam).found


def test_compatible_closed_family_on_tangent_aff():
    sd = tangent_of("r3_lambda", lam=0)
    fam = compatible_closed_space(sd.total, acs(sd, ABELIAN_TANGENT_AFF))
    assert fam.dim == 3
    for t in ("e12", "e15 - e24", "e36"):
        assert fam.contains(form(sd, t).matrix)


def test_compatible_closed_family_on_cotangent_heisenberg():
    sd = cotangent_of("h1")
    fam = compatible_closed_space(sd.total, acs(sd, NILPOTENT_COTANGENT_H1))
    assert fam.dim == 5
    for t in ("e12 + e46", "2e14 - e25 + e36", "e16 + e24", "e23 + e56", "e26"):
        assert fam.contains(form(sd, t).matrix)
    assert not fam.contains(form(sd, "e35").matrix)


@pytest.mark.parametrize(
    "sd,images,omega,expected",
    [
        (lambda: tangent_of("h1"), KAHLER_TANGENT_H1, kahler_form_two(1), "-2e1.e1 - e2.e3 - 1/2e4.e4 + e5.e6"),
        (lambda: tangent_of("h1"), KAHLER_TANGENT_H1, kahler_form_two(3), "-2e1.e1 - 3e2.e3 - 1/2e4.e4 + 3e5.e6"),
        (lambda: tangent_of("r3_lambda", lam=0), ABELIAN_TANGENT_AFF, aff_form(0, 1, 1), "-e1.e4 - e2.e5 + e3.e3 + e6.e6"),
        (
            lambda: cotangent_of("h1"),
            NILPOTENT_COTANGENT_H1,
            cotangent_h1_family_form(1, 1, 0, 1, 0, 0),
            "-2e1.e1 + e1.e6 - e2.e3 - e2.e4 - e2.e5 - e3.e6 - 2e4.e4 + e5.e6",
        ),
    ],
)
def test_kahler_metrics(sd, images, omega, expected):
    sd = sd()
    g = kahler_metric(form(sd, omega), acs(sd, images))
    assert format_symmetric(g.matrix) == expected
    assert g.matrix == metric(sd, expected).matrix


def test_kahler_metric_errors():
    sd = tangent_of("h1")
    J = acs(sd, KAHLER_TANGENT_H1)
    with pytest.raises(NotCompatible):
        kahler_metric(form(sd, "e12"), J)
    with pytest.raises(Degenerate):
        kahler_metric(form(sd, "e14"), J)


def test_signature():
    assert signature(parse_symmetric("e1.e2 + e3.e3", 3)) == (2, 1, 0)
    assert signature(parse_symmetric("e1.e1 - e2.e2", 3)) == (1, 1, 1)
    assert signature(metric(cotangent_of("h1"), COTANGENT_H1_METRIC)) == (4, 2, 0)


@pytest.mark.parametrize("name,params", SAMPLES)
def test_canonical_cotangent_metric(name, params):
    sd = cotangent_of(name, **params)
    m = canonical_cotangent_metric(sd)
    assert is_ad_invariant(sd.total, m)
    assert isotropy_type(sd.h_part, m) == "totally_isotropic"
    assert isotropy_type(sd.v_part, m) == "totally_isotropic"


def test_canonical_metric_needs_cotangent():
    with pytest.raises(NotACotangent):
        canonical_cotangent_metric(tangent_of("h1"))


def test_generalized_complex_types():
    sd = cotangent(abelian(2))
    j0 = Matrix([[0, -1], [1, 0]], 2)
    z = Matrix.zeros(2)
    J = AlmostComplexStructure(sd.total, Matrix.block([[j0, z], [z, -j0.T]]))
    assert generalized_cs_check(sd, J) == "complex"
    J = AlmostComplexStructure(sd.total, Matrix.block([[z, -j0.inverse()], [j0, z]]))
    assert generalized_cs_check(sd, J) == "symplectic"
    h1 = cotangent_of("h1")
    assert generalized_cs_check(h1, acs(h1, NILPOTENT_COTANGENT_H1)) == "not_hermitian"
    with pytest.raises(NotIntegrable):
        generalized_cs_check(h1, acs(h1, "Je1=e2-e4, Je2=e6, Je5=e3+e4"))


@pytest.mark.parametrize("name,factory,images", INTEGRABILITY_FIXTURES, ids=[f[0] for f in INTEGRABILITY_FIXTURES])
def test_lagrangian_forms_of_fixtures(name, factory, images):
    sd = factory()
    if not hasattr(sd, "h_part"):
        return
    J = acs(sd, images)
    from liecheck.complex import is_integrable, is_totally_real

    if not (is_totally_real(J, sd) and is_integrable(J)):
        with pytest.raises((NotTotallyReal, NotIntegrable)):
            lagrangian_form(sd, J)
        return
    dual, omega = lagrangian_form(sd, J)
    assert is_closed(omega) and is_nondegenerate(omega)
    assert isotropy_type(dual.h_part, omega) == "lagrangian"
    assert isotropy_type(dual.v_part, omega) == "lagrangian"


def test_skew_nonsingular_derivation():
    assert skew_nonsingular_derivation(abelian(2), Matrix.identity(2)).found
    so3 = catalog("so3")
    assert not skew_nonsingular_derivation(so3, Matrix.identity(3)).found
    with pytest.raises(MetricNotAdInvariant):
        skew_nonsingular_derivation(catalog("h1"), Matrix.identity(3))


def test_compatibility_is_symmetric_in_sign_of_form():
    sd = tangent_of("h1")
    J = acs(sd, KAHLER_TANGENT_H1)
    w = form(sd, kahler_form_two(2))
    assert is_compatible(J, w) and is_compatible(J, TwoForm(sd.total, -w.matrix))
