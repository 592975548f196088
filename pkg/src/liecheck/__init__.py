"""Exact computations with complex, symplectic and Kähler structures on
tangent and cotangent Lie algebras."""

from .complex import (
    AlmostComplexStructure,
    abelian_obstruction,
    ascending_series,
    classify,
    complete_acs,
    derivation_to_totally_real,
    eigenspace_closure,
    eigenspace_is_ideal,
    is_integrable,
    nijenhuis,
    nilpotency_step,
    nonsingular_witness,
    totally_real_acs,
    totally_real_space,
)
from .constructions import (
    CATALOG_NAMES,
    SemidirectAlgebra,
    catalog,
    check_isomorphism,
    cotangent,
    dual_representation,
    semidirect,
    tangent,
    transport,
    transported_algebra,
)
from .exact import Fraction, GaussianRational, Matrix, MultiPoly, ParamFamily
from .geometry import (
    Connection,
    CurvatureReport,
    curvature_report,
    is_parallel,
    is_totally_geodesic,
    levi_civita,
)
from .lie import (
    LieAlgebra,
    Representation,
    Subspace,
    adjoint_rep,
    characteristic_report,
    coadjoint_rep,
    derivation_space,
    is_derivation,
    make_lie_algebra,
)
from .symplectic import (
    FormFamily,
    Metric,
    TwoForm,
    canonical_cotangent_metric,
    closed_form_space,
    compatible_closed_space,
    generalized_cs_check,
    hermitian_check,
    is_ad_invariant,
    is_closed,
    is_nondegenerate,
    isotropy_type,
    kahler_metric,
    lagrangian_form,
    signature,
    skew_nonsingular_derivation,
    symplectic_witness,
)

__version__ = "0.1.0"
