"""Algebras, complex structures and forms that the test suites check against."""

from fractions import Fraction

from liecheck import AlmostComplexStructure, Metric, TwoForm, catalog, cotangent, tangent
from liecheck.notation import parse_images, parse_symmetric, parse_two_form


def tangent_of(name, **params):
    return tangent(catalog(name, **params))


def cotangent_of(name, **params):
    return cotangent(catalog(name, **params))


def acs(sd, images):
    g = sd.total if hasattr(sd, "total") else sd
    return AlmostComplexStructure.from_images(g, parse_images(images, g.dim))


def form(g, text):
    g = g.total if hasattr(g, "total") else g
    return TwoForm(g, parse_two_form(text, g.dim))


def metric(g, text):
    g = g.total if hasattr(g, "total") else g
    return Metric(g, parse_symmetric(text, g.dim))


def q(x):
    return Fraction(x)


# complex structures on T h1 ----------------------------------------------------

ABELIAN_TANGENT_H1 = "Je1=e2, Je6=e3, Je4=e5"
KAHLER_TANGENT_H1 = "Je1=2e4, Je2=-e5, Je3=e6"


def totally_real_tangent_h1(s):
    return f"Je1=e4, Je2={-s}e4+e5, Je3=2e6"


def non_totally_real_tangent_h1(nu):
    """Neither abelian nor totally real. The images of e1, e2, e3 alone leave
    e4, e5 free when nu = 1; the extra image of e4 is the completion that
    varies continuously in nu and works for every nonzero nu."""
    nu = q(nu)
    a = 1 - nu
    return (
        f"Je1=e2+({a})e4+({a / nu})e5, Je2=-({nu})e1+({a})e4, Je3=e6, "
        f"Je4=-e2+({nu})e4+e5"
    )


# complex structures on T* h1 ---------------------------------------------------

NILPOTENT_COTANGENT_H1 = "Je1=e4, Je2=e6, Je5=e3"
NOT_TOTALLY_REAL_COTANGENT_H1 = "Je1=e2-e4, Je2=e6, Je5=e3+e4"

# structures on other tangent / cotangent algebras --------------------------------

ABELIAN_TANGENT_AFF = "Je1=e2, Je3=-e6, Je4=e5"
HERMITIAN_TANGENT_AFF = "Je1=e2, Je3=e6, Je4=e5"
# abelian ideal of T r3,0 whose J-image is the flat abelian subalgebra
AFF_ABELIAN_IDEAL = ("e2", "e5", "e6")
TOTALLY_REAL_COTANGENT_R30 = "Je1=e5, Je2=-e4, Je3=e6"
NOT_TOTALLY_REAL_COTANGENT_R30 = "Je1=e2, Je4=e5, Je3=e6"
TOTALLY_REAL_COTANGENT_R3M1 = "Je1=e4, Je2=e6, Je3=-e5"
NOT_TOTALLY_REAL_COTANGENT_R3M1 = "Je3=-(e1+e6), Je5=e3-e4, Je6=-(e2+e4)"
COTANGENT_R31 = "Je1=e4, Je2=e3, Je5=e6"


def cotangent_r3p(sign):
    return f"Je1={sign}e4, Je2=e3, Je5=e6"


def totally_real_cotangent_r3p0(sign):
    return f"Je1={sign}e4, Je2=e6, Je3=-e5"


SIMPLE_TANGENT = "Je3=e6, Je2=e1, Je4=e5"
REALIFIED_HEISENBERG = "Je1=e4, Je2=e5, Je3=e6"

# forms and metrics ----------------------------------------------------------------


def kahler_form_one(mu):
    return f"e45 - 2e12 + ({q(mu)})e36"


def kahler_form_two(nu):
    return f"e14 + ({q(nu)})e26 - ({q(nu)})e35"


def aff_form(alpha, beta, gamma):
    return f"({q(alpha)})e12 + ({q(beta)})e15 - ({q(beta)})e24 + ({q(gamma)})e36"


def cotangent_h1_family_form(a, b, c, d, e, f):
    a, b, c, d, e, f = map(q, (a, b, c, d, e, f))
    return (
        f"({a})e12 + ({a})e46 + ({2 * b})e14 - ({b})e25 + ({b})e36 + ({c})e16 + ({c})e24"
        f" + ({d})e23 + ({d})e56 + ({e})e26 + ({f})e35"
    )


def metric_g_mu(mu):
    return f"2e1.e5 + e2.e4 + ({q(mu)})e3.e3 + ({q(mu)})e6.e6"


def metric_g_nu(nu):
    return f"2e1.e1 + 1/2e4.e4 + ({q(nu)})e2.e3 + ({q(nu)})e5.e6"


COTANGENT_H1_METRIC = "2e1.e1 + e2.e3 + 2e4.e4 - e5.e6"


def aff_metric(alpha, beta, gamma):
    a, b, c = map(q, (alpha, beta, gamma))
    return f"({a})e1.e1 + ({a})e2.e2 + ({b})e1.e4 + ({b})e2.e5 + ({c})e3.e3 + ({c})e6.e6"


# every explicit complex structure, as (descriptive id, algebra factory, images)
def _t(name, **p):
    return lambda: tangent_of(name, **p)


def _c(name, **p):
    return lambda: cotangent_of(name, **p)


INTEGRABILITY_FIXTURES = [
    ("abelian_tangent_h1", _t("h1"), ABELIAN_TANGENT_H1),
    ("totally_real_tangent_h1_s0", _t("h1"), totally_real_tangent_h1(0)),
    ("totally_real_tangent_h1_s1", _t("h1"), totally_real_tangent_h1(1)),
    ("non_totally_real_tangent_h1_nu1", _t("h1"), non_totally_real_tangent_h1(1)),
    ("non_totally_real_tangent_h1_nu-2", _t("h1"), non_totally_real_tangent_h1(-2)),
    ("nilpotent_cotangent_h1", _c("h1"), NILPOTENT_COTANGENT_H1),
    ("not_totally_real_cotangent_h1", _c("h1"), NOT_TOTALLY_REAL_COTANGENT_H1),
    ("abelian_tangent_aff", _t("r3_lambda", lam=0), ABELIAN_TANGENT_AFF),
    ("totally_real_cotangent_r3_0", _c("r3_lambda", lam=0), TOTALLY_REAL_COTANGENT_R30),
    ("not_totally_real_cotangent_r3_0", _c("r3_lambda", lam=0), NOT_TOTALLY_REAL_COTANGENT_R30),
    ("totally_real_cotangent_r3_-1", _c("r3_lambda", lam=-1), TOTALLY_REAL_COTANGENT_R3M1),
    ("not_totally_real_cotangent_r3_-1", _c("r3_lambda", lam=-1), NOT_TOTALLY_REAL_COTANGENT_R3M1),
    ("cotangent_r3_1", _c("r3_lambda", lam=1), COTANGENT_R31),
    ("cotangent_r3p_eta0_plus", _c("r3p_eta", eta=0), cotangent_r3p("")),
    ("cotangent_r3p_eta0_minus", _c("r3p_eta", eta=0), cotangent_r3p("-")),
    ("cotangent_r3p_eta1_plus", _c("r3p_eta", eta=1), cotangent_r3p("")),
    ("cotangent_r3p_eta1_minus", _c("r3p_eta", eta=1), cotangent_r3p("-")),
    ("totally_real_cotangent_r3p0_plus", _c("r3p_eta", eta=0), totally_real_cotangent_r3p0("")),
    ("totally_real_cotangent_r3p0_minus", _c("r3p_eta", eta=0), totally_real_cotangent_r3p0("-")),
    ("kahler_tangent_h1", _t("h1"), KAHLER_TANGENT_H1),
    ("simple_tangent_sl2", _t("sl2"), SIMPLE_TANGENT),
    ("simple_tangent_so3", _t("so3"), SIMPLE_TANGENT),
    ("realified_heisenberg", lambda: catalog("h1_complexified_real"), REALIFIED_HEISENBERG),
]

# fixtures whose printed form is not integrable, with the first failing basis
# pair (0-based) and the value of N_J there
NOT_INTEGRABLE = {
    "not_totally_real_cotangent_h1": ((0, 1), (0, 0, 0, 2, 0, 0)),
    "simple_tangent_sl2": ((0, 2), (4, 0, 0, 0, 0, 0)),
    "simple_tangent_so3": ((0, 2), (0, 0, 0, -2, 0, 0)),
}

# printed bracket tables ----------------------------------------------------------


def catalog_table(name, lam=None, eta=None):
    lam, eta = q(lam or 0), q(eta or 0)
    return {
        "h1": "[e1,e2]=e3",
        "r3": "[e1,e2]=e2, [e1,e3]=e2+e3",
        "r3_lambda": f"[e1,e2]=e2, [e1,e3]=({lam})e3",
        "r3p_eta": f"[e1,e2]=({eta})e2-e3, [e1,e3]=e2+({eta})e3",
        "sl2": "[e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2",
        "so3": "[e1,e2]=e3, [e3,e1]=e2, [e3,e2]=-e1",
    }[name]


def tangent_table(name, lam=None, eta=None):
    lam, eta = q(lam or 0), q(eta or 0)
    return {
        "h1": "[e1,e2]=e3, [e1,e5]=e6, [e2,e4]=-e6",
        "r3": "[e1,e2]=e2, [e1,e3]=e2+e3, [e1,e5]=e5, [e1,e6]=e5+e6, [e2,e4]=-e5, [e3,e4]=-e5-e6",
        "r3_lambda": (
            f"[e1,e2]=e2, [e1,e3]=({lam})e3, [e1,e5]=e5, [e1,e6]=({lam})e6, "
            f"[e2,e4]=-e5, [e3,e4]=-({lam})e6"
        ),
        "r3p_eta": (
            f"[e1,e2]=({eta})e2-e3, [e1,e3]=e2+({eta})e3, [e1,e5]=({eta})e5-e6, "
            f"[e1,e6]=e5+({eta})e6, [e2,e4]=-({eta})e5+e6, [e3,e4]=-e5-({eta})e6"
        ),
    }[name]


def cotangent_table(name, lam=None, eta=None):
    lam, eta = q(lam or 0), q(eta or 0)
    return {
        "h1": "[e1,e2]=e3, [e1,e6]=-e5, [e2,e6]=e4",
        "r3": (
            "[e1,e2]=e2, [e1,e3]=e2+e3, [e1,e5]=-e5-e6, [e1,e6]=-e6, [e2,e5]=e4, "
            "[e3,e5]=e4, [e3,e6]=e4"
        ),
        "r3_lambda": (
            f"[e1,e2]=e2, [e1,e3]=({lam})e3, [e1,e5]=-e5, [e1,e6]=-({lam})e6, "
            f"[e2,e5]=e4, [e3,e6]=({lam})e4"
        ),
        "r3p_eta": (
            f"[e1,e2]=({eta})e2-e3, [e1,e3]=e2+({eta})e3, [e1,e5]=-({eta})e5-e6, "
            f"[e1,e6]=e5-({eta})e6, [e2,e5]=({eta})e4, [e2,e6]=-e4, [e3,e5]=e4, [e3,e6]=({eta})e4"
        ),
    }[name]
