from .family import (
    ParamFamily,
    Witness,
    ZeroTest,
    enumerate_points,
    find_nonvanishing_member,
    is_identically_zero,
    linear_solution_space,
    matrix_units,
)
from .matrix import (
    MAX_DIM,
    Matrix,
    det,
    det_and_pfaffian,
    echelon_basis,
    inverse,
    kernel_basis,
    pfaffian,
    rank,
    rref,
    solve,
)
from .poly import MultiPoly
from .scalars import Fraction, GaussianRational, I, format_rational, to_rational
