"""Macdonald's q-difference operator of type C_n and its one-row eigenfunctions.

Exact arithmetic lives in :mod:`.qfield` and :mod:`.laurent`; the operator
and the triangular eigen-solver in :mod:`.macdonald_op`; the explicit
one-row polynomials and residue closed forms in :mod:`.onerow`; numeric
contour integration in :mod:`.contour`; identity checks in
:mod:`.identities`.
"""

from .contour import PhiSpec, contour_integral, numeric_apply_E, verify_shift_identity
from .laurent import Binomial, LaurentPoly, LaurentQuotient, exact_divide
from .macdonald_op import apply_E, expand_in_monomials, solve_P
from .onerow import composition_enumerate, corollary_P, residue_solution, theorem2_constant
from .qfield import VFrac, VPoly, eigenvalue_c, gauss_coeff, poch_finite
from .weyl import Partition, dominance_leq, lower_partitions, orbit_monomial

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "LaurentPoly",
    "LaurentQuotient",
    "Partition",
    "PhiSpec",
    "VFrac",
    "VPoly",
    "apply_E",
    "composition_enumerate",
    "contour_integral",
    "corollary_P",
    "dominance_leq",
    "eigenvalue_c",
    "exact_divide",
    "expand_in_monomials",
    "gauss_coeff",
    "lower_partitions",
    "numeric_apply_E",
    "orbit_monomial",
    "poch_finite",
    "residue_solution",
    "solve_P",
    "theorem2_constant",
    "verify_shift_identity",
]
