"""Exact hypercomplex Appell polynomial sequences over Cl(0,n).

The package builds Appell sequences of paravector-valued polynomials from
nilpotent creation matrices, transfers them to classical families
(Bernoulli, Euler, Frobenius-Euler, Hermite), and certifies monogenicity
and the derivative ladder symbolically, all in rational arithmetic.
"""

from .appell import (
    FAMILIES,
    AppellPoly,
    AppellSequence,
    CoeffSequence,
    apply_transfer,
    build_family,
    build_phi,
    canonical_coeffs,
    closed_form_coefficient,
    coefficient_sequence,
    eval_poly,
    exp_truncated,
    expand_multivariate,
    expand_sequence,
    restrict_poly,
    shifted_coeffs,
    vector_power_expansion,
)
from .clifford import Multivector, Paravector, blade_product, vector_power
from .operators import (
    DegreeCheck,
    VerifyReport,
    certify,
    check_appell,
    check_intertwining,
    check_monogenic,
    check_xi_derivation,
    cr,
    cr_bar,
    dirac,
    partial_x0,
)
from .polynomials import CliffordPoly
from .rationals import Rational, binomial, double_factorial, format_rational, parse_rational, rational
from .trimatrix import (
    TriMatrix,
    bernoulli_transfer,
    creation_matrix,
    derivation_matrix,
    euler_transfer,
    frobenius_euler_transfer,
    hermite_transfer,
    nilpotent_exp,
    pascal_matrix,
    tri_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AppellPoly",
    "AppellSequence",
    "CliffordPoly",
    "CoeffSequence",
    "DegreeCheck",
    "FAMILIES",
    "Multivector",
    "Paravector",
    "Rational",
    "TriMatrix",
    "VerifyReport",
    "apply_transfer",
    "bernoulli_transfer",
    "binomial",
    "blade_product",
    "build_family",
    "build_phi",
    "canonical_coeffs",
    "certify",
    "check_appell",
    "check_intertwining",
    "check_monogenic",
    "check_xi_derivation",
    "closed_form_coefficient",
    "coefficient_sequence",
    "cr",
    "cr_bar",
    "creation_matrix",
    "derivation_matrix",
    "dirac",
    "double_factorial",
    "euler_transfer",
    "eval_poly",
    "exp_truncated",
    "expand_multivariate",
    "expand_sequence",
    "format_rational",
    "frobenius_euler_transfer",
    "hermite_transfer",
    "nilpotent_exp",
    "parse_rational",
    "partial_x0",
    "pascal_matrix",
    "rational",
    "restrict_poly",
    "shifted_coeffs",
    "tri_inverse",
    "vector_power",
    "vector_power_expansion",
]
