"""Spectrum, nodal domains, and Courant-sharp certification for the flat unit torus."""

from .bessel import BesselZero, bessel_j0, bessel_j1, faber_krahn_constant, j01, ratio_bound
from .certify import (
    CertificationReport,
    CertificationVerdict,
    Verdict,
    candidate_indices,
    certify_all,
    pleijel_lower_bound,
    ratio,
    threshold_k,
    upper_bound_lambda_k,
)
from .nodal import (
    Eigenfunction,
    NodalDecomposition,
    check_courant,
    check_faber_krahn,
    check_isoperimetric,
    count_nodal_domains,
    evaluate,
    random_eigenfunction,
)
from .spectrum import (
    EigenvalueClass,
    SpectrumTable,
    build_spectrum_table,
    counting_function_exact,
    lambda_k,
    lattice_count,
    multiplicity_of,
    nu_of,
    weyl_lower_bound,
)

__all__ = [
    "BesselZero",
    "CertificationReport",
    "CertificationVerdict",
    "Eigenfunction",
    "EigenvalueClass",
    "NodalDecomposition",
    "SpectrumTable",
    "Verdict",
    "bessel_j0",
    "bessel_j1",
    "build_spectrum_table",
    "candidate_indices",
    "certify_all",
    "check_courant",
    "check_faber_krahn",
    "check_isoperimetric",
    "count_nodal_domains",
    "counting_function_exact",
    "evaluate",
    "faber_krahn_constant",
    "j01",
    "lambda_k",
    "lattice_count",
    "multiplicity_of",
    "nu_of",
    "pleijel_lower_bound",
    "random_eigenfunction",
    "ratio",
    "ratio_bound",
    "threshold_k",
    "upper_bound_lambda_k",
    "weyl_lower_bound",
]

__version__ = "0.1.0"
