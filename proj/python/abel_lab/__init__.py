"""Exact computations for parametric centers of Abel equations.

Scalars are strings in the form "a/b" or "a/b+c/d*rD"; polynomials are
coefficient lists in increasing degree; intervals are (a, b) pairs.
"""

from ._core import (
    AbelError,
    ComputeError,
    DomainError,
    InputError,
    cc_check,
    center_table,
    melnikov,
    moment,
    non_cc_certificate,
    poincare_coeffs,
    right_factors,
    run_criterion,
    structure_report,
    trig_moment,
    z_dim_adjusted,
    z_dim_formula,
    zspace,
)

__all__ = [
    "AbelError",
    "ComputeError",
    "DomainError",
    "InputError",
    "cc_check",
    "center_table",
    "melnikov",
    "moment",
    "non_cc_certificate",
    "poincare_coeffs",
    "right_factors",
    "run_criterion",
    "structure_report",
    "trig_moment",
    "z_dim_adjusted",
    "z_dim_formula",
    "zspace",
]
