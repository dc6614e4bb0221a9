"""Multivariate Chebyshev polynomials of rank-1 and rank-2 Lie algebras."""

from ._weylcheb import (
    closed_form_gf,
    dimension_check,
    first_kind_poly,
    group_order,
    phi_asym,
    phi_sym,
    polynomial_table,
    recurrence_poly,
    second_kind_poly,
    variables,
    verify_ratio,
    weyl_elements,
)

__all__ = [
    "closed_form_gf",
    "dimension_check",
    "first_kind_poly",
    "group_order",
    "phi_asym",
    "phi_sym",
    "polynomial_table",
    "recurrence_poly",
    "second_kind_poly",
    "variables",
    "verify_ratio",
    "weyl_elements",
]
