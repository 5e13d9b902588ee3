"""Minkowski-geometry toolkit: semi-inner products, generalized adjoints,
normal forms, left reflections, ellipsoids, and symmetry groups."""

from ._minkit import (
    Ellipsoid,
    InputError,
    NormModel,
    NumericError,
    SipContext,
    UnsupportedError,
    adjoint_abelian_normal_form,
    birkhoff,
    birkhoff_direction,
    birkhoff_preservation_probe,
    classify_composition,
    contact_points,
    duality_map,
    euclidean_battery,
    gen_adjoint_apply,
    group_report,
    is_adjoint_abelian,
    is_isometry,
    is_self_adjoint,
    iso_abelian_check,
    isometry_normal_form,
    james,
    john,
    left_reflection,
    lowner,
    lp_rotation_scan,
    lp_sign_function,
    orbit_probe,
    polar_polytope_vertices,
    polytopal_isometry_group,
    real_block_decomposition,
    remark_body_samples,
    rho_minus,
    rho_plus,
    riesz_representer,
    sip,
)

__all__ = [
    "Ellipsoid",
    "InputError",
    "NormModel",
    "NumericError",
    "SipContext",
    "UnsupportedError",
    "adjoint_abelian_normal_form",
    "birkhoff",
    "birkhoff_direction",
    "birkhoff_preservation_probe",
    "classify_composition",
    "contact_points",
    "duality_map",
    "euclidean_battery",
    "gen_adjoint_apply",
    "group_report",
    "is_adjoint_abelian",
    "is_isometry",
    "is_self_adjoint",
    "iso_abelian_check",
    "isometry_normal_form",
    "james",
    "john",
    "left_reflection",
    "lowner",
    "lp_rotation_scan",
    "lp_sign_function",
    "orbit_probe",
    "polar_polytope_vertices",
    "polytopal_isometry_group",
    "real_block_decomposition",
    "remark_body_samples",
    "rho_minus",
    "rho_plus",
    "riesz_representer",
    "sip",
]
