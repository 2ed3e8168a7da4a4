"""Canonical commutation relation toolkit: algebra, orbits, PCF, Krein representations."""

from ._core import (
    BasisRep,
    HolokreinError,
    MultimodeRep,
    build_multimode_rep,
    build_rep,
    canonical_isomorphism,
    classify_orbit,
    commutator,
    conjugation_from_v,
    detect_null_subrep,
    gamma_s,
    is_bogoliubov,
    isomap,
    krein_adjoint,
    normal_order,
    reduce_to_canonical,
    run_cli,
    spectral_condition_check,
    vacuum_descent,
    verify_implementation,
    verify_multimode_rep,
    verify_rep,
    weber_d,
)

__all__ = [
    "BasisRep",
    "HolokreinError",
    "MultimodeRep",
    "build_multimode_rep",
    "build_rep",
    "canonical_isomorphism",
    "classify_orbit",
    "commutator",
    "conjugation_from_v",
    "detect_null_subrep",
    "gamma_s",
    "is_bogoliubov",
    "isomap",
    "krein_adjoint",
    "normal_order",
    "reduce_to_canonical",
    "run_cli",
    "spectral_condition_check",
    "vacuum_descent",
    "verify_implementation",
    "verify_multimode_rep",
    "verify_rep",
    "weber_d",
]
