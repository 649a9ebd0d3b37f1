"""Fixed point invariants of fiber-preserving selfmaps of (base) x T^n."""

from .models import AffineSelfmap, InvariantReport
from .invariants import (
    bundle_lefschetz,
    essential_class_index,
    fixed_projection_index,
    full_report,
    nielsen_zero_branch,
    rho_iterate,
    torus_lefschetz,
    torus_nielsen,
)
from .conjugation import conjugation_check, gamma_prime_index, psi_matrix, theta_vector

__all__ = [
    "AffineSelfmap",
    "InvariantReport",
    "bundle_lefschetz",
    "conjugation_check",
    "essential_class_index",
    "fixed_projection_index",
    "full_report",
    "gamma_prime_index",
    "nielsen_zero_branch",
    "psi_matrix",
    "rho_iterate",
    "theta_vector",
    "torus_lefschetz",
    "torus_nielsen",
]
