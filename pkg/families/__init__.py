"""Parametrized selfmap families with unbounded fixed point class indices."""

from .builders import Family, circle_family, family_map, fiber_matrix, lm_2x2, lm_nxn
from .witness import WitnessReport, unboundedness_sweep, witness

__all__ = [
    "Family",
    "WitnessReport",
    "circle_family",
    "family_map",
    "fiber_matrix",
    "lm_2x2",
    "lm_nxn",
    "unboundedness_sweep",
    "witness",
]
