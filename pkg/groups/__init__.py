"""Presented base groups and homomorphisms to Z^n."""

from .homs import HomCheck, HomToZn, check_hom_well_defined
from .presentation import (
    Presentation,
    Word,
    exponent_sum_vector,
    load_presentation,
    parse_presentation,
    pz_presentation,
    surface_presentation,
    torus_presentation,
)

__all__ = [
    "HomCheck",
    "HomToZn",
    "Presentation",
    "Word",
    "check_hom_well_defined",
    "exponent_sum_vector",
    "load_presentation",
    "parse_presentation",
    "pz_presentation",
    "surface_presentation",
    "torus_presentation",
]
