"""Exact integer matrix arithmetic and lattice normal forms."""

from .matrix import IntMatrix, charpoly, det, mat_pow, parse_matrix
from .smith import INFINITE, SmithForm, lattice_index, smith_normal_form

__all__ = [
    "INFINITE",
    "IntMatrix",
    "SmithForm",
    "charpoly",
    "det",
    "lattice_index",
    "mat_pow",
    "parse_matrix",
    "smith_normal_form",
]
