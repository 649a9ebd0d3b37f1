"""
exactmat.smith
--------------
Smith normal form invariants and sublattice indices.

Only the invariant factors are needed, so sympy's ``invariant_factors`` is called on
the ZZ DomainMatrix directly; no caller needs the unimodular transforms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Optional

from sympy.polys.matrices.normalforms import invariant_factors

from common.errors import ShapeError
from exactmat.matrix import IntMatrix

logger = logging.getLogger(__name__)

INFINITE: Literal["infinite"] = "infinite"


@dataclass(frozen=True)
class SmithForm:
    """Non-zero invariant factors d1 | d2 | ... | d_rank, all positive."""

    invariants: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank != len(self.invariants):
            raise ShapeError("rank must equal the number of non-zero invariants")

    def product(self) -> int:
        result = 1
        for d in self.invariants:
            result *= d
        return result


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Invariant factors of A (any shape)."""
    invariants = tuple(sorted(abs(int(d)) for d in invariant_factors(A.to_domain()) if d != 0))
    form = SmithForm(invariants, len(invariants))
    logger.debug("Smith invariants of %dx%d matrix: %s", A.rows, A.cols, form.invariants)
    return form


def lattice_index(A: IntMatrix, n_rows: Optional[int] = None) -> int | Literal["infinite"]:
    """[Z^n : column span of A], or INFINITE when the columns do not span a full-rank lattice."""
    if n_rows is not None and n_rows != A.rows:
        raise ShapeError(f"expected {n_rows} rows, got {A.rows}")
    form = smith_normal_form(A)
    if form.rank < A.rows:
        return INFINITE
    return form.product()


__all__ = ["INFINITE", "SmithForm", "lattice_index", "smith_normal_form"]
