"""
families.builders
-----------------
The fiber matrices and selfmaps of the unbounded-index families.

``lm_nxn(n, m)`` has first row (m+1, m, ..., m) and ones on and below the diagonal
elsewhere; it is the all-ones lower triangle plus a rank-one update, so its
characteristic polynomial is (x-1)^n - m x^(n-1) and its determinant is 1.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Optional

from common.errors import PreconditionError
from exactmat.matrix import IntMatrix
from fixtheory.models import AffineSelfmap
from groups.homs import HomToZn
from groups.presentation import pz_presentation, surface_presentation

logger = logging.getLogger(__name__)


class Family(str, Enum):
    SG_S1 = "sg-s1"  # surface x S^1
    SG_TN = "sg-tn"  # surface x T^n, n >= 2
    PZ_T2 = "pz-t2"  # G_(3,1) 3-manifold x T^2


def _check_m(m: int) -> None:
    if m < 1:
        raise PreconditionError(f"family parameter m must be at least 1, got {m}")


def circle_family(m: int) -> IntMatrix:
    """[m+1], the degree m+1 map of the circle."""
    _check_m(m)
    return IntMatrix.from_rows([[m + 1]])


def lm_2x2(m: int) -> IntMatrix:
    _check_m(m)
    return IntMatrix.from_rows([[m + 1, m], [1, 1]])


def lm_nxn(n: int, m: int) -> IntMatrix:
    if n < 2:
        raise PreconditionError(f"lm_nxn needs n >= 2, got {n}")
    _check_m(m)
    rows = [[m + 1] + [m] * (n - 1)]
    rows += [[1 if j <= i else 0 for j in range(n)] for i in range(1, n)]
    return IntMatrix.from_rows(rows)


def fiber_matrix(n: int, m: int) -> IntMatrix:
    if n == 1:
        return circle_family(m)
    return lm_nxn(n, m)


def family_map(family: Family | str, m: int, n: Optional[int] = None, g: int = 2, chi: Optional[int] = None) -> AffineSelfmap:
    """The family member with parameter m.

    Surfaces get rho = e1 on a1; the G_(3,1) base gets rho(x0) = e1, rho(x1) = 0,
    rho(x2) = -e1. ``chi`` is required for pz-t2 and overrides the surface value otherwise.
    """
    family = Family(family)
    if family is Family.SG_S1:
        if n not in (None, 1):
            raise PreconditionError(f"sg-s1 has fiber rank 1, got n={n}")
        n = 1
    elif family is Family.SG_TN:
        n = 2 if n is None else n
        if n < 2:
            raise PreconditionError(f"sg-tn needs n >= 2, got {n}")
    else:
        if n not in (None, 2):
            raise PreconditionError(f"pz-t2 has fiber rank 2, got n={n}")
        n = 2

    if family is Family.PZ_T2:
        if chi is None:
            raise PreconditionError("the Euler characteristic of the G_(3,1) manifold must be supplied (chi)")
        base = pz_presentation().with_euler_characteristic(chi)
        rows = [[0] * base.generator_count for _ in range(n)]
        rows[0] = [1, 0, -1]
        rho = HomToZn(base, IntMatrix.from_rows(rows))
    else:
        base = surface_presentation(g)
        if chi is not None:
            base = base.with_euler_characteristic(chi)
        rho = HomToZn.first_generator(base, n)
    logger.debug("built %s member m=%d on %s with fiber rank %d", family.value, m, base.label, n)
    return AffineSelfmap(base, rho, fiber_matrix(n, m))


__all__ = ["Family", "circle_family", "family_map", "fiber_matrix", "lm_2x2", "lm_nxn"]
