"""
polyalg.cyclotomic
------------------
Root-of-unity eigenvalue detection for integer matrices, purely algebraic.

det(I - L^k) = 0 exactly when some eigenvalue of L is a k-th root of unity, i.e. when
some cyclotomic polynomial Phi_d with d | k divides charpoly(L). An eigenvalue that is
a primitive d-th root of unity has degree totient(d) over Q, so totient(d) <= n. Since
totient(d) >= sqrt(d/2) for every d >= 1, totient(d) <= n forces d <= 2 n^2, which
bounds the search.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable

from sympy import cyclotomic_poly, totient as _totient

from common.errors import PreconditionError, ShapeError
from exactmat.matrix import IntMatrix, charpoly, det, identity_minus, mat_pow
from polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial Phi_d."""
    if d < 1:
        raise PreconditionError(f"cyclotomic index must be positive, got {d}")
    return IntPolynomial.from_high_first([int(c) for c in cyclotomic_poly(d, polys=True).all_coeffs()])


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    if d < 1:
        raise PreconditionError(f"totient needs a positive integer, got {d}")
    return int(_totient(d))


def zero_iterates(L: IntMatrix) -> frozenset[int]:
    """All d such that Phi_d divides charpoly(L).

    det(I - L^k) = 0 iff some returned d divides k; an empty result means
    det(I - L^k) != 0 for every k >= 1.
    """
    if not L.is_square:
        raise ShapeError(f"zero_iterates needs a square matrix, got {L.rows}x{L.cols}")
    n = L.rows
    cp = charpoly(L)
    found = set()
    for d in range(1, 2 * n * n + 1):
        if totient(d) > n:
            continue
        if cyclotomic(d).divides(cp):
            found.add(d)
    logger.debug("charpoly %s has cyclotomic factors %s", cp, sorted(found))
    return frozenset(found)


def iterate_vanishes(orders: Iterable[int], k: int) -> bool:
    """True when det(I - L^k) = 0, given the cyclotomic orders of L."""
    return any(k % d == 0 for d in orders)


def vanishing_iterates(L: IntMatrix, k_max: int) -> list[int]:
    """The k in [1, k_max] with det(I - L^k) = 0, by direct determinants."""
    return [k for k in range(1, k_max + 1) if det(identity_minus(mat_pow(L, k))) == 0]


__all__ = ["cyclotomic", "iterate_vanishes", "totient", "vanishing_iterates", "zero_iterates"]
