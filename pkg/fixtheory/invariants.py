"""
fixtheory.invariants
--------------------
Lefschetz numbers, Nielsen numbers and fixed point class indices of iterates of
phi(u, s) = (u, rho(u) + L s) on (base) x T^n.

With A_k = I - L^k and rho_k = (sum_{i<k} L^i) R, the fixed subgroup of phi^k is
{(u, s) : A_k s = rho_k(u)}, so its projection to the base is the kernel of
u -> rho_k(u) mod A_k Z^n and its index is the order of the image of rho_k in
Z^n / A_k Z^n. The primary formula is |det A_k| / [Z^n : span(A_k | rho_k)];
coset enumeration in exactmat.cosets is the independent check.
"""

from __future__ import annotations

import logging
from typing import Optional

from common.errors import AlgebraicFailure, PreconditionError, ZeroBranchError
from exactmat.cosets import Cokernel
from exactmat.matrix import IntMatrix, det, geometric_sum, hstack, identity_minus, mat_pow
from exactmat.smith import lattice_index
from fixtheory.models import AffineSelfmap, InvariantReport

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_LIMIT = 5000


def _check_iterate(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"iterate k must be at least 1, got {k}")


def iterate_matrix(L: IntMatrix, k: int) -> IntMatrix:
    """A_k = I - L^k."""
    _check_iterate(k)
    return identity_minus(mat_pow(L, k))


def torus_lefschetz(L: IntMatrix, k: int) -> int:
    """Lef of the k-th iterate of the torus map induced by L: det(I - L^k)."""
    return det(iterate_matrix(L, k))


def torus_nielsen(L: IntMatrix, k: int) -> int:
    """Tori are Jiang spaces, so Nie = |Lef|."""
    return abs(torus_lefschetz(L, k))


def bundle_lefschetz(L: IntMatrix, k: int, chi: int) -> int:
    """det(I - L^k) * chi, the product formula for an identity-inducing base map."""
    return torus_lefschetz(L, k) * chi


def rho_iterate(phi: AffineSelfmap, k: int) -> IntMatrix:
    """rho_k = (I + L + ... + L^(k-1)) R."""
    _check_iterate(k)
    return geometric_sum(phi.L, k) @ phi.R


def _zero_branch(k: int, consequence: str) -> ZeroBranchError:
    return ZeroBranchError(
        f"det(I - L^{k}) = 0, so L^{k} has eigenvalue 1 and phi^{k} is in the Nielsen-zero branch "
        f"(Lef = Nie = 0): {consequence}"
    )


def fixed_projection_index(phi: AffineSelfmap, k: int) -> int:
    """[Gamma : p(fix phi^k)]."""
    A = iterate_matrix(phi.L, k)
    d = det(A)
    if d == 0:
        raise _zero_branch(k, "every fixed point class is inessential, so there is no projection index")
    span_index = lattice_index(hstack(A, rho_iterate(phi, k)))
    index = abs(d) // span_index
    logger.debug("projection index at k=%d: |det A_k| = %d, span index %d -> %d", k, abs(d), span_index, index)
    return index


def essential_class_index(phi: AffineSelfmap, k: int, chi: int) -> int:
    """|ind(phi^k, F)| = [Gamma : p(fix phi^k)] * |chi| for the guaranteed essential class F."""
    lefschetz = bundle_lefschetz(phi.L, k, chi)
    if lefschetz == 0:
        if chi == 0:
            raise PreconditionError("chi = 0 makes the Lefschetz number 0, so no essential class is guaranteed")
        raise _zero_branch(k, "no essential class is guaranteed")
    return fixed_projection_index(phi, k) * abs(chi)


def nielsen_zero_branch(phi: AffineSelfmap, k: int) -> InvariantReport:
    """Report for an iterate with det(I - L^k) = 0: Lef = Nie = Min = 0."""
    if torus_lefschetz(phi.L, k) != 0:
        raise PreconditionError(f"det(I - L^{k}) != 0, so L^{k} has no eigenvalue 1: the Nielsen-zero branch does not apply")
    return InvariantReport(k=k, lefschetz=0, nielsen=0, min_fixed=0, zero_branch=True)


def fiber_nielsen_by_cosets(L: IntMatrix, k: int) -> int:
    """|Z^n / (I - L^k) Z^n| by enumerating coset representatives."""
    A = iterate_matrix(L, k)
    if det(A) == 0:
        raise _zero_branch(k, f"the quotient Z^n / (I - L^{k}) Z^n is infinite")
    return len(Cokernel(A).elements())


def projection_index_by_cosets(phi: AffineSelfmap, k: int) -> int:
    """Order of the subgroup generated by the columns of rho_k in Z^n / A_k Z^n."""
    A = iterate_matrix(phi.L, k)
    if det(A) == 0:
        raise _zero_branch(k, f"the quotient Z^n / (I - L^{k}) Z^n is infinite")
    return len(Cokernel(A).generated_subgroup(rho_iterate(phi, k).columns()))


def _nielsen_policy(fiber_lefschetz: int, chi: int) -> Optional[int]:
    if chi == 0:
        return 0
    if abs(fiber_lefschetz) == 1:
        return 1
    return None


def _verify(phi: AffineSelfmap, k: int, fiber_lefschetz: int, projection_index: int) -> None:
    cosets = fiber_nielsen_by_cosets(phi.L, k)
    if cosets != abs(fiber_lefschetz):
        raise AlgebraicFailure(f"coset count {cosets} differs from |det(I - L^{k})| = {abs(fiber_lefschetz)}")
    oracle = projection_index_by_cosets(phi, k)
    if oracle != projection_index:
        raise AlgebraicFailure(f"projection index {projection_index} differs from coset enumeration {oracle}")
    logger.info("coset enumeration confirms projection index %d at k=%d", projection_index, k)


def full_report(
    phi: AffineSelfmap,
    k: int,
    chi: Optional[int] = None,
    verify: bool = False,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> InvariantReport:
    """All invariants of phi^k.

    chi defaults to the base presentation's Euler characteristic. ``nielsen`` is only
    filled in where a product formula applies (chi = 0, or |det(I - L^k)| = 1);
    otherwise it is None.
    """
    if chi is None:
        chi = phi.base.euler_characteristic
    if chi is None:
        raise PreconditionError(f"Euler characteristic of {phi.base.describe()} is unknown; supply chi")
    fiber_lefschetz = torus_lefschetz(phi.L, k)
    if fiber_lefschetz == 0:
        logger.info("k=%d is in the Nielsen-zero branch", k)
        return nielsen_zero_branch(phi, k)

    projection_index = fixed_projection_index(phi, k)
    if verify:
        if abs(fiber_lefschetz) <= oracle_limit:
            _verify(phi, k, fiber_lefschetz, projection_index)
        else:
            logger.warning("skipping coset check: |det(I - L^%d)| = %d exceeds %d", k, abs(fiber_lefschetz), oracle_limit)
    nielsen = _nielsen_policy(fiber_lefschetz, chi)
    report = InvariantReport(
        k=k,
        lefschetz=fiber_lefschetz * chi,
        nielsen=nielsen,
        min_fixed=nielsen,
        projection_index=projection_index,
        essential_index=projection_index * abs(chi) if chi else None,
    )
    logger.info("report for %s at k=%d: %s", phi.base.label, k, report.model_dump(mode="json"))
    return report


__all__ = [
    "DEFAULT_ORACLE_LIMIT",
    "bundle_lefschetz",
    "essential_class_index",
    "fiber_nielsen_by_cosets",
    "fixed_projection_index",
    "full_report",
    "iterate_matrix",
    "nielsen_zero_branch",
    "projection_index_by_cosets",
    "rho_iterate",
    "torus_lefschetz",
    "torus_nielsen",
]
