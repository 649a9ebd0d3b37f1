"""
fixtheory.conjugation
---------------------
The shear that untwists phi on a finite-index subgroup, in additive coordinates.

For the fiber Z^n: psi = L - I. Gamma' = rho^-1(psi(Z^n)) has finite index when
det(L - I) != 0, theta = psi^-1 o rho maps Gamma' into Z^n, and with
h(u, s) = (u, theta(u) + s) the conjugate h o phi o h^-1 is (u, s) -> (u, L s)
on Gamma' x Z^n.
"""

from __future__ import annotations

import logging
import random
from typing import Callable, Optional, Sequence

from common.errors import NotInSubgroupError, PreconditionError
from exactmat.matrix import IntMatrix, det, hstack, solve_integer
from exactmat.smith import lattice_index
from fixtheory.models import AffineSelfmap

logger = logging.getLogger(__name__)

Theta = Callable[[Sequence[int]], tuple[int, ...]]
Sample = tuple[tuple[int, ...], tuple[int, ...]]


def psi_matrix(L: IntMatrix) -> IntMatrix:
    """psi = L - I."""
    return L - IntMatrix.identity(L.rows)


def _psi_determinant(L: IntMatrix) -> int:
    d = det(psi_matrix(L))
    if d == 0:
        raise PreconditionError(
            "det(L - I) = 0: L has eigenvalue 1, so psi = L - I is not injective and Gamma' has infinite index"
        )
    return d


def gamma_prime_index(phi: AffineSelfmap) -> int:
    """[Gamma : Gamma'], the order of the image of R in Z^n / (L - I) Z^n."""
    d = _psi_determinant(phi.L)
    return abs(d) // lattice_index(hstack(psi_matrix(phi.L), phi.R))


def element_order(phi: AffineSelfmap, u_ab: Sequence[int]) -> int:
    """Smallest c >= 1 with c * u in Gamma', i.e. the order of rho(u) modulo (L - I) Z^n."""
    d = _psi_determinant(phi.L)
    image = IntMatrix.from_columns([phi.rho.apply(u_ab)])
    return abs(d) // lattice_index(hstack(psi_matrix(phi.L), image))


def theta_vector(phi: AffineSelfmap, u_ab: Sequence[int]) -> tuple[int, ...]:
    """The x in Z^n with (L - I) x = R u, for u in the abelianized Gamma'."""
    _psi_determinant(phi.L)
    try:
        return solve_integer(psi_matrix(phi.L), phi.rho.apply(u_ab))
    except PreconditionError as exc:
        raise NotInSubgroupError(f"u = {tuple(u_ab)} is not in Gamma': {exc}") from exc


def shifted_theta(phi: AffineSelfmap, generator: int = 0, shift: Optional[Sequence[int]] = None) -> Theta:
    """theta + u[generator] * shift, a homomorphism that is not psi^-1 o rho (shift defaults to e1)."""
    n = phi.fiber_rank
    shift = tuple(shift) if shift is not None else (1,) + (0,) * (n - 1)

    def corrupted(u_ab: Sequence[int]) -> tuple[int, ...]:
        return tuple(x + u_ab[generator] * c for x, c in zip(theta_vector(phi, u_ab), shift))

    return corrupted


def sample_gamma_prime(phi: AffineSelfmap, rng: random.Random, count: int, bound: int = 5) -> list[Sample]:
    """Random (u, s) in Gamma'_ab x Z^n: a random u scaled by its order modulo Gamma'."""
    g, n = phi.base.generator_count, phi.fiber_rank
    samples = []
    for _ in range(count):
        u = [rng.randint(-bound, bound) for _ in range(g)]
        order = element_order(phi, u)
        s = tuple(rng.randint(-bound, bound) for _ in range(n))
        samples.append((tuple(order * x for x in u), s))
    return samples


def _conjugate(phi: AffineSelfmap, theta: Theta, u: Sequence[int], s: Sequence[int]) -> tuple[int, ...]:
    """Fiber coordinate of h o phi o h^-1 applied to (u, s)."""
    t = theta(u)
    pulled = tuple(a - b for a, b in zip(s, t))
    mapped = tuple(a + b for a, b in zip(phi.rho.apply(u), phi.L.apply(pulled)))
    return tuple(a + b for a, b in zip(mapped, t))


def conjugation_failures(phi: AffineSelfmap, samples: Sequence[Sample], theta: Optional[Theta] = None) -> list[Sample]:
    """Samples where h o phi o h^-1 differs from the product map (u, s) -> (u, L s)."""
    _psi_determinant(phi.L)
    theta = theta or (lambda u: theta_vector(phi, u))
    failures = [(u, s) for u, s in samples if _conjugate(phi, theta, u, s) != phi.L.apply(s)]
    if failures:
        logger.warning("conjugation identity fails on %d of %d samples", len(failures), len(samples))
    return failures


def conjugation_check(phi: AffineSelfmap, samples: Sequence[Sample], theta: Optional[Theta] = None) -> bool:
    return not conjugation_failures(phi, samples, theta)


__all__ = [
    "Sample",
    "Theta",
    "conjugation_check",
    "conjugation_failures",
    "element_order",
    "gamma_prime_index",
    "psi_matrix",
    "sample_gamma_prime",
    "shifted_theta",
    "theta_vector",
]
