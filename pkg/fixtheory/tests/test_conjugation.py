import random

import pytest

from common.errors import NotInSubgroupError, PreconditionError
from exactmat.matrix import IntMatrix, det
from fixtheory.conjugation import (
    conjugation_check,
    conjugation_failures,
    element_order,
    gamma_prime_index,
    psi_matrix,
    sample_gamma_prime,
    shifted_theta,
    theta_vector,
)
from fixtheory.invariants import fixed_projection_index
from fixtheory.models import AffineSelfmap
from groups.homs import HomToZn
from groups.presentation import surface_presentation

L1 = IntMatrix.from_rows([[2, 1], [1, 1]])
SHEAR = IntMatrix.from_rows([[1, 1], [0, 1]])


def lm(m):
    return IntMatrix.from_rows([[m + 1, m], [1, 1]])


def surface_map(L, R=None, g=2):
    base = surface_presentation(g)
    rho = HomToZn.first_generator(base, L.rows) if R is None else HomToZn(base, R)
    return AffineSelfmap(base, rho, L)


def test_psi_matrix():
    assert psi_matrix(IntMatrix.from_rows([[5]])) == IntMatrix.from_rows([[4]])
    assert psi_matrix(IntMatrix.identity(3)).is_zero()
    assert psi_matrix(L1) == IntMatrix.from_rows([[1, 1], [1, 0]])


def test_gamma_prime_index_examples():
    for m in (1, 3, 8):
        assert gamma_prime_index(surface_map(IntMatrix.from_rows([[m + 1]]))) == m
    # e1 has order m in Z^2 / (L_m - I) Z^2
    for m in (1, 2, 5):
        assert gamma_prime_index(surface_map(lm(m))) == m
    assert gamma_prime_index(surface_map(L1, IntMatrix.zeros(2, 4))) == 1
    with pytest.raises(PreconditionError, match="eigenvalue 1"):
        gamma_prime_index(surface_map(SHEAR))


def test_gamma_prime_index_bounds_and_projection_index():
    rng = random.Random(31)
    for _ in range(40):
        L = IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        d = det(psi_matrix(L))
        if d == 0 or det(IntMatrix.identity(2) - L @ L) == 0:
            continue
        phi = surface_map(L, IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)]))
        index = gamma_prime_index(phi)
        assert abs(d) % index == 0
        assert fixed_projection_index(phi, 2) == index


def test_theta_vector_examples():
    m = 3
    circle = surface_map(IntMatrix.from_rows([[m + 1]]))
    assert theta_vector(circle, (m, 0, 0, 0)) == (1,)
    assert theta_vector(circle, (0, 5, -2, 1)) == (0,)
    assert theta_vector(surface_map(L1), (1, 0, 0, 0)) == (0, 1)
    with pytest.raises(NotInSubgroupError):
        theta_vector(circle, (1, 0, 0, 0))
    with pytest.raises(PreconditionError):
        theta_vector(surface_map(SHEAR), (0, 0, 0, 0))


def test_element_order():
    circle = surface_map(IntMatrix.from_rows([[7]]))
    assert element_order(circle, (1, 0, 0, 0)) == 6
    assert element_order(circle, (4, 0, 0, 0)) == 3
    assert element_order(circle, (0, 1, 1, 1)) == 1


def test_conjugation_check_examples():
    circle = surface_map(IntMatrix.from_rows([[4]]))
    samples = sample_gamma_prime(circle, random.Random(0), 100)
    assert all(u[0] % 3 == 0 for u, _ in samples)
    assert conjugation_check(circle, samples)

    zero = surface_map(L1, IntMatrix.zeros(2, 4))
    assert conjugation_check(zero, sample_gamma_prime(zero, random.Random(1), 20))

    corrupted = shifted_theta(circle)
    assert not conjugation_check(circle, [((3, 0, 0, 0), (0,))], corrupted)


def _random_instance(rng):
    while True:
        n = rng.randint(1, 4)
        g = rng.randint(2, 4)
        L = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
        if det(psi_matrix(L)) == 0:
            continue
        R = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(2 * g)] for _ in range(n)])
        return surface_map(L, R, g)


def test_conjugation_identity_on_random_instances():
    rng = random.Random(32)
    for _ in range(500):
        phi = _random_instance(rng)
        samples = sample_gamma_prime(phi, rng, 5)
        assert conjugation_check(phi, samples), phi.describe()


def test_corrupted_theta_always_fails():
    rng = random.Random(33)
    for _ in range(50):
        phi = _random_instance(rng)
        e1 = (1,) + (0,) * (phi.base.generator_count - 1)
        order = element_order(phi, e1)
        samples = sample_gamma_prime(phi, rng, 5) + [(tuple(order * x for x in e1), (0,) * phi.fiber_rank)]
        failures = conjugation_failures(phi, samples, shifted_theta(phi))
        assert failures, phi.describe()
        assert all(u[0] != 0 for u, _ in failures)
