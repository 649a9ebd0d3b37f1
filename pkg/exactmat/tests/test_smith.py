import random

import pytest

from common.errors import PreconditionError, ShapeError
from exactmat.cosets import Cokernel, cokernel_order, generated_subgroup_order
from exactmat.matrix import IntMatrix, det
from exactmat.smith import INFINITE, lattice_index, smith_normal_form


def test_smith_examples():
    m = 4
    assert smith_normal_form(IntMatrix.from_rows([[-m, -m], [-1, 0]])).invariants == (1, 4)
    assert smith_normal_form(IntMatrix.identity(3)).invariants == (1, 1, 1)
    form = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 0]]))
    assert form.invariants == (2,)
    assert form.rank == 1


def test_smith_divisibility_chain_and_product():
    rng = random.Random(11)
    for _ in range(100):
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        A = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        form = smith_normal_form(A)
        assert all(d > 0 for d in form.invariants)
        assert all(b % a == 0 for a, b in zip(form.invariants, form.invariants[1:]))
        if rows == cols and det(A) != 0:
            assert form.product() == abs(det(A))


def test_smith_drops_zero_invariants():
    form = smith_normal_form(IntMatrix.from_rows([[6, 0], [0, -2]]))
    assert form.invariants == (2, 6)
    wide = smith_normal_form(IntMatrix.from_rows([[2, 4, 6], [0, 0, 0]]))
    assert wide.invariants == (2,)
    assert wide.rank == 1
    assert lattice_index(IntMatrix.from_rows([[2, 4, 6], [0, 0, 0]])) == INFINITE


def test_lattice_index_examples():
    assert lattice_index(IntMatrix.from_rows([[7]])) == 7
    assert lattice_index(IntMatrix.identity(3)) == 1
    for m in (1, 2, 5, 40):
        A = IntMatrix.from_columns([(-m, -1), (-m, 0), (1, 0)])
        assert lattice_index(A, n_rows=2) == 1
    assert lattice_index(IntMatrix.from_rows([[1, 2], [2, 4]])) == INFINITE
    with pytest.raises(ShapeError):
        lattice_index(IntMatrix.identity(2), n_rows=3)


def test_lattice_index_matches_coset_count():
    rng = random.Random(12)
    checked = 0
    while checked < 60:
        n = rng.randint(1, 3)
        extra = rng.randint(0, 2)
        A = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(n + extra)] for _ in range(n)])
        index = lattice_index(A)
        if index == INFINITE or index > 5000:
            continue
        assert cokernel_order(A) == index
        checked += 1


def test_cokernel_subgroups():
    group = Cokernel(IntMatrix.from_rows([[4, 0], [0, 6]]))
    assert len(group.elements()) == 24
    assert group.reduce((5, -1)) == (1, 5)
    assert len(group.generated_subgroup([(1, 0)])) == 4
    assert len(group.generated_subgroup([(2, 3)])) == 2
    assert generated_subgroup_order(IntMatrix.from_rows([[5]]), [(0,)]) == 1


def test_cokernel_representatives_with_mixed_signs():
    A = IntMatrix.from_rows([[-2, 1], [0, 3]])
    group = Cokernel(A)
    assert len(group.elements()) == abs(det(A))
    for v in [(7, -4), (-3, 11), (0, 0)]:
        w = group.reduce(v)
        assert group.reduce(w) == w
        assert w in group.elements()
    assert group.reduce((1, 3)) == group.reduce((0, 0))


def test_cokernel_needs_full_rank():
    with pytest.raises(PreconditionError):
        Cokernel(IntMatrix.from_rows([[1, 2], [2, 4]]))
