"""
exactmat.cosets
---------------
Brute-force enumeration of the finite group Z^n / A Z^n and of subgroups inside it.

This is the independent cross-check for the Smith-form index formulas: it never
touches the Smith form. The column Hermite normal form of A gives an upper-triangular
basis h_0..h_{n-1} of A Z^n with h_i[r] = 0 for r > i and h_i[i] > 0; every vector then
reduces to a unique representative in the box 0 <= x_i < h_ii, and group elements are
compared through those representatives. Sizes are bounded by |det A|, so callers keep
|det A| small (see settings.oracle_limit).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from sympy.polys.matrices.normalforms import hermite_normal_form

from common.errors import PreconditionError
from exactmat.matrix import IntMatrix


def _triangular_basis(A: IntMatrix) -> list[tuple[int, ...]]:
    hnf = hermite_normal_form(A.to_domain())
    if hnf.shape[1] < A.rows:
        raise PreconditionError("columns do not span a full-rank sublattice; the quotient is infinite")
    return IntMatrix.from_domain(hnf).columns()


class Cokernel:
    """The finite abelian group Z^n / A Z^n with canonical representatives."""

    def __init__(self, A: IntMatrix):
        self.n = A.rows
        self._basis = _triangular_basis(A)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        w = list(v)
        for i in reversed(range(self.n)):
            h = self._basis[i]
            q = w[i] // h[i]
            if q:
                for r in range(i + 1):
                    w[r] -= q * h[r]
        return tuple(w)

    def elements(self) -> list[tuple[int, ...]]:
        """Every coset representative, enumerated through the box ranges."""
        boxes: list[tuple[int, ...]] = [()]
        for i, h in enumerate(self._basis):
            boxes = [b + (x,) for b in boxes for x in range(h[i])]
        return boxes

    def generated_subgroup(self, generators: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
        """Closure of {0} under adding the generators (a subgroup, the group being finite)."""
        gens = [self.reduce(g) for g in generators]
        zero = (0,) * self.n
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.reduce([a + b for a, b in zip(x, g)])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def cokernel_order(A: IntMatrix) -> int:
    """|Z^n / A Z^n| counted as the number of canonical representatives."""
    return len(Cokernel(A).elements())


def generated_subgroup_order(A: IntMatrix, generators: Iterable[Sequence[int]]) -> int:
    """Order of the subgroup of Z^n / A Z^n generated by the given vectors."""
    return len(Cokernel(A).generated_subgroup(generators))


__all__ = ["Cokernel", "cokernel_order", "generated_subgroup_order"]
