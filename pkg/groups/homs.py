"""
groups.homs
-----------
Homomorphisms from a presented group to Z^n, kept on the abelianization only.

A homomorphism is the n x g matrix R whose column j is the image of generator j. R
defines a homomorphism exactly when it kills the exponent-sum vector of every relator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from common.errors import InvalidHomomorphismError, ShapeError
from exactmat.matrix import IntMatrix
from groups.presentation import Presentation, exponent_sum_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelatorCheck:
    """Image R * exponent_sum_vector(relator) of one relator."""

    relator_index: int
    exponent_sums: tuple[int, ...]
    image: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not any(self.image)


@dataclass(frozen=True)
class HomCheck:
    """Outcome of check_hom_well_defined. Truthy when every relator maps to zero."""

    relators: tuple[RelatorCheck, ...]

    def __bool__(self) -> bool:
        return all(r.ok for r in self.relators)

    def failures(self) -> list[RelatorCheck]:
        return [r for r in self.relators if not r.ok]

    def describe(self) -> str:
        bad = self.failures()
        if not bad:
            return "all relators map to 0"
        return "; ".join(f"relator {r.relator_index} maps to {r.image}" for r in bad)


def check_hom_well_defined(P: Presentation, R: IntMatrix) -> HomCheck:
    if R.cols != P.generator_count:
        raise ShapeError(f"homomorphism matrix has {R.cols} columns for {P.generator_count} generators")
    checks = []
    for i, relator in enumerate(P.relators):
        sums = exponent_sum_vector(relator, P)
        checks.append(RelatorCheck(i, sums, R.apply(sums)))
    return HomCheck(tuple(checks))


@dataclass(frozen=True)
class HomToZn:
    """rho: Gamma -> Z^n given by its matrix on the abelianized generators."""

    presentation: Presentation
    matrix: IntMatrix

    def __post_init__(self) -> None:
        check = check_hom_well_defined(self.presentation, self.matrix)
        if not check:
            raise InvalidHomomorphismError(
                f"matrix does not define a homomorphism on {self.presentation.label}: {check.describe()}"
            )

    @classmethod
    def zero(cls, P: Presentation, n: int) -> HomToZn:
        return cls(P, IntMatrix.zeros(n, P.generator_count))

    @classmethod
    def first_generator(cls, P: Presentation, n: int, value: int = 1) -> HomToZn:
        """First generator to value * e1, every other generator to 0."""
        rows = [[0] * P.generator_count for _ in range(n)]
        rows[0][0] = value
        return cls(P, IntMatrix.from_rows(rows))

    @property
    def target_rank(self) -> int:
        return self.matrix.rows

    @property
    def R(self) -> IntMatrix:
        return self.matrix

    def apply(self, u_ab: Sequence[int]) -> tuple[int, ...]:
        """Image of an abelianized element (exponent-sum vector)."""
        return self.matrix.apply(u_ab)


__all__ = ["HomCheck", "HomToZn", "RelatorCheck", "check_hom_well_defined"]
