"""Value types for fiber-preserving selfmaps and the reports computed from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, model_validator

from common.errors import PreconditionError, ShapeError
from exactmat.matrix import IntMatrix, format_matrix
from groups.homs import HomToZn
from groups.presentation import Presentation

# Exact integers travel through JSON as decimal strings; validation accepts either form.
ExactInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


@dataclass(frozen=True)
class AffineSelfmap:
    """phi(u, s) = (u, rho(u) + L s) on Gamma x Z^n, the base map inducing the identity."""

    base: Presentation
    rho: HomToZn
    L: IntMatrix
    base_map: Literal["identity"] = "identity"

    def __post_init__(self) -> None:
        if not self.L.is_square:
            raise ShapeError(f"fiber matrix must be square, got {self.L.rows}x{self.L.cols}")
        if self.rho.target_rank != self.L.rows:
            raise ShapeError(f"rho targets Z^{self.rho.target_rank} but L acts on Z^{self.L.rows}")
        if self.rho.presentation != self.base:
            raise PreconditionError("rho is defined on a different presentation than the base")
        if self.base_map != "identity":
            raise PreconditionError(f"only identity base maps are supported, got {self.base_map!r}")

    @property
    def fiber_rank(self) -> int:
        return self.L.rows

    @property
    def R(self) -> IntMatrix:
        return self.rho.matrix

    def describe(self) -> str:
        return f"{self.base.describe()} x T^{self.fiber_rank}, L = {format_matrix(self.L)}, R = {format_matrix(self.R)}"


class InvariantReport(BaseModel):
    """Invariants of the k-th iterate. ``nielsen`` is None when it is not computed."""

    model_config = ConfigDict(frozen=True)

    k: ExactInt = Field(..., ge=1)
    lefschetz: ExactInt
    nielsen: Optional[ExactInt] = Field(None, ge=0)
    min_fixed: Optional[ExactInt] = Field(None, ge=0)
    projection_index: Optional[ExactInt] = Field(None, ge=1)
    essential_index: Optional[ExactInt] = Field(None, ge=0)
    zero_branch: bool = False

    @model_validator(mode="after")
    def _consistent(self) -> InvariantReport:
        if self.min_fixed != self.nielsen:
            raise ValueError("min_fixed must equal nielsen")
        if self.zero_branch and (self.lefschetz != 0 or self.nielsen != 0):
            raise ValueError("a zero-branch report has lefschetz = nielsen = 0")
        return self


__all__ = ["AffineSelfmap", "ExactInt", "InvariantReport"]
