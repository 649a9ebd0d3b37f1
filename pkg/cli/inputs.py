"""
cli.inputs
----------
RunConfig, the validated form of one command line, and the builders that turn it into
library objects (matrices, presentations, selfmaps).
"""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from common.errors import PreconditionError
from exactmat.matrix import IntMatrix, parse_matrix
from families.builders import Family, family_map, fiber_matrix
from fixtheory.models import AffineSelfmap
from groups.homs import HomToZn
from groups.presentation import Presentation, load_presentation, surface_presentation, torus_presentation

logger = logging.getLogger(__name__)

Command = Literal["invariants", "witness", "sweep", "conjcheck", "zerotest"]


class OutputFormat(str, Enum):
    table = "table"
    json = "json"
    csv = "csv"


class RunConfig(BaseModel):
    """Everything one command needs. Either a family (with m) or a custom --L is given."""

    model_config = ConfigDict(frozen=True)

    command: Command
    family: Optional[Family] = None
    L: Optional[str] = None
    rho: Optional[str] = None
    presentation: Optional[Path] = None
    torus_base: Optional[int] = None
    g: int = 2
    n: Optional[int] = None
    m: Optional[int] = None
    m_max: Optional[int] = None
    k: int = 1
    chi: Optional[int] = None
    format: OutputFormat = OutputFormat.table
    verify: bool = False
    seed: int = 0
    samples: int = Field(100, ge=0)
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _required_per_command(self) -> RunConfig:
        if self.family is not None and self.L is not None:
            raise ValueError("give either --family or --L, not both")
        if self.presentation is not None and self.torus_base is not None:
            raise ValueError("give either --presentation or --torus-base, not both")
        if self.command in ("witness", "sweep") and self.family is None:
            raise ValueError(f"{self.command} needs --family")
        if self.command == "sweep":
            if self.m_max is None:
                raise ValueError("sweep needs --m-max")
        elif self.family is not None and self.m is None:
            raise ValueError(f"--family {self.family.value} needs --m")
        if self.family is None and self.L is None and self.command != "sweep":
            raise ValueError(f"{self.command} needs --family or --L")
        return self


def build_base(config: RunConfig) -> Presentation:
    """Base group of a custom map: presentation file, torus, or the genus-g surface."""
    if config.presentation is not None:
        if config.chi is None:
            raise PreconditionError(f"the Euler characteristic of {config.presentation.name} is unknown: a presentation-file base needs --chi")
        return load_presentation(config.presentation, config.chi)
    if config.torus_base is not None:
        base = torus_presentation(config.torus_base)
    else:
        base = surface_presentation(config.g)
    if config.chi is not None:
        base = base.with_euler_characteristic(config.chi)
    return base


def build_map(config: RunConfig) -> AffineSelfmap:
    if config.family is not None:
        return family_map(config.family, config.m, n=config.n, g=config.g, chi=config.chi)
    L = parse_matrix(config.L)
    base = build_base(config)
    if config.rho is None or config.rho.strip().lower() == "zero":
        rho = HomToZn.zero(base, L.rows)
    else:
        rho = HomToZn(base, parse_matrix(config.rho))
    logger.info("custom map on %s with L = %s", base.label, config.L)
    return AffineSelfmap(base, rho, L)


def build_fiber_matrix(config: RunConfig) -> IntMatrix:
    """The fiber matrix alone (zerotest): --L, or the family's matrix for (n, m)."""
    if config.L is not None:
        return parse_matrix(config.L)
    if config.family is Family.SG_S1:
        n = 1
    elif config.family is Family.PZ_T2:
        n = 2
    else:
        n = config.n or 2
    return fiber_matrix(n, config.m)


__all__ = ["Command", "OutputFormat", "RunConfig", "build_base", "build_fiber_matrix", "build_map"]
