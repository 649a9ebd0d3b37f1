"""
families.witness
----------------
Witness reports certifying that fixed point class indices grow without bound in m.
"""

from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from common.errors import AlgebraicFailure, PreconditionError
from families.builders import Family, family_map
from fixtheory.invariants import full_report
from fixtheory.models import ExactInt
from polyalg.cyclotomic import iterate_vanishes, zero_iterates

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["base", "g_or_label", "n", "m", "k", "lefschetz", "projection_index", "essential_index", "valid"]


class WitnessReport(BaseModel):
    """One family member at one iterate. ``valid`` is False when det(I - L^k) = 0."""

    model_config = ConfigDict(frozen=True)

    family: Family
    base: str
    g_or_label: str
    n: int = Field(..., ge=1)
    m: ExactInt = Field(..., ge=1)
    k: ExactInt = Field(..., ge=1)
    chi: ExactInt
    lefschetz: ExactInt
    lefschetz_nonzero: bool
    valid: bool
    projection_index: Optional[ExactInt] = None
    essential_index: Optional[ExactInt] = None
    claimed_bound: ExactInt
    bound_exceeded: bool

    def csv_row(self) -> list[str]:
        def cell(v) -> str:
            return "" if v is None else str(v).lower() if isinstance(v, bool) else str(v)

        return [cell(v) for v in (
            self.base, self.g_or_label, self.n, self.m, self.k,
            self.lefschetz, self.projection_index, self.essential_index, self.valid,
        )]


def witness(family: Family | str, m: int, k: int, n: Optional[int] = None, g: int = 2, chi: Optional[int] = None) -> WitnessReport:
    """Build the family member, decide validity by cyclotomic divisibility, then report."""
    phi = family_map(family, m, n=n, g=g, chi=chi)
    family = Family(family)
    chi = phi.base.euler_characteristic
    if not chi:
        raise PreconditionError(f"witness needs a nonzero Euler characteristic, got {chi}")
    base, g_or_label = ("pz", phi.base.label) if family is Family.PZ_T2 else ("surface", str(g))
    claimed = m * abs(chi)
    common = dict(family=family, base=base, g_or_label=g_or_label, n=phi.fiber_rank, m=m, k=k, chi=chi, claimed_bound=claimed)

    valid = not iterate_vanishes(zero_iterates(phi.L), k)
    if not valid:
        logger.warning("%s m=%d n=%d k=%d: L has a k-th root of unity as eigenvalue", family.value, m, phi.fiber_rank, k)
        return WitnessReport(**common, lefschetz=0, lefschetz_nonzero=False, valid=False, bound_exceeded=False)

    report = full_report(phi, k, chi)
    if report.essential_index != claimed:
        raise AlgebraicFailure(f"{family.value} m={m} k={k}: essential index {report.essential_index} != m|chi| = {claimed}")
    return WitnessReport(
        **common,
        lefschetz=report.lefschetz,
        lefschetz_nonzero=report.lefschetz != 0,
        valid=True,
        projection_index=report.projection_index,
        essential_index=report.essential_index,
        bound_exceeded=report.essential_index >= claimed,
    )


def unboundedness_sweep(
    family: Family | str,
    k: int,
    m_max: int,
    n: Optional[int] = None,
    g: int = 2,
    chi: Optional[int] = None,
    workers: int = 1,
) -> list[WitnessReport]:
    """Witnesses for m = 1..m_max (empty when m_max < 1), ordered by m.

    Raises AlgebraicFailure unless the essential index of the valid members strictly increases.
    """
    job = partial(_witness_for_m, Family(family), k, n, g, chi)
    ms = range(1, m_max + 1)
    if workers > 1 and len(ms) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(job, ms))
    else:
        reports = [job(m) for m in ms]

    indices = [r.essential_index for r in reports if r.valid]
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise AlgebraicFailure(f"essential indices are not strictly increasing in m: {indices}")
    invalid = sum(not r.valid for r in reports)
    logger.info("sweep %s k=%d up to m=%d: %d reports, %d invalid", Family(family).value, k, m_max, len(reports), invalid)
    return reports


def _witness_for_m(family: Family, k: int, n: Optional[int], g: int, chi: Optional[int], m: int) -> WitnessReport:
    return witness(family, m, k, n=n, g=g, chi=chi)


def sweep_to_csv(reports: Iterable[WitnessReport]) -> str:
    buffer = io.StringIO()
    w = csv.writer(buffer, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row())
    return buffer.getvalue()


def sweep_to_jsonl(reports: Sequence[WitnessReport]) -> str:
    return "".join(r.model_dump_json() + "\n" for r in reports)


__all__ = ["CSV_COLUMNS", "WitnessReport", "sweep_to_csv", "sweep_to_jsonl", "unboundedness_sweep", "witness"]
