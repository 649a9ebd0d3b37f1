"""
cli.render
----------
Table, JSON and CSV rendering of command results.

JSON carries every integer as a decimal string. Tables show the same strings, with
``not computed`` where JSON has null.
"""

from __future__ import annotations

import csv
import io
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict
from rich.console import Console
from rich.table import Table

from cli.inputs import OutputFormat
from common.app_setup import print_and_log
from families.witness import WitnessReport, sweep_to_csv, sweep_to_jsonl
from fixtheory.models import ExactInt, InvariantReport

console = Console(highlight=False)


class ConjugationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma_prime_index: ExactInt
    samples: int
    failures: int
    passed: bool


class ZeroTestReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    charpoly: str
    orders: list[ExactInt]
    summary: str
    k_max: int
    vanishing: list[ExactInt]


def zero_summary(orders: Sequence[int]) -> str:
    if not orders:
        return "none; det(I-L^k) != 0 for all k"
    if 1 in orders:
        return "d=1; vanishing at all k"
    ds = sorted(orders)
    return f"d={','.join(map(str, ds))}; vanishing at k in {' u '.join(f'{d}Z' for d in ds)}"


def _cell(value) -> str:
    if value is None:
        return "not computed"
    if isinstance(value, list):
        return ", ".join(map(str, value)) or "-"
    return str(value).lower() if isinstance(value, bool) else str(value)


def _field_table(title: str, model: BaseModel) -> Table:
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("field", no_wrap=True)
    table.add_column("value", overflow="fold")
    for name, value in model.model_dump(mode="json").items():
        table.add_row(name, _cell(value))
    return table


def _single_csv(model: BaseModel) -> str:
    data = model.model_dump(mode="json")
    buffer = io.StringIO()
    w = csv.writer(buffer, lineterminator="\n")
    w.writerow(list(data))
    w.writerow([_cell(v) if v is not None else "" for v in data.values()])
    return buffer.getvalue()


def render_model(model: BaseModel, fmt: OutputFormat, title: str) -> None:
    if fmt is OutputFormat.json:
        print_and_log(model.model_dump_json())
    elif fmt is OutputFormat.csv:
        print_and_log(_single_csv(model), end="")
    else:
        console.print(_field_table(title, model))


def render_invariants(report: InvariantReport, fmt: OutputFormat, title: str = "invariants") -> None:
    render_model(report, fmt, title)


def render_sweep(reports: Sequence[WitnessReport], fmt: OutputFormat, title: Optional[str] = None) -> None:
    if fmt is OutputFormat.json:
        print_and_log(sweep_to_jsonl(reports), end="")
    elif fmt is OutputFormat.csv:
        print_and_log(sweep_to_csv(reports), end="")
    else:
        table = Table(title=title or "unboundedness sweep", header_style="bold")
        for column in ("m", "k", "lefschetz", "projection_index", "essential_index", "valid"):
            table.add_column(column, overflow="fold", justify="right")
        for r in reports:
            table.add_row(*(_cell(getattr(r, c)) for c in ("m", "k", "lefschetz", "projection_index", "essential_index", "valid")))
        console.print(table)


__all__ = [
    "ConjugationReport",
    "ZeroTestReport",
    "console",
    "render_invariants",
    "render_model",
    "render_sweep",
    "zero_summary",
]
