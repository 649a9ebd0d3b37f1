import csv
import importlib
import io
import json

import pytest

from common.errors import AlgebraicFailure, PreconditionError
from families.builders import Family, lm_nxn
from families.witness import CSV_COLUMNS, WitnessReport, sweep_to_csv, sweep_to_jsonl, unboundedness_sweep, witness
from polyalg.cyclotomic import zero_iterates

# the package re-exports the witness function under the submodule name
witness_module = importlib.import_module("families.witness")


def test_surface_witness():
    report = witness("sg-tn", 9, 1, n=2, g=2)
    assert report.valid and report.lefschetz_nonzero
    assert report.essential_index == 18
    assert report.claimed_bound == 18 and report.bound_exceeded


def test_pz_witness():
    report = witness("pz-t2", 4, 2, chi=-1)
    assert report.essential_index == 4
    assert report.base == "pz" and report.g_or_label == "G_3,1"


def test_pz_witness_needs_nonzero_chi():
    with pytest.raises(PreconditionError):
        witness("pz-t2", 4, 2, chi=0)


def test_higher_rank_validity_comes_from_cyclotomic_test():
    report = witness("sg-tn", 1, 6, n=3, g=2)
    assert report.valid
    assert report.essential_index == 2


def test_witness_reports_invalid_members():
    # charpoly (x - 1)^5 - x^4 has the primitive 6th roots of unity as roots
    assert zero_iterates(lm_nxn(5, 1)) == frozenset({6})
    report = witness("sg-tn", 1, 6, n=5)
    assert not report.valid
    assert report.lefschetz == 0 and not report.lefschetz_nonzero
    assert report.projection_index is None and report.essential_index is None
    assert not report.bound_exceeded
    assert report.csv_row()[-1] == "false"


def test_invalid_member_is_valid_at_other_iterates():
    report = witness("sg-tn", 1, 1, n=5)
    assert report.valid
    assert report.essential_index == 2


def test_sweep_skips_invalid_members_in_monotonicity_check(caplog):
    with caplog.at_level("WARNING", logger="families.witness"):
        reports = unboundedness_sweep("sg-tn", 6, 3, n=5)
    assert [r.valid for r in reports] == [False, True, True]
    assert [r.essential_index for r in reports] == [None, 4, 6]
    assert sum("root of unity" in rec.getMessage() for rec in caplog.records) == 1


def test_witness_index_is_m_times_two_g_minus_two():
    for g in (2, 4, 6):
        for n in (1, 2, 3):
            family = Family.SG_S1 if n == 1 else Family.SG_TN
            for m in (1, 7, 20):
                assert witness(family, m, 2, n=n, g=g).essential_index == m * (2 * g - 2)


def test_sweep_examples():
    reports = unboundedness_sweep("sg-s1", 1, 10, g=2)
    assert [r.m for r in reports] == list(range(1, 11))
    assert [r.essential_index for r in reports] == list(range(2, 21, 2))
    reports = unboundedness_sweep("sg-tn", 2, 5, n=2, g=3)
    assert [r.essential_index for r in reports] == [4, 8, 12, 16, 20]
    assert unboundedness_sweep("sg-s1", 1, 0) == []


def test_sweep_with_worker_processes_keeps_order():
    serial = unboundedness_sweep("sg-tn", 1, 6, n=2)
    parallel = unboundedness_sweep("sg-tn", 1, 6, n=2, workers=2)
    assert parallel == serial


def test_sweep_detects_non_monotone_indices(monkeypatch):
    def flat(family, k, n, g, chi, m):
        return witness(family, 1, k, n=n, g=g, chi=chi)

    monkeypatch.setattr(witness_module, "_witness_for_m", flat)
    with pytest.raises(AlgebraicFailure):
        unboundedness_sweep("sg-s1", 1, 3)


def test_sweep_csv_and_jsonl():
    reports = unboundedness_sweep("sg-s1", 1, 3, g=2)
    rows = list(csv.reader(io.StringIO(sweep_to_csv(reports))))
    assert rows[0] == CSV_COLUMNS
    assert rows[1] == ["surface", "2", "1", "1", "1", "2", "1", "2", "true"]
    lines = sweep_to_jsonl(reports).splitlines()
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first["essential_index"] == "2"
    assert WitnessReport.model_validate_json(lines[2]) == reports[2]
    assert sweep_to_csv([]).splitlines() == [",".join(CSV_COLUMNS)]
