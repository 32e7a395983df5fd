from __future__ import annotations

import json
import shutil

import pytest

from prismatroid import checks
from prismatroid.catalog import Catalog


def test_check_registry_has_all_tables():
    ids = checks.check_ids()
    for required in (
        "table-1a", "table-1b", "claim-2", "table-2a", "table-3a", "table-3b",
        "stated-isomorphisms", "table-4", "table-5", "r17-extremal",
        "table-a1", "table-a2", "claim-5", "claim-1", "corollary-3-1",
        "r10-extensions", "properties",
    ):
        assert required in ids


def test_unknown_check_id():
    with pytest.raises(KeyError):
        checks.run_check("nonexistent")
    with pytest.raises(KeyError):
        checks.run_all(["nonexistent"])


def test_single_check_runs_independently(cat):
    result = checks.run_check("table-3a", cat)
    assert result.passed
    assert result.runtime >= 0


def test_determinism(cat):
    a = checks.run_check("table-1b", cat)
    b = checks.run_check("table-1b", Catalog())
    da = json.dumps(a.details, sort_keys=True, default=str)
    db = json.dumps(b.details, sort_keys=True, default=str)
    assert a.status == b.status and da == db


def test_report_schema(cat):
    results = [checks.run_check("claim-5", cat)]
    payload = checks.report_json(results)
    assert payload["schema"] == 1
    assert payload["summary"]["total"] == 1
    assert payload["results"][0]["check_id"] == "claim-5"
    json.dumps(payload)  # must be serializable


def test_run_all_subset_parallel(cat):
    results = checks.run_all(["table-3a", "claim-5"], jobs=2)
    assert [r.check_id for r in results] == ["table-3a", "claim-5"]
    assert all(r.passed for r in results)


def test_corrupted_r17_fixture_detected(tmp_path, cat):
    # flip one bit of the R17 D block, keeping it simple and full rank, and
    # the extremality check must fail with a diff
    dst = tmp_path / "fixtures"
    shutil.copytree(cat.fixtures_dir, dst)
    path = dst / "matroids" / "r17.matroid"
    text = path.read_text()
    assert "001111110010" in text  # bottom D row
    path.write_text(text.replace("001111110010", "001111110110"))
    bad_cat = Catalog(fixtures_dir=dst)
    bad_r17 = bad_cat.matroid("R17")
    assert bad_r17.rank == 5 and bad_r17.size == 17 and bad_r17.is_simple()
    result = checks.run_check("r17-extremal", bad_cat)
    assert not result.passed
    # the table-5 terminal comparison breaks on the same corruption
    from prismatroid.iso import is_isomorphic

    assert is_isomorphic(bad_cat.matroid("R"), bad_r17) is None


def test_error_status_on_crash(cat):
    checks._CHECKS["_boom"] = lambda cat: 1 / 0
    try:
        result = checks.run_check("_boom", cat)
        assert result.status == "error"
        assert "ZeroDivisionError" in result.details["exception"]
    finally:
        del checks._CHECKS["_boom"]
