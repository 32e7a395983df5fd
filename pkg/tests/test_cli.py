from __future__ import annotations

import json

import pytest

from prismatroid.cli import main
from prismatroid.matroid import dumps


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "P9" in out and "R17" in out


def test_catalog_show(capsys):
    assert main(["catalog", "show", "P9"]) == 0
    out = capsys.readouterr().out
    assert "4 9" in out and "01111" in out
    assert main(["catalog", "show", "missing"]) == 2


def test_verify_run(capsys, tmp_path):
    report = tmp_path / "report.json"
    assert main(["verify", "run", "table-3a", "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["schema"] == 1
    assert payload["results"][0]["status"] == "pass"
    assert main(["verify", "run", "bogus-check"]) == 2


def test_minor_query(capsys):
    assert main(["minor", "D1", "P9"]) == 0
    out = capsys.readouterr().out
    assert "verified: True" in out
    assert main(["minor", "Z4", "W4"]) == 1


def test_iso_query(capsys, tmp_path, cat):
    path = tmp_path / "p9copy.matroid"
    path.write_text(dumps(cat.matroid("P9")))
    assert main(["iso", "P9", str(path)]) == 0
    assert main(["iso", "P9", "E5"]) == 1
    with pytest.raises(SystemExit):
        main(["iso", "P9", "definitely-not-a-file"])
