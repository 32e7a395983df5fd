"""Acceptance suite: every reference table and claim, re-derived exactly.

Each criterion re-runs the corresponding registry checks (agreement is exact;
there are no tolerances anywhere) and prints one PASS/FAIL line.  Two claims
in the source catalog are internally inconsistent with its own tables; the
affected criterion asserts the derived resolution and the recorded deviation
explicitly rather than silently matching either reading (see the fixture
provenance notes).
"""

from __future__ import annotations

import pytest

from prismatroid import checks
from prismatroid.catalog import Catalog

_cache: dict[str, checks.CheckResult] = {}
_cat = Catalog()


def _run(check_id: str) -> checks.CheckResult:
    if check_id not in _cache:
        _cache[check_id] = checks.run_check(check_id, _cat)
    return _cache[check_id]


def _criterion(number: int, label: str, check_ids: list[str]) -> None:
    results = [_run(cid) for cid in check_ids]
    ok = all(r.passed for r in results)
    print(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {label}")
    for r in results:
        assert r.passed, (r.check_id, r.details)


def test_criterion_01_table_1a():
    _criterion(1, "extension classes of P9 and the full rank-4 order", ["table-1a"])


def test_criterion_02_table_1b():
    _criterion(2, "the eight cosimple coextension classes of P9", ["table-1b"])


def test_criterion_03_claim_2():
    _criterion(3, "circuit-cocircuit preservation around P9", ["claim-2"])


def test_criterion_04_table_2a():
    _criterion(4, "the seven extension classes of E5 and their minors", ["table-2a"])


def test_criterion_05_tables_3a_3b():
    _criterion(
        5,
        "extension classes over M(K5-e) and the prism, with stated bijections",
        ["table-3a", "table-3b", "stated-isomorphisms"],
    )


def test_criterion_06_table_4():
    _criterion(6, "coextension classes of D1 and D2", ["table-4"])


def test_criterion_07_table_5():
    _criterion(7, "the prism-free extension chain from E5 to R17", ["table-5"])


def test_criterion_08_r17_extremal():
    _criterion(8, "every 3-connected extension of R17 has a prism minor", ["r17-extremal"])


def test_criterion_09_appendix_tables():
    _criterion(
        9,
        "appendix coextension partitions (14/8/14/4 and 11/18) with witnesses",
        ["table-a1", "table-a2", "claim-5"],
    )


def test_criterion_10_z_family():
    _criterion(10, "the Z family and its deletions carry no wheel-4 minor", ["claim-1"])


def test_criterion_11_internal_4_connectivity():
    result = _run("corollary-3-1")
    assert result.passed, result.details
    details = result.details
    # derived resolution, asserted with the recorded deviations made explicit:
    # the source sentence names B where the computation (anchored by B's
    # deletion-minors and coextension count) shows C, and omits D3 although
    # its 4-element circuit-cocircuit is a non-minimal exact 3-separation
    assert details["chain_not_i4c"] == ["C", "G", "K"]
    assert set(details["chain_not_i4c"]) ^ {"B", "G", "K"} == {"B", "C"}
    assert details["pg_not_i4c"] == [
        "AG32", "S8", "K5e", "P9", "Z4", "D1", "D3", "X2",
    ]
    assert set(details["pg_not_i4c"]) - {
        "K5e", "S8", "AG32", "P9", "Z4", "D1", "X2",
    } == {"D3"}
    print("PASS criterion 11: internal 4-connectivity census "
          "(with the two recorded source-text deviations)")


def test_criterion_12_property_suite():
    _criterion(
        12,
        "duality, connectivity, canonical-form and isomorphism properties",
        ["properties"],
    )
