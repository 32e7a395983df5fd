from __future__ import annotations

import pytest

from prismatroid.catalog import Catalog, build_family, build_K3p, build_PG32, build_Z, build_wheel
from prismatroid.enumeration import coextend_by, extensions
from prismatroid.gf2 import BitMatrix
from prismatroid.iso import is_isomorphic
from prismatroid.matroid import BinaryMatroid, from_graph


def test_every_entry_passes_expected_block(cat):
    for name in cat.names():
        entry = cat.get(name)
        assert entry.check_expected() == [], name


def test_get_examples(cat):
    r17 = cat.get("R17")
    assert r17.matroid.rank == 5 and r17.matroid.size == 17
    e5 = cat.get("E5")
    assert e5.expected["self_dual"] and e5.expected["internally_4_connected"]
    with pytest.raises(KeyError):
        cat.get("no-such-matroid")


def test_prism_is_dual_of_graphic_k5e(cat):
    k5e_graph = from_graph(
        [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    )
    assert is_isomorphic(cat.matroid("K5e"), k5e_graph) is not None
    assert is_isomorphic(cat.matroid("prism"), k5e_graph.dual()) is not None


def test_build_Z(cat):
    for r in (4, 5, 6):
        z = build_Z(r)
        assert z.size == 2 * r + 1 and z.rank == r
    with pytest.raises(ValueError):
        build_Z(3)
    assert is_isomorphic(cat.matroid("Z4").delete({"c4"}), cat.matroid("AG32"))
    assert is_isomorphic(cat.matroid("Z4").delete({"b4"}), cat.matroid("S8"))


def test_build_family():
    assert build_family("wheel", 4).size == 8
    assert build_family("K33_plus_edges", (3, 1)).size == 10
    assert build_family("PG32_minus", 1).size == 14
    with pytest.raises(ValueError):
        build_family("wheel", 2)
    with pytest.raises(ValueError):
        build_family("K33_plus_edges", (2, 0))
    with pytest.raises(ValueError):
        build_family("PG32_minus", 3)
    with pytest.raises(ValueError):
        build_family("mystery", 1)


def test_pg32_facts(cat):
    pg = cat.matroid("PG32")
    assert pg.size == 15 and pg.rank == 4
    assert extensions(cat.matroid("F7")) == []  # every nonzero 3-vector present
    w3 = build_wheel(3)
    k4 = from_graph([(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)])
    assert is_isomorphic(w3, k4) is not None


def test_k33_facts(cat):
    k33 = cat.matroid("K33")
    assert k33.size == 9 and k33.rank == 5
    # E5 extends M(K33): some single deletion gives it back
    e5 = cat.matroid("E5")
    assert any(is_isomorphic(e5.delete({e}), k33) for e in e5.elements)


def test_glued_fano_resolution(cat):
    # direct two-plane construction: columns supported on rows {1,2,3} union
    # columns supported on rows {1,2,4}, sharing the triangle on rows {1,2}
    plane1 = [c for c in range(1, 16) if not c >> 3]
    plane2 = [(c & 3) | ((c >> 2 & 1) << 3) for c in range(1, 8)]
    cols = sorted(set(plane1) | set(plane2))
    glued = BinaryMatroid(tuple(range(1, len(cols) + 1)), BitMatrix.from_cols(cols, 4))
    assert glued.size == 11 and glued.rank == 4
    triangle = [i + 1 for i, c in enumerate(cols) if c in (1, 2, 3)]
    d1 = cat.matroid("D1")
    for z in triangle:
        assert is_isomorphic(glued.delete({z}), d1) is not None
    entry = cat.get("P_Delta_F7_F7_minus_z")
    assert entry.matroid.rank == 4 and entry.matroid.size == 10
    assert cat.matroid("P_Delta_F7_F7_minus_z_dual").rank == 6


def test_s8_and_ag32_are_the_fano_dual_extensions(cat):
    f7d = cat.matroid("F7dual")
    classes = extensions(f7d, require_simple=True, require_3connected=True)
    assert len(classes) == 2
    reps = [c.representative for c in classes]
    assert sum(is_isomorphic(r, cat.matroid("AG32")) is not None for r in reps) == 1
    assert sum(is_isomorphic(r, cat.matroid("S8")) is not None for r in reps) == 1


def test_s8_extensions(cat):
    # S8 extends to P9 and Z4; AG(3,2) extends only to Z4
    s8 = cat.matroid("S8")
    classes = extensions(s8, require_simple=True, require_3connected=True)
    names = set()
    for c in classes:
        for nm in ("P9", "Z4"):
            if is_isomorphic(c.representative, cat.matroid(nm)):
                names.add(nm)
    assert names == {"P9", "Z4"} and len(classes) == 2
    ag = cat.matroid("AG32")
    ag_classes = extensions(ag, require_simple=True, require_3connected=True)
    assert len(ag_classes) == 1
    assert is_isomorphic(ag_classes[0].representative, cat.matroid("Z4"))


def test_k33p_dual_matches_graph_construction(cat):
    assert is_isomorphic(cat.matroid("K33p_dual"), build_K3p(3, 1).dual())


def test_g_graph_matches_graph_construction(cat):
    prism_plus = from_graph(
        [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6), (1, 5)]
    )
    assert is_isomorphic(cat.matroid("G_graph"), prism_plus)


def test_derived_z_matches_table4_class(cat):
    # the 11-element Z (a restriction of R17) is the single-row coextension
    # class of D2 named Z
    z_row = next(
        c["rows"][0]
        for c in cat.table("table_4")["D2"]["classes"]
        if c.get("name") == "Z"
    )
    bit_labels = cat.table("table_4")["D2"]["bit_labels"]
    d2 = cat.matroid("D2")
    native = [d2.elements[d2.rank + j] for j in range(d2.size - d2.rank)]
    local = "".join(z_row[bit_labels.index(e)] for e in native)
    built = coextend_by(d2, local)
    assert is_isomorphic(built, cat.matroid("Z")) is not None


def test_r17_minus_e_is_z_plus_stated_columns(cat):
    stated = cat.table("r10_extensions")["z_columns"]
    from prismatroid.enumeration import extend_by

    m = cat.matroid("R10")
    for col in stated:
        m = extend_by(m, col)
    assert is_isomorphic(m, cat.matroid("R17_minus_e")) is not None


def test_catalog_rejects_corrupt_fixture(tmp_path, cat):
    import shutil

    dst = tmp_path / "fixtures"
    shutil.copytree(cat.fixtures_dir, dst)
    path = dst / "matroids" / "p9.matroid"
    text = path.read_text().replace("4 9", "4 9").replace("01111", "01110", 1)
    path.write_text(text)
    bad = Catalog(fixtures_dir=dst)
    with pytest.raises(ValueError):
        bad.get("P9")  # the doctored matrix is no longer simple
