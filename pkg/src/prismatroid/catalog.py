"""Registry of every named matroid in the catalog.

Displayed reference matrices live as fixture files (transcribed once, with
provenance comments); family members and derived matroids are built by their
defining recipes.  Every entry is validated against its expected facts (rank,
size, simplicity, and stated flags) the first time it is requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

from .connect import is_internally_4_connected
from .gf2 import BitMatrix
from .iso import is_isomorphic
from .matroid import BinaryMatroid, from_graph, from_standard_form, loads
from .enumeration import extend_by, coextend_by


@dataclass
class CatalogEntry:
    name: str
    matroid: BinaryMatroid
    provenance: str
    expected: dict = field(default_factory=dict)

    def check_expected(self) -> list[str]:
        """Mismatches between the matroid and its expected block (empty = ok)."""
        bad = []
        m = self.matroid
        exp = self.expected
        if "rank" in exp and m.rank != exp["rank"]:
            bad.append(f"rank {m.rank} != {exp['rank']}")
        if "size" in exp and m.size != exp["size"]:
            bad.append(f"size {m.size} != {exp['size']}")
        if "simple" in exp and m.is_simple() != exp["simple"]:
            bad.append("simplicity mismatch")
        if "self_dual" in exp:
            if (is_isomorphic(m, m.dual()) is not None) != exp["self_dual"]:
                bad.append("self-duality mismatch")
        if "internally_4_connected" in exp:
            if is_internally_4_connected(m) != exp["internally_4_connected"]:
                bad.append("internal 4-connectivity mismatch")
        return bad


def build_Z(r: int) -> BinaryMatroid:
    """Rank-r member of the Z family on 2r+1 elements (1..r, b1..br, cr).

    D block: r columns with zeros on the diagonal and ones elsewhere, then an
    all-ones column.
    """
    if r < 4:
        raise ValueError("Z_r is defined for r >= 4")
    rows = tuple(((((1 << r) - 1) ^ (1 << i)) | (1 << r)) for i in range(r))
    labels = (
        list(range(1, r + 1)) + [f"b{i}" for i in range(1, r + 1)] + [f"c{r}"]
    )
    return from_standard_form(BitMatrix(r, r + 1, rows), labels)


def build_wheel(r: int) -> BinaryMatroid:
    """Cycle matroid of the wheel with r spokes (rim 1..r, hub 0)."""
    if r < 3:
        raise ValueError("wheels need r >= 3")
    rim = [(i, i % r + 1) for i in range(1, r + 1)]
    spokes = [(0, i) for i in range(1, r + 1)]
    return from_graph(rim + spokes)


def build_K3p(p: int, extra_edges: int = 0) -> BinaryMatroid:
    """Cycle matroid of K_{3,p} with 0..3 extra edges in the 3-vertex class."""
    if p < 3:
        raise ValueError("K_{3,p} needs p >= 3")
    if not 0 <= extra_edges <= 3:
        raise ValueError("extra edges must be 0..3")
    left = [f"l{i}" for i in range(3)]
    edges = [(l, f"r{j}") for l in left for j in range(p)]
    extras = [(left[0], left[1]), (left[0], left[2]), (left[1], left[2])]
    return from_graph(edges + extras[:extra_edges])


def build_PG32(deleted: int = 0) -> BinaryMatroid:
    """PG(3,2) (all 15 nonzero length-4 columns) minus 0..2 points."""
    if not 0 <= deleted <= 2:
        raise ValueError("only 0..2 deletions arise")
    cols = [1, 2, 4, 8] + sorted(set(range(1, 16)) - {1, 2, 4, 8})
    m = BinaryMatroid(tuple(range(1, 16)), BitMatrix.from_cols(cols, 4))
    return m.delete(set(range(16 - deleted, 16)))


def build_family(kind: str, param) -> BinaryMatroid:
    """Dispatcher over the graphic/projective families.

    kind: "wheel" (param r), "K33_plus_edges" (param (p, extra)), or
    "PG32_minus" (param = number of deleted points).
    """
    if kind == "wheel":
        return build_wheel(param)
    if kind == "K33_plus_edges":
        p, extra = param
        return build_K3p(p, extra)
    if kind == "PG32_minus":
        return build_PG32(param)
    raise ValueError(f"unknown family kind: {kind}")


def _fano() -> BinaryMatroid:
    cols = [1, 2, 4] + sorted(set(range(1, 8)) - {1, 2, 4})
    return BinaryMatroid(tuple(range(1, 8)), BitMatrix.from_cols(cols, 3))


def _ag32() -> BinaryMatroid:
    # affine cube: columns (1, x) over all x in GF(2)^3, basis points first
    # so the representation reduces to [I|D]
    xs = [0, 1, 2, 4, 3, 5, 6, 7]
    return BinaryMatroid(
        tuple(range(1, 9)), BitMatrix.from_cols([8 | x for x in xs], 4)
    )


class Catalog:
    """Lazy, validating registry of the named matroids."""

    def __init__(self, fixtures_dir: Path | None = None):
        if fixtures_dir is None:
            fixtures_dir = Path(str(resources.files("prismatroid") / "fixtures"))
        self.fixtures_dir = Path(fixtures_dir)
        self._cache: dict[str, CatalogEntry] = {}
        self._tables: dict[str, dict] = {}
        self._registry = _build_registry()

    # -- data access -----------------------------------------------------

    def table(self, name: str) -> dict:
        """Parsed table fixture (e.g. "table_1a")."""
        if name not in self._tables:
            path = self.fixtures_dir / "tables" / f"{name}.json"
            self._tables[name] = json.loads(path.read_text())
        return self._tables[name]

    def _load_file(self, stem: str) -> BinaryMatroid:
        return loads((self.fixtures_dir / "matroids" / f"{stem}.matroid").read_text())

    def names(self) -> list[str]:
        return sorted(self._registry)

    def get(self, name: str) -> CatalogEntry:
        if name not in self._registry:
            raise KeyError(f"unknown catalog name: {name}")
        if name not in self._cache:
            build, provenance, expected = self._registry[name]
            entry = CatalogEntry(name, build(self), provenance, expected)
            bad = entry.check_expected()
            if bad:
                raise ValueError(f"catalog entry {name} fails expected block: {bad}")
            self._cache[name] = entry
        return self._cache[name]

    def matroid(self, name: str) -> BinaryMatroid:
        return self.get(name).matroid


def _build_registry() -> dict[str, tuple[Callable, str, dict]]:
    reg: dict[str, tuple[Callable, str, dict]] = {}

    def add(name, build, provenance, **expected):
        reg[name] = (build, provenance, expected)

    def fixt(stem):
        return lambda cat: cat._load_file(stem)

    def ext(parent, col):
        return lambda cat: extend_by(cat.matroid(parent), col)

    def coext(parent, row):
        return lambda cat: coextend_by(cat.matroid(parent), row)

    # core displayed representations
    add("prism", fixt("prism"), "reference representation of the rank-5 prism cycle matroid",
        rank=5, size=9, simple=True)
    add("P9", fixt("p9"), "reference representation; the rank-4 3-decomposer",
        rank=4, size=9, simple=True, internally_4_connected=False)
    add("E5", fixt("e5"), "self-dual splitter; single-element extension of M(K33)",
        rank=5, size=10, simple=True, self_dual=True, internally_4_connected=True)
    add("R17", fixt("r17"), "extremal rank-5 prism-free matroid",
        rank=5, size=17, simple=True)
    add("K5e", fixt("k5e"), "cycle matroid of K5 minus an edge",
        rank=4, size=9, simple=True)

    # extensions of P9 (table_1a level 1)
    add("D1", fixt("d1"), "extension of P9 by column 1110",
        rank=4, size=10, simple=True, internally_4_connected=False)
    add("D2", fixt("d2"), "extension of P9 by column 1001",
        rank=4, size=10, simple=True, internally_4_connected=True)
    add("D3", fixt("d3"), "extension of P9 by column 0011; keeps the 4-element "
        "circuit-cocircuit 1,2,5,6, hence not internally 4-connected",
        rank=4, size=10, simple=True, internally_4_connected=False)
    add("X1", fixt("x1"), "extension of D2 by column 1010", rank=4, size=11, simple=True)
    add("X2", ext("D1", "0011"), "extension of D1 by column 0011",
        rank=4, size=11, simple=True, internally_4_connected=False)
    add("X3", fixt("x3"), "extension of D2 by column 0011", rank=4, size=11, simple=True)
    add("Y1", ext("X1", "0011"), "extension of X1 by column 0011", rank=4, size=12, simple=True)
    add("Y2", ext("X1", "1110"), "extension of X1 by column 1110", rank=4, size=12, simple=True)

    # coextensions of P9 (table_1b); representative = first row of each class
    def coext_1b(cls_name):
        def build(cat):
            classes = cat.table("table_1b")["classes"]
            row = next(rows[0] for name, rows in classes if name == cls_name)
            return coextend_by(cat.matroid("P9"), row)
        return build

    for nm, flags in [
        ("E1", {"self_dual": True}), ("E2", {"self_dual": True}),
        ("E3", {"self_dual": True}), ("E4", {"self_dual": True}),
        ("E6", {}), ("E6star", {}), ("E7", {}),
    ]:
        add(nm, coext_1b(nm), f"coextension class {nm} of P9 (first listed row)",
            rank=5, size=10, simple=True, **flags)

    # Table 3a second representations
    add("K5", fixt("k5"), "cycle matroid of K5; extension of M(K5-e) by 0101",
        rank=4, size=10, simple=True)
    add("D2_k5e", fixt("d2_k5e"), "second representation of D2 over M(K5-e)",
        rank=4, size=10, simple=True)
    add("D3_k5e", fixt("d3_k5e"), "second representation of D3 over M(K5-e)",
        rank=4, size=10, simple=True)

    # Table 3b: extensions of the prism
    add("G_graph", fixt("g_graph"), "prism graph plus an edge (extension by 00101)",
        rank=5, size=10, simple=True)
    add("K33p_dual", fixt("k33p_dual"), "dual of M(K33 plus an edge) (extension by 01001)",
        rank=5, size=10, simple=True)
    add("E4_prism", fixt("e4_prism"), "second representation of E4 over the prism",
        rank=5, size=10, simple=True, self_dual=True)
    add("E6_prism", fixt("e6_prism"), "second representation of E6 over the prism",
        rank=5, size=10, simple=True)
    add("E7star_prism", fixt("e7star_prism"),
        "second representation of the dual of E7, over the prism",
        rank=5, size=10, simple=True)

    # extensions of E5 and the prism-free chain (table_5)
    add("A", fixt("a"), "extension of E5 by column 00101", rank=5, size=11, simple=True)
    add("B", fixt("b"), "extension of E5 by column 10011; the non-Z extension of R10",
        rank=5, size=11, simple=True)
    add("C", fixt("c"), "extension of E5 by column 11001", rank=5, size=11, simple=True)

    def chain(cls_name):
        def build(cat):
            parent, col = cat.table("table_5")["construction"][cls_name]
            return extend_by(cat.matroid(parent), col)
        return build

    for nm, size in [("D", 12), ("E", 12), ("F", 12), ("G", 12),
                     ("H", 13), ("I", 13), ("J", 13), ("K", 13),
                     ("L", 14), ("M", 14), ("O", 15), ("P", 15), ("Q", 16)]:
        add(nm, chain(nm), f"prism-free chain member {nm} (extension path from E5)",
            rank=5, size=size, simple=True)
    add("R", chain("R"), "prism-free chain terminus; isomorphic to R17",
        rank=5, size=17, simple=True)

    # restrictions of R17
    add("R10", lambda cat: cat.matroid("R17").restrict(range(1, 11)),
        "first ten columns of R17 (the regular splitter)", rank=5, size=10, simple=True)
    add("Z", lambda cat: cat.matroid("R17").restrict(range(1, 12)),
        "first eleven columns of R17", rank=5, size=11, simple=True)
    add("R17_minus_e", lambda cat: cat.matroid("R17").delete({17}),
        "R17 minus its final column", rank=5, size=16, simple=True)
    add("Y", fixt("y"), "extension of Z by column 01101", rank=5, size=12, simple=True)

    # projective and affine fixtures
    add("F7", lambda cat: _fano(), "all seven nonzero length-3 columns",
        rank=3, size=7, simple=True)
    add("F7dual", lambda cat: _fano().dual(), "dual of F7",
        rank=4, size=7, simple=True)
    add("AG32", lambda cat: _ag32(), "affine cube: columns (1, x) over GF(2)^3",
        rank=4, size=8, simple=True, internally_4_connected=False)
    add("S8", lambda cat: extend_by(cat.matroid("F7dual"), "0011"),
        "the 3-connected single-element extension of F7* not isomorphic to AG(3,2)",
        rank=4, size=8, simple=True, internally_4_connected=False)
    add("PG32", lambda cat: build_PG32(0), "rank-4 binary projective geometry",
        rank=4, size=15, simple=True)
    add("PG32_minus_e", lambda cat: build_PG32(1), "PG(3,2) minus a point",
        rank=4, size=14, simple=True)
    add("PG32_minus_ef", lambda cat: build_PG32(2), "PG(3,2) minus two points",
        rank=4, size=13, simple=True)

    # graphic families
    add("K33", lambda cat: build_K3p(3, 0), "cycle matroid of K33",
        rank=5, size=9, simple=True)
    add("K33dual", lambda cat: build_K3p(3, 0).dual(), "cocycle matroid of K33",
        rank=4, size=9, simple=True)
    add("K33p", lambda cat: build_K3p(3, 1), "cycle matroid of K33 plus an edge",
        rank=5, size=10, simple=True)
    add("W3", lambda cat: build_wheel(3), "wheel with three spokes (= K4)",
        rank=3, size=6, simple=True)
    add("W4", lambda cat: build_wheel(4), "wheel with four spokes",
        rank=4, size=8, simple=True)
    add("W5", lambda cat: build_wheel(5), "wheel with five spokes",
        rank=5, size=10, simple=True)

    # Z family instances
    for r in (4, 5, 6):
        add(f"Z{r}", (lambda rr: (lambda cat: build_Z(rr)))(r),
            f"Z family member of rank {r} on {2 * r + 1} elements",
            rank=r, size=2 * r + 1, simple=True)

    # the generalized-parallel-connection exception, realized through D1:
    # the rank-4 matroid is isomorphic to D1 (verified against the direct
    # two-plane construction), so its dual is the rank-6 exceptional matroid
    add("P_Delta_F7_F7_minus_z", lambda cat: cat.matroid("D1"),
        "two Fano planes glued along a triangle, one triangle element deleted "
        "(isomorphic to D1)", rank=4, size=10, simple=True)
    add("P_Delta_F7_F7_minus_z_dual",
        lambda cat: cat.matroid("D1").dual(),
        "dual of the glued-Fano matroid; the rank-6 exceptional matroid",
        rank=6, size=10)

    return reg


_default: Catalog | None = None


def default_catalog() -> Catalog:
    """Shared read-only catalog instance."""
    global _default
    if _default is None:
        _default = Catalog()
    return _default
