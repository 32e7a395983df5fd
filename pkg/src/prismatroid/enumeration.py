"""Single-element extension/coextension enumeration, minor search, and the
circuit/cocircuit preservation criterion used to certify 3-decomposers.

Extension classes are grouped up to isomorphism.  Candidates are bucketed by
a cheap complete-code invariant (the weight enumerator of the cocircuit
space) before any full isomorphism work, and each class carries the
canonical-form fingerprint of its representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .connect import is_3_connected, is_k_separation, lambda_
from .gf2 import BitMatrix
from .iso import CanonicalForm, canonical_form, is_isomorphic, verify_map
from .matroid import BinaryMatroid, Label, from_standard_form


def _col_str(v: int, r: int) -> str:
    """Column int as the top-to-bottom bit string used in the tables."""
    return "".join("1" if (v >> i) & 1 else "0" for i in range(r))


def col_int(s: str) -> int:
    """Parse a column/row bit string (top-to-bottom) into an int."""
    return int(s[::-1], 2) if s else 0


@dataclass(frozen=True)
class ExtensionClass:
    """An isomorphism class of single-element extensions of one parent.

    `columns` lists every adjoined column (or coextension row) producing a
    matroid isomorphic to `representative`, as bit strings.
    """

    representative: BinaryMatroid
    columns: tuple[str, ...]
    fingerprint: CanonicalForm
    name: str | None = None

    def with_name(self, name: str) -> "ExtensionClass":
        return ExtensionClass(self.representative, self.columns, self.fingerprint, name)


def _weight_signature(m: BinaryMatroid) -> tuple[int, ...]:
    """Sorted weight enumerator of the cocircuit space; an iso invariant."""
    return tuple(sorted(v.bit_count() for v in m.row_space_masks()))


def _standard_presentation(m: BinaryMatroid) -> tuple[int, int, list[int]]:
    """(rank, corank, D columns) of the matroid's reduced representation.

    Requires the reduced form to be [I|D]; catalog matroids and everything
    the enumerators construct are presented this way.
    """
    red = m.reduced
    pivots = [(row & -row).bit_length() - 1 for row in red.rows]
    if pivots != list(range(m.rank)):
        raise ValueError("matroid must be presented in standard form [I|D]")
    r = m.rank
    d_cols = [red.col(j) for j in range(r, m.size)]
    return r, m.size - r, d_cols


def _int_labels(m: BinaryMatroid) -> bool:
    return all(isinstance(e, int) for e in m.elements) and list(m.elements) == list(
        range(1, m.size + 1)
    )


def _group_candidates(
    cands: list[tuple[int, BinaryMatroid]], r: int
) -> list[ExtensionClass]:
    """Partition candidate matroids into classes keyed by canonical form."""
    classes: dict[bytes, tuple[BinaryMatroid, CanonicalForm, list[int]]] = {}
    for v, mat in cands:
        form = canonical_form(mat)
        hit = classes.get(form.fingerprint)
        if hit is None:
            classes[form.fingerprint] = (mat, form, [v])
        else:
            hit[2].append(v)
    out = [
        ExtensionClass(rep, tuple(sorted(_col_str(v, r) for v in vals)), form)
        for rep, form, vals in classes.values()
    ]
    out.sort(key=lambda c: c.columns[0])
    return out


def extend_by(m: BinaryMatroid, col: int | str) -> BinaryMatroid:
    """Adjoin one column (int or top-to-bottom bit string) to m.

    The new element is appended with label n+1 (or a fresh label when the
    parent is not labeled 1..n).
    """
    r, _, _ = _standard_presentation(m)
    v = col_int(col) if isinstance(col, str) else col
    if v >> r:
        raise ValueError("column does not fit the rank")
    new_label = m.size + 1 if _int_labels(m) else _fresh_label(m.elements)
    red = m.reduced
    rows = tuple(red.rows[i] | (((v >> i) & 1) << m.size) for i in range(r))
    return BinaryMatroid(m.elements + (new_label,), BitMatrix(r, m.size + 1, rows))


def coextend_by(m: BinaryMatroid, row: int | str) -> BinaryMatroid:
    """Append one row (int or bit string indexed by the D columns) to m.

    Given [I_r|D] the result is [I_{r+1}|D'] with the new element as column
    r+1; a 1..n-labeled parent is relabeled 1..n+1 positionally so old
    non-basis element x becomes x+1 (the usual coextension index shift).
    """
    r, k, d_cols = _standard_presentation(m)
    w = col_int(row) if isinstance(row, str) else row
    if w >> k:
        raise ValueError("row does not fit the corank")
    if _int_labels(m):
        labels: tuple = tuple(range(1, m.size + 2))
    else:
        labels = m.elements[:r] + (_fresh_label(m.elements),) + m.elements[r:]
    d_rows = tuple(
        sum(((d_cols[j] >> i) & 1) << j for j in range(k)) for i in range(r)
    ) + (w,)
    return from_standard_form(BitMatrix(r + 1, k, d_rows), labels)


def extensions(
    m: BinaryMatroid,
    require_simple: bool = True,
    require_3connected: bool = False,
) -> list[ExtensionClass]:
    """Isomorphism classes of single-element extensions of m.

    Candidate columns are the nonzero vectors of GF(2)^r, minus existing
    columns when simplicity is required (the zero column and duplicates are
    admitted only with require_simple=False).  Classes jointly cover every
    candidate that survives the filters.
    """
    if m.rank == 0:
        raise ValueError("cannot extend a rank-0 matroid")
    r, _, d_cols = _standard_presentation(m)
    existing = {1 << i for i in range(r)} | set(d_cols)
    if require_simple:
        cands = [v for v in range(1, 1 << r) if v not in existing]
    else:
        cands = list(range(1 << r))
    parent_3conn = is_3_connected(m) if require_3connected else False
    picked: list[tuple[int, BinaryMatroid]] = []
    for v in cands:
        mat = extend_by(m, v)
        if require_3connected and not _is_3connected_child(mat, parent_3conn):
            continue
        picked.append((v, mat))
    return _group_candidates(picked, r)


def coextensions(
    m: BinaryMatroid,
    require_cosimple: bool = True,
    require_3connected: bool = False,
) -> list[ExtensionClass]:
    """Isomorphism classes of single-element coextensions of m.

    Built by the row-append mechanism: given [I_r|D], a candidate row w is
    appended to D and the new element becomes the (r+1)-st column of the new
    standard form [I_{r+1}|D'].  When the parent is labeled 1..n the result
    is labeled 1..n+1 positionally, so old non-basis element x becomes x+1
    (the index shift used by all the table references); otherwise old labels
    are kept and the new element gets a fresh label.

    Equals the dual image of extensions(dual(m)), class for class.
    """
    _, k, _ = _standard_presentation(m)
    parent_3conn = is_3_connected(m) if require_3connected else False
    picked: list[tuple[int, BinaryMatroid]] = []
    for w in range(1 << k):
        mat = coextend_by(m, w)
        if require_cosimple and not mat.is_cosimple():
            continue
        if require_3connected and not _is_3connected_child(mat, parent_3conn):
            continue
        picked.append((w, mat))
    return _group_candidates(picked, k)


def _fresh_label(labels: Sequence[Label]) -> Label:
    ints = [e for e in labels if isinstance(e, int)]
    return (max(ints) + 1) if ints else f"x{len(labels) + 1}"


def _is_3connected_child(child: BinaryMatroid, parent_3conn: bool) -> bool:
    """3-connectedness of a single-element extension/coextension.

    For a 3-connected parent with >= 4 elements this reduces to the child
    being simple and cosimple: any (>=3, >=3) 2-separation of the child
    restricts to a 2-separation of the parent.  Falls back to the full scan
    when the parent is not 3-connected.
    """
    if parent_3conn and child.size >= 5:
        return child.is_simple() and child.is_cosimple()
    return is_3_connected(child)


def coextension_shift(parent: BinaryMatroid, s: Iterable[int]) -> frozenset:
    """Image of a label set of the parent inside a coextension (1..n labels)."""
    r = parent.rank
    return frozenset(x if x <= r else x + 1 for x in s)


# -- minor containment ------------------------------------------------------


@dataclass(frozen=True)
class MinorWitness:
    """Certified minor embedding: contract, delete, then apply iso."""

    contract_set: frozenset
    delete_set: frozenset
    iso: dict

    def verify(self, m: BinaryMatroid, target: BinaryMatroid) -> bool:
        if self.contract_set & self.delete_set:
            return False
        minor = m.contract(self.contract_set).delete(self.delete_set)
        if minor.size != target.size:
            return False
        return verify_map(minor, target, self.iso)


def has_minor(m: BinaryMatroid, target: BinaryMatroid) -> MinorWitness | None:
    """Search for a minor of m isomorphic to target; verified witness or None.

    Contractions range over independent sets of size r(m) - r(target) only
    (contracting dependent elements duplicates a deletion), followed by a
    restriction scan screened by the cocircuit-space weight enumerator.
    """
    c = m.rank - target.rank
    d = m.size - target.size - c
    if c < 0 or d < 0:
        return None
    target_sig = _weight_signature(target)
    t_size = target.size
    for cset in combinations(m.elements, c):
        if not m.is_independent(cset):
            continue
        mc = m.contract(cset)
        rows = np.array(mc.row_space_masks(), dtype=np.int64)
        keep_sets = list(combinations(range(mc.size), t_size))
        keep_masks = np.fromiter(
            (sum(1 << p for p in ks) for ks in keep_sets),
            dtype=np.int64,
            count=len(keep_sets),
        )
        counts = np.bitwise_count(keep_masks[:, None] & rows[None, :])
        counts.sort(axis=1)
        good = np.nonzero((counts == np.array(target_sig)).all(axis=1))[0]
        for gi in good:
            ks = keep_sets[int(gi)]
            sub = mc.restrict(mc.elements[p] for p in ks)
            witness = is_isomorphic(sub, target)
            if witness is not None:
                delete_set = frozenset(mc.elements) - frozenset(sub.elements)
                w = MinorWitness(frozenset(cset), delete_set, witness)
                return w
    return None


# -- decomposer criterion -----------------------------------------------------


@dataclass(frozen=True)
class PreservationRow:
    kind: str  # "extension" | "coextension"
    columns: tuple[str, ...]
    image: frozenset
    passes_filter: bool
    circuit: bool
    cocircuit: bool
    name: str | None = None

    @property
    def preserved(self) -> bool:
        return self.circuit and self.cocircuit


@dataclass(frozen=True)
class DecomposerReport:
    precondition_failures: tuple[str, ...]
    rows: tuple[PreservationRow, ...]
    verdict: bool

    @property
    def ok(self) -> bool:
        return not self.precondition_failures and self.verdict


def decomposer_criterion(
    n: BinaryMatroid,
    a: Iterable[Label],
    class_filter: Callable[[BinaryMatroid], bool] | None = None,
) -> DecomposerReport:
    """Check the separation-carrying criterion on a 4-element circuit-cocircuit.

    Requires (a, E-a) to be a non-minimal exact 3-separation of n with a both
    a circuit and a cocircuit and |E(n)| >= 8.  Every 3-connected
    single-element extension and coextension passing class_filter is then
    tested for whether the image of a stays a circuit and a cocircuit; the
    verdict is True iff all of them preserve both.
    """
    a = frozenset(a)
    failures = []
    if len(a) != 4:
        failures.append("side must have exactly 4 elements")
    if n.size < 8:
        failures.append("matroid must have at least 8 elements")
    if not failures:
        if not n.is_circuit(a):
            failures.append("side is not a circuit")
        if not n.is_cocircuit(a):
            failures.append("side is not a cocircuit")
        if not (is_k_separation(n, a, 3) and lambda_(n, a) == 2):
            failures.append("side is not an exact 3-separation")
        elif min(len(a), n.size - len(a)) < 4:
            failures.append("separation is minimal")
    if failures:
        return DecomposerReport(tuple(failures), (), False)
    if not _int_labels(n):
        raise ValueError("decomposer criterion expects 1..n labels")
    rows: list[PreservationRow] = []
    for kind, classes, build in (
        ("extension", extensions(n, True, require_3connected=True), extend_by),
        ("coextension", coextensions(n, True, require_3connected=True), coextend_by),
    ):
        for cls in classes:
            image = a if kind == "extension" else coextension_shift(n, a)
            # the criterion quantifies over extensions, not classes: every
            # adjoined column/row must preserve the circuit and cocircuit
            members = [build(n, col) for col in cls.columns]
            rows.append(
                PreservationRow(
                    kind=kind,
                    columns=cls.columns,
                    image=image,
                    passes_filter=(
                        class_filter(cls.representative) if class_filter else True
                    ),
                    circuit=all(mm.is_circuit(image) for mm in members),
                    cocircuit=all(mm.is_cocircuit(image) for mm in members),
                )
            )
    verdict = all(row.preserved for row in rows if row.passes_filter)
    return DecomposerReport((), tuple(rows), verdict)


# -- bounded 3-connected growth -------------------------------------------------


@dataclass(frozen=True)
class SplitterChain:
    """3-connected growth chain; coarse steps add <=3 elements on a rank step.

    Consecutive matroids of `moves` differ by one single-element extension or
    coextension; `steps` groups the rank-raising runs the way the growth
    discipline does (up to two extensions absorbed into the following
    coextension, whose three fresh elements then form a triad).
    """

    moves: tuple[BinaryMatroid, ...]
    kinds: tuple[str, ...]  # per move: "ext" | "coext"

    @property
    def steps(self) -> tuple[BinaryMatroid, ...]:
        # A coextension closes a rank-raising step, absorbing the (at most
        # two) extensions since the previous one; once the final rank is
        # reached every extension is its own step.
        target = self.moves[-1].rank
        out = [self.moves[0]]
        for mat, kind in zip(self.moves[1:], self.kinds):
            if kind == "coext" or mat.rank == target:
                out.append(mat)
        return tuple(out)

    @property
    def last(self) -> BinaryMatroid:
        return self.moves[-1]

    def validate(self) -> bool:
        """Check the growth-discipline invariants along the chain.

        Walks the single-element moves, tracking the labels of extension
        elements through coextension index shifts: at most two extensions may
        be pending before a coextension, and a coextension that closes a
        3-element step must make the three fresh elements a triad.
        """
        if len(self.moves) != len(self.kinds) + 1:
            return False
        target = self.moves[-1].rank
        if not is_3_connected(self.moves[0]):
            return False
        prev = self.moves[0]
        pending: list = []
        for mat, kind in zip(self.moves[1:], self.kinds):
            if kind == "ext":
                if mat.rank == target:
                    if pending or not is_3_connected(mat):
                        return False
                else:
                    pending.append(mat.elements[-1])
                    if len(pending) > 2:
                        return False
            else:
                r = prev.rank
                if _int_labels(prev):
                    pending = [x + 1 if x > r else x for x in pending]
                fresh = set(pending) | {mat.elements[r]}
                if len(fresh) != len(pending) + 1:
                    return False
                if len(fresh) == 3 and not mat.is_cocircuit(fresh):
                    return False
                if not is_3_connected(mat):
                    return False
                pending = []
            prev = mat
        return not pending


def grow_3connected(
    seed: BinaryMatroid,
    max_rank: int,
    max_size: int,
    forbidden: Sequence[BinaryMatroid] = (),
) -> list[SplitterChain]:
    """Exhaustively grow 3-connected extensions/coextensions within bounds.

    Applies the growth discipline (at most two consecutive extensions before
    a coextension while rank is still rising; a coextension closing a
    3-element step must make its fresh elements a triad), prunes any class
    containing a forbidden minor, and dedups by canonical form.  Returns one
    witness chain per reachable isomorphism class, the seed included.
    """
    if max_size > 20 or max_rank > 20:
        raise ValueError("growth bounds beyond the supported universe")
    if not is_3_connected(seed):
        raise ValueError("seed must be 3-connected")
    if any(has_minor(seed, f) for f in forbidden):
        return []
    from collections import deque

    seed_fp = canonical_form(seed)
    chains: dict[bytes, SplitterChain] = {
        seed_fp.fingerprint: SplitterChain((seed,), ())
    }
    best_run: dict[bytes, int] = {seed_fp.fingerprint: 0}
    queue = deque([(seed, (seed,), (), 0)])
    while queue:
        cur, moves, kinds, run = queue.popleft()
        rank_phase = cur.rank < max_rank
        # extensions
        if cur.size + 1 <= max_size and (not rank_phase or run < 2):
            for cls in extensions(cur, require_simple=True, require_3connected=True):
                _admit(
                    cls.representative, moves, kinds, "ext",
                    run + 1 if rank_phase else 0,
                    chains, best_run, queue, forbidden,
                )
        # coextensions
        if rank_phase and cur.size + 1 <= max_size:
            for cls in coextensions(
                cur, require_cosimple=True, require_3connected=True
            ):
                nxt = cls.representative
                if run == 2:
                    # a coextension closing a 3-element step: the two fresh
                    # extension elements plus the new one must form a triad
                    base = moves[-3]
                    if _int_labels(cur):
                        image = coextension_shift(cur, base.elements)
                    else:
                        image = set(base.elements)
                    fresh = set(nxt.elements) - set(image)
                    if len(fresh) != 3 or not nxt.is_cocircuit(fresh):
                        continue
                _admit(nxt, moves, kinds, "coext", 0, chains, best_run, queue, forbidden)
    return sorted(
        chains.values(),
        key=lambda ch: (ch.last.size, ch.last.rank, canonical_form(ch.last).hex),
    )


def _admit(nxt, moves, kinds, kind, run, chains, best_run, queue, forbidden):
    fp = canonical_form(nxt).fingerprint
    prev = best_run.get(fp)
    if prev == -1:  # already known to contain a forbidden minor
        return
    if prev is None:
        if any(has_minor(nxt, f) for f in forbidden):
            best_run[fp] = -1
            return
        chains[fp] = SplitterChain(moves + (nxt,), kinds + (kind,))
    elif prev <= run:
        return
    best_run[fp] = run
    queue.append((nxt, moves + (nxt,), kinds + (kind,), run))


def classes_payload(parent: str, classes: Sequence[ExtensionClass]) -> dict:
    """JSON-ready partition: {parent, classes: [{name, columns, fingerprint}]}."""
    return {
        "parent": parent,
        "classes": [
            {
                "name": cls.name,
                "columns": list(cls.columns),
                "fingerprint": cls.fingerprint.hex,
            }
            for cls in classes
        ],
    }
