"""Labeled binary matroids over a GF(2) column representation.

A matroid is a tuple of distinct element labels plus a BitMatrix with one
column per element; every query (rank, circuits, minors, duality) routes
through the column space.  Instances are immutable after construction and
cache derived data, so they are safe to share across workers.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .gf2 import BitMatrix, rank_of_ints, rref, span_basis

Label = Hashable

_SUBSET_TABLE_LIMIT = 22  # 2^n uint8 ranks; beyond this the table is pointless


class BinaryMatroid:
    """Binary matroid on a labeled ground set."""

    __slots__ = (
        "elements",
        "rep",
        "_pos",
        "_cols",
        "_rank",
        "_reduced",
        "_dual",
        "_subset_ranks",
        "_canonical",
    )

    def __init__(self, elements: Sequence[Label], rep: BitMatrix):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate element labels")
        if rep.n_cols != len(elements):
            raise ValueError("one column per element required")
        self.elements = elements
        self.rep = rep
        self._pos = {e: i for i, e in enumerate(elements)}
        self._cols = None
        self._rank = None
        self._reduced = None
        self._dual = None
        self._subset_ranks = None
        self._canonical = None

    # -- basics --------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.reduced.n_rows
        return self._rank

    @property
    def corank(self) -> int:
        return self.size - self.rank

    @property
    def reduced(self) -> BitMatrix:
        """rref of the representation; canonical for the labeled matroid."""
        if self._reduced is None:
            self._reduced = rref(self.rep)
        return self._reduced

    def columns(self) -> list[int]:
        """Column ints of the reduced representation (bit i = pivot row i)."""
        if self._cols is None:
            self._cols = self.reduced.cols()
        return list(self._cols)

    def position(self, e: Label) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise KeyError(f"unknown element label: {e!r}") from None

    def positions(self, s: Iterable[Label]) -> list[int]:
        return [self.position(e) for e in s]

    def subset_mask(self, s: Iterable[Label]) -> int:
        mask = 0
        for e in s:
            mask |= 1 << self.position(e)
        return mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.elements == other.elements and self.reduced == other.reduced

    def __repr__(self) -> str:
        return f"BinaryMatroid(rank={self.rank}, elements={list(self.elements)!r})"

    # -- rank oracle -----------------------------------------------------------

    def rank_of(self, s: Iterable[Label]) -> int:
        cols = self.columns()
        return rank_of_ints(cols[p] for p in self.positions(s))

    def rank_of_mask(self, mask: int) -> int:
        cols = self.columns()
        return rank_of_ints(cols[p] for p in range(self.size) if (mask >> p) & 1)

    def subset_rank_table(self):
        """numpy uint8 array of length 2^n with the rank of every subset."""
        if self._subset_ranks is None:
            import numpy as np

            n = self.size
            if n > _SUBSET_TABLE_LIMIT:
                raise ValueError(f"subset rank table unreasonable for n={n}")
            cols = self.columns()
            width = self.reduced.n_rows
            ranks = np.zeros(1 << n, dtype=np.uint8)
            # Packed echelon signature per subset: rank chunks of `width`
            # bits.  The largest chunk sits in the lowest position, so the
            # extraction loop reduces in descending leading-bit order (a
            # single pass is only sound in that order).
            sigs = [0] * (1 << n)
            chunk = (1 << width) - 1
            for mask in range(1, 1 << n):
                low = mask & -mask
                prev = mask ^ low
                v = cols[low.bit_length() - 1]
                s = sigs[prev]
                t = s
                while t:
                    b = t & chunk
                    if v ^ b < v:
                        v ^= b
                    t >>= width
                if v == 0:
                    ranks[mask] = ranks[prev]
                    sigs[mask] = s
                else:
                    ranks[mask] = ranks[prev] + 1
                    parts = []
                    t = s
                    while t:
                        parts.append(t & chunk)
                        t >>= width
                    parts.append(v)
                    parts.sort()
                    acc = 0
                    for b in parts:
                        acc = (acc << width) | b
                    sigs[mask] = acc
            self._subset_ranks = ranks
        return self._subset_ranks

    def row_space_masks(self) -> list[int]:
        """All 2^rank vectors of the cocircuit space as element-position masks."""
        masks = [0]
        for row in self.reduced.rows:
            masks += [m ^ row for m in masks]
        return masks

    # -- duality / minors --------------------------------------------------------

    def dual(self) -> BinaryMatroid:
        """Dual matroid on the same labels, [I|D] <-> [I|D^T] columnwise."""
        if self._dual is None:
            red = self.reduced
            n = self.size
            pivots = [(row & -row).bit_length() - 1 for row in red.rows]
            pivot_set = set(pivots)
            free = [j for j in range(n) if j not in pivot_set]
            rows = []
            for jj, j in enumerate(free):
                row = 1 << j
                for i, p in enumerate(pivots):
                    if red.entry(i, j):
                        row |= 1 << p
                rows.append(row)
            dual = BinaryMatroid(self.elements, BitMatrix(len(free), n, tuple(rows)))
            dual._dual = self
            self._dual = dual
        return self._dual

    def delete(self, s: Iterable[Label]) -> BinaryMatroid:
        drop = set(self.positions(s))
        keep = [i for i in range(self.size) if i not in drop]
        return BinaryMatroid(
            tuple(self.elements[i] for i in keep), self.rep.take_cols(keep)
        )

    def contract(self, s: Iterable[Label]) -> BinaryMatroid:
        # One tested code path: contraction is duality-conjugate deletion.
        return self.dual().delete(s).dual()

    def minor(self, contract: Iterable[Label] = (), delete: Iterable[Label] = ()) -> BinaryMatroid:
        contract = set(contract)
        delete = set(delete)
        if contract & delete:
            raise ValueError("contract and delete sets overlap")
        return self.contract(contract).delete(delete)

    def restrict(self, keep: Iterable[Label]) -> BinaryMatroid:
        keep = set(keep)
        return self.delete(e for e in self.elements if e not in keep)

    # -- circuits and simplicity ---------------------------------------------------

    def is_independent(self, s: Iterable[Label]) -> bool:
        s = list(s)
        return self.rank_of(s) == len(s)

    def is_circuit(self, s: Iterable[Label]) -> bool:
        s = list(s)
        if not s:
            return False
        if len(set(s)) != len(s):
            raise ValueError("repeated labels in set")
        if self.rank_of(s) != len(s) - 1:
            return False
        return all(self.rank_of(s[:i] + s[i + 1 :]) == len(s) - 1 for i in range(len(s)))

    def is_cocircuit(self, s: Iterable[Label]) -> bool:
        return self.dual().is_circuit(s)

    def circuits(self, max_size: int | None = None) -> list[frozenset]:
        """All circuits, smallest first (exponential scan; small matroids only)."""
        from itertools import combinations

        out: list[frozenset] = []
        limit = max_size if max_size is not None else self.size
        for k in range(1, limit + 1):
            for combo in combinations(self.elements, k):
                if self.rank_of(combo) == k - 1 and not any(
                    c <= set(combo) for c in out
                ):
                    if self.is_circuit(combo):
                        out.append(frozenset(combo))
        return out

    def loops(self) -> list[Label]:
        cols = self.columns()
        return [e for e, c in zip(self.elements, cols) if c == 0]

    def is_simple(self) -> bool:
        cols = self.columns()
        nonzero = [c for c in cols if c]
        return len(nonzero) == len(cols) and len(set(nonzero)) == len(nonzero)

    def is_cosimple(self) -> bool:
        return self.dual().is_simple()

    def simplify(self) -> BinaryMatroid:
        """Drop loops and keep the first member of each parallel class."""
        cols = self.columns()
        seen: set[int] = set()
        keep = []
        for i, c in enumerate(cols):
            if c and c not in seen:
                seen.add(c)
                keep.append(i)
        return BinaryMatroid(
            tuple(self.elements[i] for i in keep), self.rep.take_cols(keep)
        )

    def parallel_classes(self) -> dict[int, list[Label]]:
        groups: dict[int, list[Label]] = {}
        for e, c in zip(self.elements, self.columns()):
            if c:
                groups.setdefault(c, []).append(e)
        return groups

    def relabeled(self, mapping: Mapping[Label, Label]) -> BinaryMatroid:
        return BinaryMatroid(tuple(mapping[e] for e in self.elements), self.rep)


def from_standard_form(d_block: BitMatrix, labels: Sequence[Label]) -> BinaryMatroid:
    """Matroid of [I|D]; the first n_rows labels name the identity columns."""
    r = d_block.n_rows
    labels = tuple(labels)
    if len(labels) != r + d_block.n_cols:
        raise ValueError(
            f"need {r + d_block.n_cols} labels, got {len(labels)}"
        )
    rows = tuple((1 << i) | (d_block.rows[i] << r) for i in range(r))
    return BinaryMatroid(labels, BitMatrix(r, r + d_block.n_cols, rows))


def free_matroid(labels: Sequence[Label]) -> BinaryMatroid:
    return from_standard_form(BitMatrix.zeros(len(labels), 0), labels)


def from_graph(edges: Sequence[tuple[Label, Label]]) -> BinaryMatroid:
    """Cycle matroid of a graph; ground set is 1..len(edges) in edge order.

    Vertex-edge incidence over GF(2) with the last vertex row dropped (any
    row is redundant per connected component; last is fixed for determinism).
    """
    if not edges:
        raise ValueError("graph needs at least one edge")
    vertices = sorted({v for e in edges for v in e}, key=str)
    vpos = {v: i for i, v in enumerate(vertices)}
    rows = [0] * (len(vertices) - 1)
    for j, (u, v) in enumerate(edges):
        if u == v:
            continue  # loop edge: zero column
        for w in (u, v):
            i = vpos[w]
            if i < len(rows):
                rows[i] |= 1 << j
    rep = BitMatrix(len(rows), len(edges), tuple(rows))
    return BinaryMatroid(tuple(range(1, len(edges) + 1)), rep)


def standard_labels(m: BinaryMatroid) -> BinaryMatroid:
    """Same matroid relabeled positionally 1..n."""
    return BinaryMatroid(tuple(range(1, m.size + 1)), m.rep)


# -- matroid file format ---------------------------------------------------------
#
# First line "r n", then the r x (n - r) D block in the gf2 text format, then
# one line of whitespace-separated labels.  '#' lines are comments.


def _parse_label(tok: str) -> Label:
    try:
        return int(tok)
    except ValueError:
        return tok


def loads(text: str) -> BinaryMatroid:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty matroid file")
    r, n = (int(t) for t in lines[0].split())
    block = r if 0 < r < n else 0  # no D lines for free or rank-0 matroids
    d_rows = lines[1 : 1 + block]
    if len(d_rows) != block:
        raise ValueError("truncated D block")
    d = BitMatrix.from_text("\n".join(d_rows)) if block else BitMatrix.zeros(r, n - r)
    if d.n_cols != n - r:
        raise ValueError(f"D block width {d.n_cols} != n - r = {n - r}")
    label_line = lines[1 + block] if len(lines) > 1 + block else ""
    labels = [_parse_label(t) for t in label_line.split()]
    if not labels:
        labels = list(range(1, n + 1))
    return from_standard_form(d, labels)


def dumps(m: BinaryMatroid, comment: str | None = None) -> str:
    red = m.reduced
    pivots = [(row & -row).bit_length() - 1 for row in red.rows]
    if pivots != list(range(m.rank)):
        raise ValueError("matroid is not presented in standard form [I|D]")
    d_rows = tuple(row >> m.rank for row in red.rows)
    d = BitMatrix(m.rank, m.size - m.rank, d_rows)
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"{m.rank} {m.size}")
    if 0 < m.rank < m.size:
        out.append(d.to_text())
    out.append(" ".join(str(e) for e in m.elements))
    return "\n".join(out) + "\n"
