"""Canonical forms and isomorphism testing for binary matroids.

The canonical form is the lexicographic minimum, over every basis and every
row/column permutation, of the standard-form D block (annotated with
parallel-class multiplicities).  Two matroids get equal fingerprints iff they
are isomorphic; the search is exhaustive, with the inner permutation sweep
vectorised through numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Mapping

import numpy as np

from .gf2 import rank_of_ints
from .matroid import BinaryMatroid, Label

SIZE_LIMIT = 20  # canonicalization search explodes beyond this


@dataclass(frozen=True)
class CanonicalForm:
    """Basis- and labeling-invariant fingerprint of a binary matroid."""

    rank: int
    size: int
    fingerprint: bytes

    @property
    def hex(self) -> str:
        return self.fingerprint.hex()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)


@lru_cache(maxsize=None)
def _perm_table(r: int) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    """All permutations of r rows and the induced maps on r-bit column ints."""
    perms = tuple(permutations(range(r)))
    table = np.zeros((len(perms), 1 << r), dtype=np.uint16)
    for p, perm in enumerate(perms):
        for v in range(1 << r):
            w = 0
            for i in range(r):
                if (v >> perm[i]) & 1:
                    w |= 1 << i
            table[p, v] = w
    return perms, table


def _invert_basis(basis_cols: list[int], r: int) -> list[int]:
    """Mask rows of B^-1 for the r x r matrix B with the given columns."""
    rows = []
    for i in range(r):
        row = 0
        for j, c in enumerate(basis_cols):
            row |= ((c >> i) & 1) << j
        rows.append(row | (1 << (r + i)))  # augment with identity
    # rref on the first r columns
    next_row = 0
    for col in range(r):
        bit = 1 << col
        pivot = next(k for k in range(next_row, r) if rows[k] & bit)
        rows[next_row], rows[pivot] = rows[pivot], rows[next_row]
        for k in range(r):
            if k != next_row and rows[k] & bit:
                rows[k] ^= rows[next_row]
        next_row += 1
    return [row >> r for row in rows]


def _apply_masks(masks: list[int], c: int) -> int:
    out = 0
    for i, mask in enumerate(masks):
        out |= ((mask & c).bit_count() & 1) << i
    return out


def canonical_form(m: BinaryMatroid) -> CanonicalForm:
    """Fingerprint equal across all representations and relabelings of m."""
    if m._canonical is not None:
        return m._canonical
    if m.size > SIZE_LIMIT:
        raise ValueError(f"canonical form guarded beyond {SIZE_LIMIT} elements")
    si = m.simplify()
    n_loops = len(m.loops())
    mult = [len(cls) for cls in m.parallel_classes().values()]
    # parallel_classes keys follow column order of the simplification
    cols = si.columns()
    r = si.rank
    n = len(cols)
    if r == 0 or n == r:
        mult_sorted = tuple(sorted(mult))
        pairs = b"".join(int(v).to_bytes(2, "big") for v in mult_sorted)
        fp = bytes([m.rank, m.size, n_loops]) + pairs
        form = CanonicalForm(m.rank, m.size, fp)
        m._canonical = form
        return form
    if r > 8:
        raise ValueError("canonical form guarded beyond rank 8 after simplification")
    perms, table = _perm_table(r)
    perm_np = np.array(perms, dtype=np.int64)
    mult_arr = np.asarray(mult, dtype=np.uint16)
    k = n - r
    best: tuple[int, ...] | None = None
    for basis in combinations(range(n), r):
        basis_cols = [cols[i] for i in basis]
        if rank_of_ints(basis_cols) != r:
            continue
        inv = _invert_basis(basis_cols, r)
        rest = [j for j in range(n) if j not in basis]
        d_cols = np.fromiter(
            (_apply_masks(inv, cols[j]) for j in rest), dtype=np.uint16, count=k
        )
        rest_mult = mult_arr[rest]
        # encode (column value, multiplicity) so one sort orders pairs lexically
        encoded = (table[:, d_cols].astype(np.uint32) << 8) | rest_mult
        encoded.sort(axis=1)
        # basis-element multiplicities, permuted along with the rows
        basis_mult = mult_arr[list(basis)].astype(np.uint32)[perm_np]
        encoded = np.concatenate([basis_mult, encoded], axis=1)
        order = np.lexsort(encoded.T[::-1])
        cand = tuple(int(v) for v in encoded[order[0]])
        if best is None or cand < best:
            best = cand
    pairs = b"".join(v.to_bytes(2, "big") for v in best)
    fp = bytes([m.rank, m.size, n_loops]) + pairs
    form = CanonicalForm(m.rank, m.size, fp)
    m._canonical = form
    return form


def _si_invariants(m: BinaryMatroid):
    return (
        m.size,
        m.rank,
        len(m.loops()),
        tuple(sorted(len(c) for c in m.parallel_classes().values())),
    )


def _extend_witness(
    m: BinaryMatroid, n: BinaryMatroid, si_map: dict
) -> dict:
    """Grow a simplification-level witness to the full ground sets."""
    witness = {}
    m_classes = m.parallel_classes()
    n_classes = n.parallel_classes()
    m_rep = {members[0]: members for members in m_classes.values()}
    n_rep = {members[0]: members for members in n_classes.values()}
    for e, f in si_map.items():
        for a, b in zip(m_rep[e], n_rep[f]):
            witness[a] = b
    for a, b in zip(m.loops(), n.loops()):
        witness[a] = b
    return witness


def is_isomorphic(m: BinaryMatroid, n: BinaryMatroid) -> dict | None:
    """Witness bijection E(m) -> E(n) preserving independence, or None.

    The search fixes one basis of m and sweeps ordered bases of n; a linear
    map sending column set to column set is exactly a matroid isomorphism of
    binary matroids, so any completed sweep is a certified witness.
    """
    if _si_invariants(m) != _si_invariants(n):
        return None
    if m.size <= SIZE_LIMIT:
        # canonical forms are cached and decide equivalence outright; only
        # isomorphic pairs proceed to the witness sweep
        if canonical_form(m) != canonical_form(n):
            return None
    if m.size <= 18 and set(m.elements) == set(n.elements):
        # cheap identity fast path; also yields the natural witness
        if np.array_equal(m.subset_rank_table(), _aligned_table(m, n)):
            return {e: e for e in m.elements}
    m_si = m.simplify()
    n_si = n.simplify()
    r = m_si.rank
    if r == 0 or m_si.size == 0:
        return _extend_witness(m, n, {})
    m_cols = m_si.columns()
    n_cols = n_si.columns()
    mult_m = {e: len(c) for c in m.parallel_classes().values() for e in (c[0],)}
    mult_n = {e: len(c) for c in n.parallel_classes().values() for e in (c[0],)}
    n_lookup: dict[int, int] = {c: j for j, c in enumerate(n_cols)}
    # fixed basis of m: greedy first independent columns
    fixed: list[int] = []
    for j, c in enumerate(m_cols):
        if rank_of_ints([m_cols[i] for i in fixed] + [c]) == len(fixed) + 1:
            fixed.append(j)
        if len(fixed) == r:
            break
    inv = _invert_basis([m_cols[j] for j in fixed], r)
    coords = [_apply_masks(inv, c) for c in m_cols]
    order = sorted(range(len(m_cols)), key=lambda j: coords[j].bit_count())
    for cand in combinations(range(len(n_cols)), r):
        if rank_of_ints(n_cols[j] for j in cand) != r:
            continue
        for perm in permutations(cand):
            basis_imgs = [n_cols[j] for j in perm]
            si_map: dict[Label, Label] = {}
            used = 0
            ok = True
            for j in order:
                img = 0
                cj = coords[j]
                for i in range(r):
                    if (cj >> i) & 1:
                        img ^= basis_imgs[i]
                tgt = n_lookup.get(img)
                if tgt is None or (used >> tgt) & 1:
                    ok = False
                    break
                if mult_m[m_si.elements[j]] != mult_n[n_si.elements[tgt]]:
                    ok = False
                    break
                used |= 1 << tgt
                si_map[m_si.elements[j]] = n_si.elements[tgt]
            if ok:
                return _extend_witness(m, n, si_map)
    return None


def _aligned_table(m: BinaryMatroid, n: BinaryMatroid) -> np.ndarray:
    """n's subset rank table re-indexed by m's element positions."""
    perm = [n.position(e) for e in m.elements]
    masks = np.arange(1 << m.size, dtype=np.int64)
    mapped = np.zeros_like(masks)
    for i, p in enumerate(perm):
        mapped |= ((masks >> i) & 1) << p
    return n.subset_rank_table()[mapped]


def verify_map(m: BinaryMatroid, n: BinaryMatroid, mapping: Mapping[Label, Label]) -> bool:
    """True iff the bijection preserves independence both ways.

    Checked exactly: the rank of every subset must match the rank of its
    image (feasible for the whole universe here, <= 18 elements).
    """
    if m.size != n.size:
        raise ValueError("ground sets differ in size")
    if set(mapping.keys()) != set(m.elements) or set(mapping.values()) != set(
        n.elements
    ) or len(set(mapping.values())) != len(mapping):
        raise ValueError("not a bijection between the ground sets")
    if m.size > 18:
        raise NotImplementedError("verify_map limited to 18 elements")
    if m.rank != n.rank:
        return False
    perm = [n.position(mapping[e]) for e in m.elements]
    masks = np.arange(1 << m.size, dtype=np.int64)
    mapped = np.zeros_like(masks)
    for i, p in enumerate(perm):
        mapped |= ((masks >> i) & 1) << p
    return bool(np.array_equal(m.subset_rank_table(), n.subset_rank_table()[mapped]))


def exhaustive_isomorphism(m: BinaryMatroid, n: BinaryMatroid) -> dict | None:
    """Independent brute-force witness search (small matroids only).

    Backtracks over all label assignments in ground-set order, pruning a
    partial map as soon as any subset of the assigned prefix changes rank.
    The pruning is lossless, so this is an exhaustive bijection search.
    """
    if m.size != n.size or m.rank != n.rank:
        return None
    if m.size > 12:
        raise ValueError("exhaustive search limited to 12 elements")
    rm = m.subset_rank_table()
    rn = n.subset_rank_table()
    size = m.size
    used = [False] * size

    def rec(k: int, subs: list[tuple[int, int]], image: list[int]) -> list[int] | None:
        if k == size:
            return image
        bit = 1 << k
        for q in range(size):
            if used[q]:
                continue
            qbit = 1 << q
            if all(rm[s | bit] == rn[t | qbit] for s, t in subs):
                used[q] = True
                res = rec(
                    k + 1,
                    subs + [(s | bit, t | qbit) for s, t in subs],
                    image + [q],
                )
                if res is not None:
                    return res
                used[q] = False
        return None

    image = rec(0, [(0, 0)], [])
    if image is None:
        return None
    return {m.elements[i]: n.elements[q] for i, q in enumerate(image)}
