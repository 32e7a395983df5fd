"""Connectivity function, k-separations, and inducer tests.

The scans are exhaustive over subsets (2^n with symmetry), backed by the
matroid's subset rank table; everything in the catalog has at most 18
elements, so brute force is both affordable and auditable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .matroid import BinaryMatroid, Label


def lambda_(m: BinaryMatroid, x: Iterable[Label]) -> int:
    """Connectivity function r(X) + r(E-X) - r(M); symmetric in X and E-X."""
    x = set(x)
    comp = [e for e in m.elements if e not in x]
    return m.rank_of(x) + m.rank_of(comp) - m.rank


def is_k_separation(m: BinaryMatroid, x: Iterable[Label], k: int) -> bool:
    """Partition (X, E-X) with |X| >= k, |E-X| >= k, and lambda(X) <= k - 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    x = set(x)
    if len(x) < k or m.size - len(x) < k:
        return False
    return lambda_(m, x) <= k - 1


@dataclass(frozen=True)
class Separation:
    """A certified k-separation: side_a plus order/exactness/minimality flags."""

    side_a: frozenset
    order: int
    exact: bool
    minimal: bool

    @classmethod
    def of(cls, m: BinaryMatroid, x: Iterable[Label], k: int) -> "Separation":
        x = frozenset(x)
        if not is_k_separation(m, x, k):
            raise ValueError("not a k-separation")
        lam = lambda_(m, x)
        exact = lam == k - 1
        minimal = exact and (len(x) == k or m.size - len(x) == k)
        return cls(x, k, exact, minimal)


def _lambda_table(m: BinaryMatroid) -> np.ndarray:
    ranks = m.subset_rank_table()
    return ranks.astype(np.int16) + ranks[::-1].astype(np.int16) - int(m.rank)


def _popcounts(n: int) -> np.ndarray:
    sizes = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        bit = 1 << i
        sizes[bit : bit << 1] = sizes[:bit] + 1
    return sizes


def is_3_connected(m: BinaryMatroid) -> bool:
    """No 1- or 2-separation.

    Uses the simple-matroid shortcut: 3-connected iff simple, cosimple, and
    lambda(A) >= 2 whenever both sides have >= 3 elements.  Matroids with at
    most 3 elements count as 3-connected iff simple and cosimple.
    """
    if not (m.is_simple() and m.is_cosimple()):
        return False
    n = m.size
    if n <= 3:
        return True
    lam = _lambda_table(m)
    sizes = _popcounts(n)
    bad = (lam <= 1) & (sizes >= 3) & (sizes <= n - 3)
    return not bool(bad.any())


def is_internally_4_connected(m: BinaryMatroid) -> bool:
    """3-connected with no non-minimal exact 3-separation.

    Equivalently lambda(A) >= 3 for every partition with both sides >= 4.
    """
    if not is_3_connected(m):
        return False
    n = m.size
    if n < 8:
        return True
    lam = _lambda_table(m)
    sizes = _popcounts(n)
    bad = (lam <= 2) & (sizes >= 4) & (sizes <= n - 4)
    return not bool(bad.any())


def induces_separation(
    m: BinaryMatroid,
    a: Iterable[Label],
    b: Iterable[Label],
    minor_witness: Mapping[Label, Label] | None = None,
) -> bool:
    """Does some 3-separation (X, Y) of m satisfy image(a) <= X, image(b) <= Y?

    `minor_witness` maps minor labels into E(m); omit it when a and b already
    name elements of m.  All 3-separations are scanned, not only exact ones.
    """
    if minor_witness is not None:
        values = list(minor_witness.values())
        if len(set(values)) != len(values):
            raise ValueError("minor witness is not injective")
        try:
            a = [minor_witness[e] for e in a]
            b = [minor_witness[e] for e in b]
        except KeyError as exc:
            raise ValueError(f"minor witness missing label {exc.args[0]!r}") from None
    a_mask = m.subset_mask(a)
    b_mask = m.subset_mask(b)
    if a_mask & b_mask:
        raise ValueError("sides overlap under the witness")
    n = m.size
    lam = _lambda_table(m)
    sizes = _popcounts(n)
    masks = np.arange(1 << n, dtype=np.int64)
    ok = (
        (lam <= 2)
        & (sizes >= 3)
        & (sizes <= n - 3)
        & ((masks & a_mask) == a_mask)
        & ((masks & b_mask) == 0)
    )
    return bool(ok.any())


def non_minimal_exact_3_separations(m: BinaryMatroid) -> list[frozenset]:
    """Sides A (with the lexicographically first element) of all non-minimal
    exact 3-separations; empty iff internally 4-connected when 3-connected."""
    n = m.size
    lam = _lambda_table(m)
    sizes = _popcounts(n)
    hits = np.nonzero((lam == 2) & (sizes >= 4) & (sizes <= n - 4))[0]
    out = []
    for mask in hits:
        mask = int(mask)
        if mask & 1 == 0:  # keep one side of each partition
            continue
        out.append(frozenset(m.elements[i] for i in range(n) if (mask >> i) & 1))
    return out
