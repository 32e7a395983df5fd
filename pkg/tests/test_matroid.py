from __future__ import annotations

import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismatroid.gf2 import BitMatrix
from prismatroid.matroid import (
    BinaryMatroid,
    dumps,
    free_matroid,
    from_graph,
    from_standard_form,
    loads,
)


def brute_rank(cols: list[int]) -> int:
    """Independent elimination oracle, separate from the library path."""
    basis: list[int] = []
    for v in cols:
        for b in sorted(basis, reverse=True):
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


small_matroids = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda n: st.lists(
            st.integers(0, (1 << r) - 1), min_size=n, max_size=n
        ).map(lambda cols: BinaryMatroid(tuple(range(n)), BitMatrix.from_cols(cols, r)))
    )
)


def test_from_standard_form_examples(cat):
    p9 = cat.matroid("P9")
    assert p9.rank == 4 and p9.size == 9
    r17 = cat.matroid("R17")
    assert r17.rank == 5 and r17.size == 17
    free = free_matroid(range(1, 5))
    assert free.rank == 4
    assert all(free.is_independent(s) for k in range(5) for s in combinations(free.elements, k))


def test_from_standard_form_rejects_bad_labels():
    d = BitMatrix.from_text("11\n01")
    with pytest.raises(ValueError):
        from_standard_form(d, [1, 2, 3])  # needs 4 labels
    with pytest.raises(ValueError):
        from_standard_form(d, [1, 1, 2, 3])


def test_rank_of_examples(cat):
    p9 = cat.matroid("P9")
    assert p9.rank_of(set()) == 0
    assert p9.rank_of(p9.elements) == 4
    # frozen from the elimination oracle on columns {1,2,5,6}
    cols = [p9.columns()[p9.position(e)] for e in (1, 2, 5, 6)]
    assert brute_rank(cols) == 3
    assert p9.rank_of({1, 2, 5, 6}) == 3
    with pytest.raises(KeyError):
        p9.rank_of({99})


def test_dual_examples(cat):
    e5 = cat.matroid("E5")
    assert e5.dual().rank == 5
    p9 = cat.matroid("P9")
    assert p9.dual().rank == 5 and p9.dual().size == 9
    free = free_matroid(range(3))
    assert free.dual().rank == 0


@given(small_matroids)
@settings(max_examples=80, deadline=None)
def test_dual_involution(m):
    dd = m.dual().dual()
    assert dd.elements == m.elements
    assert np.array_equal(m.subset_rank_table(), dd.subset_rank_table())


@given(small_matroids)
@settings(max_examples=60, deadline=None)
def test_dual_rank_formula(m):
    # cobasis complement rule: r*(X) = |X| - r(M) + r(E - X)
    rng = random.Random(11)
    elems = list(m.elements)
    d = m.dual()
    for _ in range(10):
        x = [e for e in elems if rng.random() < 0.5]
        comp = [e for e in elems if e not in x]
        assert d.rank_of(x) == len(x) - m.rank + m.rank_of(comp)


def test_delete_contract(cat):
    p9 = cat.matroid("P9")
    assert p9.delete(set()) == p9
    c = p9.contract({1})
    assert c.rank == 3 and c.size == 8
    assert 1 not in c.elements  # labels survive unchanged otherwise
    with pytest.raises(KeyError):
        p9.delete({"nope"})
    with pytest.raises(ValueError):
        p9.minor(contract={1}, delete={1})


@given(small_matroids)
@settings(max_examples=60, deadline=None)
def test_delete_contract_commute(m):
    elems = list(m.elements)
    if len(elems) < 2:
        return
    x, y = {elems[0]}, {elems[-1]}
    if x == y:
        return
    a = m.delete(x).contract(y)
    b = m.contract(y).delete(x)
    assert a.elements == b.elements
    assert np.array_equal(a.subset_rank_table(), b.subset_rank_table())


def test_circuits_and_cocircuits(cat):
    p9 = cat.matroid("P9")
    assert p9.is_circuit({1, 2, 5, 6})
    assert p9.is_cocircuit({1, 2, 5, 6})
    assert not p9.is_circuit({1})
    assert not p9.is_circuit(set())
    tri = from_graph([(1, 2), (2, 3), (3, 1)])
    assert tri.is_circuit([1, 2, 3])
    assert tri.rank == 2


def test_circuit_antichain_small(cat):
    # no circuit properly contains another (exhaustive on <= 10 elements)
    for nm in ("P9", "K5e", "AG32"):
        m = cat.matroid(nm)
        circuits = m.circuits()
        for a in circuits:
            for b in circuits:
                assert a == b or not a < b


def test_simplicity(cat):
    assert cat.matroid("P9").is_simple()
    doubled = BinaryMatroid(
        (1, 2, 3), BitMatrix.from_cols([0b01, 0b01, 0b10], 2)
    )
    assert not doubled.is_simple()
    si = doubled.simplify()
    assert si.size == 2 and si.is_simple()
    looped = BinaryMatroid((1, 2), BitMatrix.from_cols([0, 0b1], 1))
    assert looped.loops() == [1]
    assert looped.simplify().size == 1


def test_cosimple(cat):
    assert cat.matroid("P9").is_cosimple()
    # coloops are not cosimple
    assert not free_matroid([1, 2]).is_cosimple()


def test_from_graph(cat):
    tri = from_graph([(1, 2), (2, 3), (3, 1)])
    assert tri.rank == 2 and tri.size == 3
    k5e = from_graph(
        [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    )
    assert k5e.rank == 4 and k5e.size == 9
    with pytest.raises(ValueError):
        from_graph([])
    loop = from_graph([(1, 1), (1, 2)])
    assert loop.loops() == [1]


def test_subset_rank_table_matches_direct():
    rng = random.Random(3)
    for _ in range(25):
        r = rng.randint(1, 5)
        n = rng.randint(1, 9)
        cols = [rng.randrange(1 << r) for _ in range(n)]
        m = BinaryMatroid(tuple(range(n)), BitMatrix.from_cols(cols, r))
        tbl = m.subset_rank_table()
        for _ in range(30):
            mask = rng.randrange(1 << n)
            assert tbl[mask] == m.rank_of_mask(mask)


@given(small_matroids)
@settings(max_examples=40, deadline=None)
def test_rank_submodular(m):
    tbl = m.subset_rank_table().astype(int)
    n = m.size
    rng = random.Random(5)
    for _ in range(30):
        x, y = rng.randrange(1 << n), rng.randrange(1 << n)
        assert tbl[x] + tbl[y] >= tbl[x | y] + tbl[x & y]


def test_file_format_round_trip(cat):
    for nm in ("P9", "E5", "Z4"):
        m = cat.matroid(nm)
        again = loads(dumps(m, comment="round trip"))
        assert again.elements == m.elements
        assert again.reduced == m.reduced
    free = free_matroid([1, 2, 3])
    assert loads(dumps(free)) == free


def test_catalog_statements_hold(cat):
    # named sizes and ranks as stated at each introduction
    d1_dual = cat.matroid("P_Delta_F7_F7_minus_z_dual")
    assert d1_dual.rank == 6 and d1_dual.size == 10
    z4 = cat.matroid("Z4")
    assert z4.size == 9 and z4.rank == 4
    assert set(z4.elements) == {1, 2, 3, 4, "b1", "b2", "b3", "b4", "c4"}
