import numpy as np
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hecke_cocenter.linalg import ColumnIndex, Echelon, independent_modulo, rank

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _vec(row):
    return {j: mpq(a) for j, a in enumerate(row) if a}


@settings(max_examples=80)
@given(matrices)
def test_rank_matches_numpy(m):
    assert rank(_vec(r) for r in m) == np.linalg.matrix_rank(np.array(m, dtype=float))


@settings(max_examples=80)
@given(matrices)
def test_rows_are_contained(m):
    e = Echelon()
    for r in m:
        e.add(_vec(r))
    for r in m:
        assert e.contains(_vec(r))
    total = {}
    for r in m:
        for j, a in _vec(r).items():
            total[j] = total.get(j, 0) + 2 * a
    assert e.contains(total)


def test_independent_modulo_reports_combination():
    base = Echelon()
    base.add({0: mpq(1), 1: mpq(1)})
    ok, combo = independent_modulo(base, [{0: mpq(1)}, {1: mpq(1)}], 10)
    assert not ok
    assert set(combo) == {0, 1}
    ok, combo = independent_modulo(base, [{0: mpq(1)}], 10)
    assert ok and combo is None


def test_column_index():
    idx = ColumnIndex(["a", "b"])
    assert idx.vector({"b": 3}) == {1: 3}
    assert "a" in idx and len(idx) == 2
