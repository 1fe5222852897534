"""Sparse incremental semi-echelon elimination over an exact field.

Vectors are dicts ``{column: coeff}`` with integer columns; the column order is the
integer order, so callers choose an indexing that puts the columns they want to
pivot on first.  Coefficients may be ``mpq`` or ``Cyc8``: only ``+ - * /`` and
truthiness are used.

Rows are kept in semi-echelon form: every stored row has a distinct pivot (its
smallest column) with coefficient 1, and no back-substitution is done.  A useful
consequence: if columns are ordered by decreasing filtration degree, the rows whose
pivot lies in the low-degree block span exactly the intersection of the row space
with that block.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping


class DimensionBoundExceeded(ValueError):
    pass


class Echelon:
    def __init__(self):
        self.rows: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Residual of ``vec`` after eliminating every pivot column."""
        out = {k: c for k, c in vec.items() if c}
        heap = list(out)
        heapq.heapify(heap)
        rows = self.rows
        while heap:
            col = heapq.heappop(heap)
            c = out.get(col)
            if not c:
                continue
            row = rows.get(col)
            if row is None:
                continue
            for k, rv in row.items():
                cur = out.get(k)
                if cur is None:
                    out[k] = -(c * rv)
                    heapq.heappush(heap, k)
                else:
                    new = cur - c * rv
                    if new:
                        out[k] = new
                    else:
                        del out[k]
        return out

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; returns False when it was already in the row space."""
        r = self.reduce(vec)
        if not r:
            return False
        self._store(r)
        return True

    def _store(self, r: dict) -> int:
        p = min(r)
        inv = 1 / r[p]
        self.rows[p] = {k: c * inv for k, c in r.items()}
        return p

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = dict(self.rows)
        return e

    def rows_with_pivot_at_least(self, threshold: int) -> list:
        return [row for p, row in sorted(self.rows.items()) if p >= threshold]


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def independent_modulo(base: Echelon, vectors: list, tag_start: int):
    """Check that ``vectors`` stay independent modulo the row space of ``base``.

    Each vector is tagged with an extra column ``tag_start + i`` (which must exceed
    every real column), so a dependency shows up as a residual living only in tag
    columns.  Returns ``(True, None)`` or ``(False, {i: coeff})`` with a combination
    of the vectors that lies in the row space of ``base``.
    """
    e = base.copy()
    for i, v in enumerate(vectors):
        tagged = dict(v)
        tagged[tag_start + i] = 1
        r = e.reduce(tagged)
        if min(r) >= tag_start:
            return False, {k - tag_start: c for k, c in sorted(r.items())}
        e._store(r)
    return True, None


class ColumnIndex:
    """Bijection between hashable monomial keys and integer columns."""

    def __init__(self, keys: Iterable = ()):
        self.index: dict = {}
        self.keys: list = []
        for k in keys:
            self.add(k)

    def add(self, key) -> int:
        i = self.index.get(key)
        if i is None:
            i = len(self.keys)
            self.index[key] = i
            self.keys.append(key)
        return i

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key) -> bool:
        return key in self.index

    def vector(self, terms: Mapping, strict: bool = True) -> dict:
        out = {}
        for k, c in terms.items():
            i = self.index.get(k)
            if i is None:
                if strict:
                    raise KeyError(f"monomial {k} outside the indexed slice")
                i = self.add(k)
            out[i] = c
        return out

