"""Sparse exact linear algebra over any field the scalars module provides."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping

import flint
import gmpy2

from .scalars import RationalFunction, mpq

_MPQ = type(mpq(0))

Vector = dict  # column -> nonzero field element


class Echelon:
    """A reduced row-echelon basis of a row space.

    Rows are dicts column -> coefficient. The pivot of a row is its largest
    column under ``key``; pivots are normalized to 1 and no row contains
    another row's pivot column, so reduction is a single pass.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self.key = key if key is not None else (lambda c: c)
        self.rows: dict[Hashable, Vector] = {}
        self._occurs: dict[Hashable, set] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return self.rows.keys()

    def reduce(self, vec: Mapping) -> Vector:
        """Return vec minus its projection on the pivot columns."""
        out = {c: v for c, v in vec.items() if v}
        hits = [c for c in out if c in self.rows]
        for p in hits:
            coef = out.get(p)
            if not coef:
                continue
            for c, v in self.rows[p].items():
                nv = out.get(c, 0) - coef * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, vec: Mapping) -> bool:
        """Insert a row; returns False if it was already in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        p = max(r, key=self.key)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        # keep the basis reduced: clear p from existing rows
        for other in list(self._occurs.get(p, ())):
            row = self.rows[other]
            coef = row.get(p)
            if not coef:
                continue
            for c, v in r.items():
                nv = row.get(c, 0) - coef * v
                if nv:
                    if c not in row:
                        self._occurs.setdefault(c, set()).add(other)
                    row[c] = nv
                else:
                    row.pop(c, None)
                    s = self._occurs.get(c)
                    if s is not None:
                        s.discard(other)
        self.rows[p] = r
        for c in r:
            if c != p:
                self._occurs.setdefault(c, set()).add(p)
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def _all_rational(rows: list[Mapping]) -> bool:
    for r in rows:
        for v in r.values():
            if isinstance(v, RationalFunction):
                return False
    return True


def echelon_from_rows(
    rows: Iterable[Mapping],
    key: Callable[[Hashable], object] | None = None,
    dense_threshold: int = 20000,
) -> Echelon:
    """Row-reduce ``rows``. Large all-rational systems go through flint's
    dense ``fmpq_mat.rref``; everything else uses the sparse routine."""
    rows = [r for r in rows if r]
    ech = Echelon(key)
    if not rows:
        return ech
    cols = sorted({c for r in rows for c in r}, key=ech.key, reverse=True)
    if len(rows) * len(cols) >= dense_threshold and _all_rational(rows):
        _dense_rref_into(ech, rows, cols)
        return ech
    for r in rows:
        ech.add(r)
    return ech


def _to_fmpq(v) -> flint.fmpq:
    v = mpq(v)
    return flint.fmpq(int(v.numerator), int(v.denominator))


def _dense_rref_into(ech: Echelon, rows: list[Mapping], cols: list) -> None:
    # columns in descending key order so the leftmost nonzero is the max-key pivot
    index = {c: i for i, c in enumerate(cols)}
    mat = flint.fmpq_mat(len(rows), len(cols))
    for i, r in enumerate(rows):
        for c, v in r.items():
            mat[i, index[c]] = _to_fmpq(v)
    red, rank = mat.rref()
    ncols = len(cols)
    for i in range(rank):
        row: Vector = {}
        for j in range(ncols):
            e = red[i, j]
            if e != 0:
                row[cols[j]] = gmpy2.mpq(int(e.p), int(e.q))
        p = max(row, key=ech.key)
        ech.rows[p] = row
        for c in row:
            if c != p:
                ech._occurs.setdefault(c, set()).add(p)


def rank_of(rows: Iterable[Mapping]) -> int:
    return echelon_from_rows(rows).rank


def solve_unique(equations: Iterable[tuple[Mapping, object]], unknowns: list) -> dict | None:
    """Solve sum_j a_ij x_j = b_i exactly. Returns None unless the solution
    exists and is unique."""
    rhs_col = ("__rhs__",)
    order = {u: i + 1 for i, u in enumerate(unknowns)}
    key = lambda c: 0 if c == rhs_col else order[c]
    rows = []
    for coeffs, b in equations:
        row = {c: v for c, v in coeffs.items() if v}
        if b:
            row[rhs_col] = -b
        if row:
            rows.append(row)
    ech = echelon_from_rows(rows, key=key, dense_threshold=10**12)
    if rhs_col in ech.rows or ech.rank != len(unknowns):
        return None
    # each pivot row reads x_p + (-b) = 0
    return {p: -row.get(rhs_col, 0) for p, row in ech.rows.items()}
