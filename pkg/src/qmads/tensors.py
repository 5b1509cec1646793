"""Sparse exact operators on tensor powers V^{(x)k}, dim V = n.

Basis vectors of V^{(x)k} are indexed by multi-indices (i_1, ..., i_k) with
0 <= i_j < n; internally a multi-index is flattened to base-n digits with the
first tensor factor most significant, so ``kron`` matches the Kronecker
product of the underlying matrices.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping

from .errors import ArityError, InversionError, PositionError
from .linalg import echelon_from_rows
from .scalars import mpq, normalize


def _digits(index: int, n: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for p in range(k - 1, -1, -1):
        index, out[p] = divmod(index, n)
    return tuple(out)


def _flat(digits: Iterable[int], n: int) -> int:
    r = 0
    for d in digits:
        r = r * n + d
    return r


class TensorOperator:
    """An n^k x n^k matrix with exact entries, stored row-sparse.

    Treated as immutable: every operation returns a new operator.
    """

    __slots__ = ("n", "arity", "rows")

    def __init__(self, n: int, arity: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        self.n = n
        self.arity = arity
        dim = n**arity
        clean: dict[int, dict[int, object]] = {}
        for r, row in (rows or {}).items():
            if not 0 <= r < dim:
                raise IndexError(f"row {r} out of range for dimension {dim}")
            kept = {}
            for c, v in row.items():
                if not 0 <= c < dim:
                    raise IndexError(f"column {c} out of range for dimension {dim}")
                if v:
                    kept[c] = normalize(v)
            if kept:
                clean[r] = kept
        self.rows = clean

    # constructors ---------------------------------------------------------
    @classmethod
    def _raw(cls, n: int, arity: int, rows: dict) -> "TensorOperator":
        op = cls.__new__(cls)
        op.n, op.arity, op.rows = n, arity, rows
        return op

    @classmethod
    def zero(cls, n: int, arity: int = 1) -> "TensorOperator":
        return cls._raw(n, arity, {})

    @classmethod
    def identity(cls, n: int, arity: int = 1) -> "TensorOperator":
        one = mpq(1)
        return cls._raw(n, arity, {i: {i: one} for i in range(n**arity)})

    @classmethod
    def scalar(cls, n: int, arity: int, value) -> "TensorOperator":
        value = normalize(value)
        if not value:
            return cls.zero(n, arity)
        return cls._raw(n, arity, {i: {i: value} for i in range(n**arity)})

    @classmethod
    def flip(cls, n: int) -> "TensorOperator":
        """P(e_a (x) e_b) = e_b (x) e_a."""
        one = mpq(1)
        return cls._raw(n, 2, {a * n + b: {b * n + a: one} for a in range(n) for b in range(n)})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "TensorOperator":
        """The matrix unit E_ij on V (0-based)."""
        return cls._raw(n, 1, {i: {j: mpq(1)}})

    @classmethod
    def from_entries(cls, n: int, arity: int, entries: Mapping) -> "TensorOperator":
        """Entries keyed by (row multi-index, column multi-index) or flat (row, col)."""
        rows: dict[int, dict[int, object]] = {}
        for (r, c), v in entries.items():
            if isinstance(r, tuple):
                if len(r) != arity or len(c) != arity or not all(0 <= x < n for x in r + c):
                    raise IndexError(f"multi-index {(r, c)} out of range")
                r, c = _flat(r, n), _flat(c, n)
            rows.setdefault(r, {})[c] = v
        return cls(n, arity, rows)

    @classmethod
    def from_dense(cls, n: int, arity: int, matrix) -> "TensorOperator":
        dim = n**arity
        if len(matrix) != dim or any(len(row) != dim for row in matrix):
            raise ValueError(f"expected a {dim}x{dim} matrix")
        return cls(n, arity, {r: dict(enumerate(row)) for r, row in enumerate(matrix)})

    # inspection -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.n**self.arity

    def __getitem__(self, key):
        r, c = key
        if isinstance(r, tuple):
            r, c = _flat(r, self.n), _flat(c, self.n)
        return self.rows.get(r, {}).get(c, mpq(0))

    def items(self):
        for r, row in self.rows.items():
            for c, v in row.items():
                yield r, c, v

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list[list]:
        dim = self.dim
        out = [[mpq(0)] * dim for _ in range(dim)]
        for r, c, v in self.items():
            out[r][c] = v
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if (self.n, self.arity) != (other.n, other.arity):
            return False
        return (self - other).is_zero()

    def __hash__(self):  # pragma: no cover - mutable-looking but value-typed
        return hash((self.n, self.arity, self.nnz()))

    def __repr__(self) -> str:
        return f"TensorOperator(n={self.n}, arity={self.arity}, nnz={self.nnz()})"

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "TensorOperator") -> None:
        if (self.n, self.arity) != (other.n, other.arity):
            raise ArityError(f"shape mismatch: {(self.n, self.arity)} vs {(other.n, other.arity)}")

    def __add__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        self._check(other)
        rows = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            target = rows.setdefault(r, {})
            for c, v in row.items():
                nv = target.get(c, 0) + v
                if nv:
                    target[c] = nv
                else:
                    target.pop(c, None)
            if not target:
                del rows[r]
        return TensorOperator._raw(self.n, self.arity, rows)

    def __neg__(self):
        return TensorOperator._raw(self.n, self.arity, {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "TensorOperator":
        s = normalize(s)
        if not s:
            return TensorOperator.zero(self.n, self.arity)
        rows = {}
        for r, row in self.rows.items():
            new = {}
            for c, v in row.items():
                nv = v * s
                if nv:
                    new[c] = normalize(nv)
            if new:
                rows[r] = new
        return TensorOperator._raw(self.n, self.arity, rows)

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        if not isinstance(other, TensorOperator):
            return NotImplemented
        self._check(other)
        orows = other.rows
        rows = {}
        for r, row in self.rows.items():
            acc: dict[int, object] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                rows[r] = acc
        return TensorOperator._raw(self.n, self.arity, rows)

    def __mul__(self, other):
        if isinstance(other, TensorOperator):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "TensorOperator":
        out = TensorOperator.identity(self.n, self.arity)
        for _ in range(k):
            out = out @ self
        return out

    def map(self, f: Callable[[object], object]) -> "TensorOperator":
        return TensorOperator(self.n, self.arity, {r: {c: f(v) for c, v in row.items()} for r, row in self.rows.items()})

    def transpose(self) -> "TensorOperator":
        rows: dict[int, dict[int, object]] = {}
        for r, c, v in self.items():
            rows.setdefault(c, {})[r] = v
        return TensorOperator._raw(self.n, self.arity, rows)

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        """self (x) other, acting on the concatenated tensor factors."""
        if self.n != other.n:
            raise ArityError("tensor factors must share the same n")
        m = other.dim
        rows = {}
        for r1, row1 in self.rows.items():
            for r2, row2 in other.rows.items():
                new = {}
                for c1, a in row1.items():
                    base = c1 * m
                    for c2, b in row2.items():
                        v = a * b
                        if v:
                            new[base + c2] = v
                if new:
                    rows[r1 * m + r2] = new
        return TensorOperator._raw(self.n, self.arity + other.arity, rows)

    def rank(self) -> int:
        return echelon_from_rows(self.rows.values()).rank

    def inverse(self) -> "TensorOperator":
        """Gauss-Jordan on [self | I]."""
        dim = self.dim
        key = lambda col: (col[0] == "a", col[1])  # ("a", c) pivots beat ("i", j)
        aug = []
        for r in range(dim):
            row = {("a", c): v for c, v in self.rows.get(r, {}).items()}
            row[("i", r)] = mpq(1)
            aug.append(row)
        ech = echelon_from_rows(aug, key=key, dense_threshold=10**12)
        if ech.rank != dim or any(p[0] != "a" for p in ech.pivots()):
            raise InversionError("operator is singular")
        rows: dict[int, dict[int, object]] = {}
        for (_, p), row in ech.rows.items():
            for (tag, j), v in row.items():
                if tag == "i" and v:
                    rows.setdefault(p, {})[j] = v
        return TensorOperator(self.n, self.arity, rows)

    def trace(self, weight: "TensorOperator | None" = None):
        """Full trace, optionally R-trace Tr(D^{(x)k} X) with D = ``weight``."""
        return partial_r_trace(self, range(1, self.arity + 1), weight)


def embed(op: TensorOperator, total_arity: int, first: int) -> TensorOperator:
    """op acting on factors first..first+arity-1 (1-based) of V^{(x)total}."""
    if first < 1 or first + op.arity - 1 > total_arity:
        raise ArityError(f"cannot place arity-{op.arity} operator at position {first} of {total_arity}")
    left = first - 1
    right = total_arity - left - op.arity
    out = op
    if left:
        out = TensorOperator.identity(op.n, left).kron(out)
    if right:
        out = out.kron(TensorOperator.identity(op.n, right))
    return out


def embed_adjacent(op: TensorOperator, total_arity: int, i: int) -> TensorOperator:
    """R_i: an arity-2 operator at factors (i, i+1), identity elsewhere."""
    if op.arity != 2:
        raise ArityError("embed_adjacent needs an arity-2 operator")
    if not 1 <= i <= total_arity - 1:
        raise ArityError(f"position {i} out of range for arity {total_arity}")
    return embed(op, total_arity, i)


def partial_r_trace(op: TensorOperator, positions, weight: TensorOperator | None = None):
    """Contract the factors in ``positions`` (1-based) with Tr(D X).

    With weight None the plain trace is used. An arity-0 result is returned
    as a scalar.
    """
    positions = sorted(set(positions))
    k, n = op.arity, op.n
    if any(not 1 <= p <= k for p in positions):
        raise PositionError(f"positions {positions} out of range for arity {k}")
    if weight is not None and (weight.arity != 1 or weight.n != n):
        raise ArityError("trace weight must be an arity-1 operator on the same V")
    traced = [p - 1 for p in positions]
    kept = [p for p in range(k) if p not in traced]
    new_arity = len(kept)
    acc: dict[tuple[int, int], object] = {}
    wrows = weight.rows if weight is not None else None
    for r, row in op.rows.items():
        rd = _digits(r, n, k)
        for c, v in row.items():
            cd = _digits(c, n, k)
            coef = v
            for p in traced:
                # Tr(D X) = sum_{a,b} D[a,b] X[b,a]
                if wrows is None:
                    if rd[p] != cd[p]:
                        coef = 0
                        break
                else:
                    d = wrows.get(cd[p], {}).get(rd[p])
                    if not d:
                        coef = 0
                        break
                    coef = coef * d
            if not coef:
                continue
            key = (_flat((rd[p] for p in kept), n), _flat((cd[p] for p in kept), n))
            acc[key] = acc.get(key, 0) + coef
    if new_arity == 0:
        return normalize(acc.get((0, 0), mpq(0)))
    rows: dict[int, dict[int, object]] = {}
    for (r, c), v in acc.items():
        if v:
            rows.setdefault(r, {})[c] = v
    return TensorOperator(n, new_arity, rows)


def basis_action(op: TensorOperator, digits: tuple[int, ...]) -> dict[tuple[int, ...], object]:
    """Image of a basis vector (0-based digits) as {digits: coefficient}."""
    col = _flat(digits, op.n)
    out = {}
    for r, row in op.rows.items():
        v = row.get(col)
        if v:
            out[_digits(r, op.n, op.arity)] = v
    return out


def multi_indices(n: int, k: int):
    return itertools.product(range(n), repeat=k)


def digits_of(index: int, n: int, k: int) -> tuple[int, ...]:
    return _digits(index, n, k)


def flat_index(digits: Iterable[int], n: int) -> int:
    return _flat(digits, n)
