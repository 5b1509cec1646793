"""Truncated current algebras: RTT-type and braided Yangians, shifted
quantum powers, series elementary symmetric elements and the series
Cayley-Hamilton check.

A series is sum_k A[k] u^(-k) with A[0..D]. Every product of such series
only has nonpositive powers of u, so the u^(-j) coefficient depends on
levels <= j and is exact whenever j <= D.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .braidings import HECKE, Braiding, CurrentRMatrix, baxterize
from .errors import InsufficientTruncation, ResourceError
from .freealg import (
    DEFAULT_CAP,
    LEVEL_GRADED,
    FreeElement,
    FreeMatrix,
    IdealHandle,
    RelationSet,
    letter,
)
from .report import VerificationReport, membership_item
from .scalars import mpq, normalize
from .tensors import TensorOperator, embed_adjacent

RTT_TYPE = "rtt"
BRAIDED = "braided"
MAX_LEVEL = 63


@dataclass
class TruncatedMatrixSeries:
    """sum_{k=0}^{order} coeffs[k] u^(-k) with FreeMatrix coefficients."""

    n: int
    arity: int
    order: int
    coeffs: list[FreeMatrix]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need order + 1 coefficients")

    @classmethod
    def generating(cls, n: int, family: str, order: int, L0: TensorOperator | None = None) -> "TruncatedMatrixSeries":
        if order > MAX_LEVEL:
            raise ResourceError(f"level {order} exceeds the letter encoding", order)
        head = FreeMatrix.identity(n) if L0 is None else FreeMatrix.constant(L0)
        return cls(n, 1, order, [head] + [FreeMatrix.generating(n, family, k) for k in range(1, order + 1)])

    @classmethod
    def constant(cls, op: TensorOperator, order: int) -> "TruncatedMatrixSeries":
        zero = FreeMatrix(op.n, op.arity)
        return cls(op.n, op.arity, order, [FreeMatrix.constant(op)] + [zero] * order)

    @classmethod
    def identity(cls, n: int, arity: int, order: int) -> "TruncatedMatrixSeries":
        return cls.constant(TensorOperator.identity(n, arity), order)

    def _like(self, coeffs) -> "TruncatedMatrixSeries":
        return TruncatedMatrixSeries(self.n, coeffs[0].arity, self.order, coeffs)

    def __add__(self, other):
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self._like([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, s) -> "TruncatedMatrixSeries":
        return self._like([a.scale(s) for a in self.coeffs])

    def __matmul__(self, other):
        if isinstance(other, TensorOperator):
            return self._like([a @ other for a in self.coeffs])
        D = min(self.order, other.order)
        out = []
        for o in range(D + 1):
            acc = FreeMatrix(self.n, self.arity)
            for i in range(o + 1):
                a, b = self.coeffs[i], other.coeffs[o - i]
                if a.terms and b.terms:
                    acc = acc + a @ b
            out.append(acc)
        return TruncatedMatrixSeries(self.n, self.arity, D, out)

    def __rmatmul__(self, other):
        if isinstance(other, TensorOperator):
            return self._like([other @ a for a in self.coeffs])
        return NotImplemented

    def times_scalar_series(self, s: list[FreeElement]) -> "TruncatedMatrixSeries":
        """Right multiplication by a scalar-valued series."""
        D = min(self.order, len(s) - 1)
        out = []
        for o in range(D + 1):
            acc = FreeMatrix(self.n, self.arity)
            for i in range(o + 1):
                if self.coeffs[i].terms and s[o - i]:
                    acc = acc + self.coeffs[i].times_element(s[o - i])
            out.append(acc)
        return TruncatedMatrixSeries(self.n, self.arity, D, out)

    def embed(self, total: int, first: int = 1) -> "TruncatedMatrixSeries":
        return TruncatedMatrixSeries(self.n, total, self.order, [a.embed(total, first) for a in self.coeffs])

    def conjugate(self, A: TensorOperator, A_inv: TensorOperator) -> "TruncatedMatrixSeries":
        return self._like([a.conjugate(A, A_inv) for a in self.coeffs])

    def truncate(self, order: int) -> "TruncatedMatrixSeries":
        if order > self.order:
            raise InsufficientTruncation(f"series known to order {self.order}, asked {order}")
        return TruncatedMatrixSeries(self.n, self.arity, order, self.coeffs[: order + 1])

    def entry(self, r: int, c: int) -> list[FreeElement]:
        return [a.entry(r, c) for a in self.coeffs]

    def trace_against(self, W: TensorOperator | None) -> list[FreeElement]:
        return [a.trace_against(W) for a in self.coeffs]

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)


# --- shifts --------------------------------------------------------------------

def _shift_coeffs(coeffs: list, additive=None, multiplicative=None, zero=None) -> list:
    D = len(coeffs) - 1
    if additive is not None and multiplicative is not None:
        raise ValueError("give one shift at a time")
    if multiplicative is not None:
        alpha = normalize(multiplicative)
        return [coeffs[0]] + [_scale(coeffs[i], normalize(alpha ** (-i))) for i in range(1, D + 1)]
    if additive is None or additive == 0:
        return list(coeffs)
    if int(additive) != additive:
        raise ValueError("additive shifts must be integers")
    c = int(additive)
    out = [coeffs[0]]
    for o in range(1, D + 1):
        acc = zero
        for i in range(1, o + 1):
            f = math.comb(o - 1, o - i) * c ** (o - i)
            if f:
                acc = acc + _scale(coeffs[i], mpq(f))
        out.append(acc)
    return out


def _scale(x, s):
    return x.scale(s) if isinstance(x, FreeMatrix) else x * s


def shift_series(s, additive=None, multiplicative=None):
    """f(u) -> f(u - additive) or f(multiplicative * u).

    Works on a TruncatedMatrixSeries or on a scalar series given as a list
    of FreeElements. (u - c)^(-i) is re-expanded with binomial coefficients.
    """
    if isinstance(s, TruncatedMatrixSeries):
        zero = FreeMatrix(s.n, s.arity)
        return TruncatedMatrixSeries(s.n, s.arity, s.order, _shift_coeffs(s.coeffs, additive, multiplicative, zero))
    return _shift_coeffs(list(s), additive, multiplicative, FreeElement.zero())


# --- presentations ----------------------------------------------------------------

@dataclass
class CurrentPresentation:
    current: CurrentRMatrix
    kind: str
    d_rel: int
    relations: RelationSet
    ideal: IdealHandle
    L0: TensorOperator | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def braiding(self) -> Braiding:
        return self.current.base

    @property
    def n(self) -> int:
        return self.braiding.n

    @property
    def family(self) -> str:
        return "t" if self.kind == RTT_TYPE else "l"

    @property
    def rational(self) -> bool:
        return self.current.g_kind == "rational"

    @property
    def hecke_q(self):
        return 1 if self.braiding.q is None else self.braiding.q

    def series(self, order: int) -> TruncatedMatrixSeries:
        key = ("L", order)
        if key not in self._cache:
            self._cache[key] = TruncatedMatrixSeries.generating(self.n, self.family, order, self.L0)
        return self._cache[key]

    def shifted(self, s, j: int):
        """The argument shift used by the j-th factor: u - j (rational) or
        q^(-2j) u (Hecke)."""
        if j == 0:
            return s
        if self.rational:
            return shift_series(s, additive=j)
        return shift_series(s, multiplicative=normalize(self.hecke_q ** (-2 * j)))

    def describe(self) -> str:
        return f"{self.kind} Yangian over {self.braiding.describe()}, g {self.current.g_kind}"


def current_relations(c: CurrentRMatrix | Braiding, kind: str = BRAIDED, d_rel: int = 3,
                      L0: TensorOperator | None = None, strategy: str = "exact", seed: int = 0,
                      trials: int = 5, cap: int = DEFAULT_CAP) -> CurrentPresentation:
    """Coefficient relations of the defining equation multiplied by (u - v).

    With G(u,v) = (u - v)R - h(u)I, the braided relations read
    G L1(u) R L1(v) - L1(v) R L1(u) G and the RTT-type ones
    G T1(u) T2(v) - T1(v) T2(u) G. The u^a v^b coefficient involves
    generator levels summing to 1 - a - b; those up to d_rel are kept.
    """
    if isinstance(c, Braiding):
        c = baxterize(c)
    if kind not in (RTT_TYPE, BRAIDED):
        raise ValueError(f"unknown Yangian kind {kind!r}")
    if d_rel < 1:
        raise ValueError("d_rel must be >= 1")
    if d_rel > MAX_LEVEL:
        raise ResourceError(f"relation level {d_rel} exceeds the cap {MAX_LEVEL}", d_rel)
    b = c.base
    n = b.n
    family = "t" if kind == RTT_TYPE else "l"
    L = TruncatedMatrixSeries.generating(n, family, d_rel, L0)
    R = b.R
    h = c.clearing_factor()
    h0 = h.get(0, 0)
    h1 = h.get(1, 0)
    X1 = [a.embed(2, 1) for a in L.coeffs]
    X2 = [a.embed(2, 2) for a in L.coeffs]
    # P[i][j]: coefficient of u^-i v^-j in the middle product of each side
    lhs_mid: dict[tuple[int, int], FreeMatrix] = {}
    rhs_mid: dict[tuple[int, int], FreeMatrix] = {}
    for i in range(d_rel + 1):
        for j in range(d_rel + 1 - i):
            if kind == BRAIDED:
                lhs_mid[i, j] = X1[i] @ R @ X1[j]
                rhs_mid[i, j] = X1[j] @ R @ X1[i]
            else:
                lhs_mid[i, j] = X1[i] @ X2[j]
                rhs_mid[i, j] = X1[j] @ X2[i]
    Ru = R - TensorOperator.scalar(n, 2, h1) if h1 else R
    coeff: dict[tuple[int, int], FreeMatrix] = {}

    def put(key, X):
        coeff[key] = coeff[key] + X if key in coeff else X

    for (i, j), X in lhs_mid.items():
        put((1 - i, -j), Ru @ X)
        put((-i, 1 - j), -(R @ X))
        if h0:
            put((-i, -j), X.scale(-h0))
    for (i, j), Y in rhs_mid.items():
        put((1 - i, -j), -(Y @ Ru))
        put((-i, 1 - j), Y @ R)
        if h0:
            put((-i, -j), Y.scale(h0))
    rels = []
    for (a_, b_), X in sorted(coeff.items()):
        if 1 - a_ - b_ > d_rel:
            continue
        rels.extend(x for x in X.entries().values() if x)
    alphabet = tuple(letter(family, i, j, k) for k in range(1, d_rel + 1) for i in range(n) for j in range(n))
    rs = RelationSet(rels, LEVEL_GRADED, alphabet)
    return CurrentPresentation(c, kind, d_rel, rs, IdealHandle(rs, strategy, seed, trials, cap), L0)


def copy_series(p: CurrentPresentation, k: int, arity: int, order: int) -> TruncatedMatrixSeries:
    """k-th (overlined for braided) copy of L(u) on V^{(x)arity}, unshifted."""
    key = ("copy", k, arity, order)
    if key in p._cache:
        return p._cache[key]
    if k == 1 or p.kind == RTT_TYPE:
        out = p.series(order).embed(arity, k)
    else:
        Rk = embed_adjacent(p.braiding.R, arity, k - 1)
        Rk_inv = embed_adjacent(p.braiding.R_inv, arity, k - 1)
        out = copy_series(p, k - 1, arity, order).conjugate(Rk, Rk_inv)
    p._cache[key] = out
    return out


def quantum_power_series(p: CurrentPresentation, k: int, order: int) -> TruncatedMatrixSeries:
    """L^[k](u) = L(shift k-1) ... L(shift 1) L(u); L^[0] = I."""
    key = ("Lk", k, order)
    if key in p._cache:
        return p._cache[key]
    if k == 0:
        out = TruncatedMatrixSeries.identity(p.n, 1, order)
    else:
        L = p.series(order)
        out = L
        for j in range(1, k):
            out = p.shifted(L, j) @ out
    p._cache[key] = out
    return out


def elementary_symmetric_series(p: CurrentPresentation, k: int, order: int) -> list[FreeElement]:
    """Tr_R(1..k) of A^(k) L_1bar(u) L_2bar(shift 1) ... L_kbar(shift k-1)."""
    key = ("e", k, order)
    if key in p._cache:
        return p._cache[key]
    if k == 0:
        out = [FreeElement.one()] + [FreeElement.zero()] * order
    else:
        A = p.braiding.skew_symmetrizers(k)[k - 1]
        if A.is_zero():
            out = [FreeElement.zero()] * (order + 1)
        else:
            X = copy_series(p, 1, k, order)
            for j in range(2, k + 1):
                X = X @ p.shifted(copy_series(p, j, k, order), j - 1)
            D = p.braiding.trace_matrix
            W = D
            for _ in range(k - 1):
                W = W.kron(D)
            out = X.trace_against(W @ A)
    p._cache[key] = out
    return out


def ch_series(p: CurrentPresentation, order: int) -> TruncatedMatrixSeries:
    """sum_k s_k L^[m-k](shift k) e_k(u) with s_k = (-1)^k or (-q)^k."""
    m = p.braiding.birank_m
    total = None
    for k in range(m + 1):
        sign = (-1) ** k if p.rational else normalize((-p.hecke_q) ** k)
        term = p.shifted(quantum_power_series(p, m - k, order), k)
        term = term.times_scalar_series(elementary_symmetric_series(p, k, order)).scale(sign)
        total = term if total is None else total + term
    return total


def _check_orders(p: CurrentPresentation, check_order: int, trunc: int) -> None:
    if check_order > trunc:
        raise InsufficientTruncation(f"order {check_order} exceeds the series truncation {trunc}")
    if check_order > p.d_rel:
        raise InsufficientTruncation(f"order {check_order} exceeds the relation level {p.d_rel}")


def verify_ch_yangian(p: CurrentPresentation, check_order: int, trunc: int | None = None) -> VerificationReport:
    trunc = check_order if trunc is None else trunc
    _check_orders(p, check_order, trunc)
    t0 = time.perf_counter()
    lhs = ch_series(p, trunc)
    flavor = "rational" if p.rational else "Hecke"
    rep = VerificationReport("ch-yangian", f"series Cayley-Hamilton identity ({flavor})", p.describe(), f"{p.kind} Yangian")
    rep.notes["orders"] = f"0..{check_order} (truncation {trunc}, relation level {p.d_rel})"
    rep.notes["setup_secs"] = f"{time.perf_counter() - t0:.3f}"
    for r in range(p.n):
        for c in range(p.n):
            coeffs = lhs.entry(r, c)
            for o in range(check_order + 1):
                rep.add(membership_item(f"entry[{r + 1},{c + 1}]u^-{o}", coeffs[o], p.ideal, check_order))
    return rep
