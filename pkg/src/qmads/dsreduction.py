"""Second canonical (companion) forms, Krylov-type matrices C and the
intertwining identities C L = L_can C (constant case) and
L(u) C(shifted u) = C(u) L_can(u) (Yangian case)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .algebras import RE, RTT, AlgebraPresentation
from .charpoly import characteristic_polynomial
from .errors import ZeroVector
from .freealg import FreeElement, FreeMatrix, row_vector_times
from .report import VerificationReport, membership_item, zero_item
from .scalars import mpq, normalize, param, register_parameters
from .yangians import (
    CurrentPresentation,
    _check_orders,
    elementary_symmetric_series,
    quantum_power_series,
    shift_series,
)

CONSTANT_ROW = "constant_row"
SERIES_COLUMN = "series_column"
ROW_STACK = "row_stack"
COLUMN_STACK = "column_stack"


@dataclass
class CanonicalForm:
    """Companion matrix of size m.

    constant_row: ones on the superdiagonal of the first m-1 rows and the
    last row (a_m, ..., a_1). series_column: the transposed layout, ones on
    the subdiagonal and last column (a_m(u), ..., a_1(u)) top to bottom.
    ``entries[k-1]`` is a_k (a FreeElement, or a list of FreeElements).
    """

    variant: str
    m: int
    entries: list

    def a(self, k: int):
        return self.entries[k - 1]

    def grid(self) -> list[list]:
        m = self.m
        zero = FreeElement.zero()
        one = FreeElement.one()
        if self.variant == CONSTANT_ROW:
            g = [[one if c == r + 1 else zero for c in range(m)] for r in range(m - 1)]
            g.append([self.a(m - c) for c in range(m)])
            return g
        order = len(self.entries[0]) - 1
        zs = [zero] * (order + 1)
        os_ = [one] + [zero] * order
        g = [[os_ if r == c + 1 else zs for c in range(m)] for r in range(m)]
        for r in range(m):
            g[r][m - 1] = self.a(m - r)
        return g


def canonical_form(a: AlgebraPresentation) -> CanonicalForm:
    """a_k = -b_k for the monic characteristic polynomial t^m + b_1 t^(m-1) + ...;
    for RE this is a_k = -(-q)^k e_k(L)."""
    poly = characteristic_polynomial(a)
    m = poly.degree
    return CanonicalForm(CONSTANT_ROW, m, [-poly.coefficients[m - k] for k in range(1, m + 1)])


def canonical_form_series(p: CurrentPresentation, order: int) -> CanonicalForm:
    """a_k(u) = (-1)^(k+1) e_k(u+m-1) (rational) or -(-q)^k e_k(q^(2(m-1)) u) (Hecke)."""
    m = p.braiding.birank_m
    ents = []
    for k in range(1, m + 1):
        e = elementary_symmetric_series(p, k, order)
        if p.rational:
            ents.append([x * ((-1) ** (k + 1)) for x in shift_series(e, additive=-(m - 1))])
        else:
            q = p.hecke_q
            s = shift_series(e, multiplicative=normalize(q ** (2 * (m - 1))))
            f = normalize(-((-q) ** k))
            ents.append([x * f for x in s])
    return CanonicalForm(SERIES_COLUMN, m, ents)


def vector(n: int, v_mode="symbolic") -> list:
    """Central parameters v1..vN, or a rational vector from a list."""
    if v_mode == "symbolic":
        names = [f"v{i + 1}" for i in range(n)]
        register_parameters(*names)
        return [param(nm) for nm in names]
    vals = [mpq(x) for x in v_mode]
    if len(vals) != n:
        raise ValueError(f"vector needs {n} entries, got {len(vals)}")
    if not any(vals):
        raise ZeroVector("v must be nonzero")
    return vals


@dataclass
class KrylovMatrix:
    variant: str
    v: list
    body: list  # row_stack: m rows of N FreeElements; column_stack: N x m grid of series


def krylov_matrix(a: AlgebraPresentation, v_mode="symbolic") -> KrylovMatrix:
    """Rows v, vL, ..., vL^(m-1) with v a row vector of central scalars."""
    m = characteristic_polynomial(a).degree
    v = vector(a.n, v_mode)
    row = [FreeElement.scalar(x) for x in v]
    rows = [row]
    for _ in range(m - 1):
        row = row_vector_times(row, a.generators)
        rows.append(row)
    return KrylovMatrix(ROW_STACK, v, rows)


def _grid_times_matrix(rows: list[list[FreeElement]], G: FreeMatrix) -> list[list[FreeElement]]:
    return [row_vector_times(r, G) for r in rows]


def _grid_product(A: list[list[FreeElement]], B: list[list[FreeElement]]) -> list[list[FreeElement]]:
    out = []
    for r in A:
        row = []
        for c in range(len(B[0])):
            acc = FreeElement.zero()
            for k, x in enumerate(r):
                if x and B[k][c]:
                    acc = acc + x * B[k][c]
            row.append(acc)
        out.append(row)
    return out


def similarity_residual_constant(a: AlgebraPresentation, v_mode="symbolic") -> list[list[FreeElement]]:
    C = krylov_matrix(a, v_mode).body
    Lc = canonical_form(a).grid()
    CL = _grid_times_matrix(C, a.generators)
    LC = _grid_product(Lc, C)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(CL, LC)]


def verify_similarity_constant(a: AlgebraPresentation, v_mode="symbolic") -> VerificationReport:
    if a.kind == RTT:
        raise ValueError("the companion-form similarity concerns RE, ModifiedRE and UglN")
    t0 = time.perf_counter()
    res = similarity_residual_constant(a, v_mode)
    m = len(res)
    from .charpoly import _describe

    rep = VerificationReport("ds", "companion-form similarity C L = L_can C", _describe(a), a.kind)
    rep.notes["v"] = "symbolic v1..vN" if v_mode == "symbolic" else ",".join(str(x) for x in v_mode)
    rep.notes["setup_secs"] = f"{time.perf_counter() - t0:.3f}"
    for r in range(m):
        for c in range(a.n):
            iid = f"row{r + 1}[{c + 1}]"
            if r < m - 1:
                rep.add(zero_item(iid, res[r][c], r + 1))
            else:
                rep.add(membership_item(iid, res[r][c], a.ideal, m))
    return rep


# --- Yangian case -------------------------------------------------------------

def _series_zero(order: int) -> list[FreeElement]:
    return [FreeElement.zero()] * (order + 1)


def _series_mul(x: list[FreeElement], y: list[FreeElement]) -> list[FreeElement]:
    D = min(len(x), len(y)) - 1
    out = []
    for o in range(D + 1):
        acc = FreeElement.zero()
        for i in range(o + 1):
            if x[i] and y[o - i]:
                acc = acc + x[i] * y[o - i]
        out.append(acc)
    return out


def _series_add(x, y):
    return [a + b for a, b in zip(x, y)]


def _matrix_series_times_vector(S, v: list) -> list[list[FreeElement]]:
    """(S v)_i as scalar series; v holds central scalars."""
    out = []
    for i in range(S.n):
        acc = _series_zero(S.order)
        for j in range(S.n):
            if v[j]:
                acc = _series_add(acc, [x * v[j] for x in S.entry(i, j)])
        out.append(acc)
    return out


def krylov_series(p: CurrentPresentation, order: int, v_mode="symbolic") -> KrylovMatrix:
    """Columns v, L(u)v, L^[2](shift)v, ..., with column k+1 equal to
    L^[k](u+k-1)v (rational) or L^[k](q^(2(k-1))u)v (Hecke)."""
    m = p.braiding.birank_m
    v = vector(p.n, v_mode)
    cols = []
    for k in range(m):
        Lk = quantum_power_series(p, k, order)
        if k:
            Lk = shift_operator_conjugate_k(p, Lk, k - 1)
        cols.append(_matrix_series_times_vector(Lk, v))
    grid = [[cols[c][r] for c in range(m)] for r in range(p.n)]
    return KrylovMatrix(COLUMN_STACK, v, grid)


def shift_operator_conjugate(f, kind: str, q=None):
    """f(u) -> f(u+1) (additive_exp) or f(q^2 u) (multiplicative_q)."""
    if kind == "additive_exp":
        return shift_series(f, additive=-1)
    if kind == "multiplicative_q":
        if q is None:
            raise ValueError("multiplicative shift needs q")
        return shift_series(f, multiplicative=normalize(q * q))
    raise ValueError(f"unknown shift kind {kind!r}")


def shift_operator_conjugate_k(p: CurrentPresentation, f, times: int):
    kind = "additive_exp" if p.rational else "multiplicative_q"
    for _ in range(times):
        f = shift_operator_conjugate(f, kind, p.hecke_q)
    return f


def similarity_residual_yangian(p: CurrentPresentation, order: int, v_mode="symbolic"):
    """L(u) C(u+1) - C(u) L_can(u) (rational) or L(u) C(q^2 u) - C(u) L_can(u)."""
    m = p.braiding.birank_m
    n = p.n
    C = krylov_series(p, order, v_mode).body
    Cs = [[shift_operator_conjugate_k(p, C[r][c], 1) for c in range(m)] for r in range(n)]
    L = p.series(order)
    Lent = [[L.entry(i, j) for j in range(n)] for i in range(n)]
    left = [[_series_zero(order) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for c in range(m):
            acc = _series_zero(order)
            for j in range(n):
                acc = _series_add(acc, _series_mul(Lent[i][j], Cs[j][c]))
            left[i][c] = acc
    Lc = canonical_form_series(p, order).grid()
    right = [[_series_zero(order) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for c in range(m):
            acc = _series_zero(order)
            for k in range(m):
                acc = _series_add(acc, _series_mul(C[i][k], Lc[k][c]))
            right[i][c] = acc
    return [[[x - y for x, y in zip(left[i][c], right[i][c])] for c in range(m)] for i in range(n)]


def verify_similarity_yangian(p: CurrentPresentation, v_mode="symbolic", check_order: int = 3,
                              trunc: int | None = None) -> VerificationReport:
    trunc = check_order if trunc is None else trunc
    _check_orders(p, check_order, trunc)
    t0 = time.perf_counter()
    res = similarity_residual_yangian(p, trunc, v_mode)
    m = p.braiding.birank_m
    flavor = "rational" if p.rational else "Hecke"
    rep = VerificationReport("ds-yangian", f"series companion-form similarity ({flavor})", p.describe(),
                             f"{p.kind} Yangian")
    rep.notes["v"] = "symbolic v1..vN" if v_mode == "symbolic" else ",".join(str(x) for x in v_mode)
    rep.notes["orders"] = f"0..{check_order} (truncation {trunc}, relation level {p.d_rel})"
    rep.notes["setup_secs"] = f"{time.perf_counter() - t0:.3f}"
    for i in range(p.n):
        for c in range(m):
            if c < m - 1:
                for o in range(trunc + 1):
                    rep.add(zero_item(f"col{c + 1}[{i + 1}]u^-{o}", res[i][c][o], o))
            else:
                for o in range(check_order + 1):
                    rep.add(membership_item(f"col{c + 1}[{i + 1}]u^-{o}", res[i][c][o], p.ideal, check_order))
    return rep


def random_vectors(n: int, seed: int, count: int = 3) -> list[list]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        if any(v):
            out.append(v)
    return out
