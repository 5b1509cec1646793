"""Constant R-matrices: validation, classification, skew-inverse, R-trace
matrix, bi-rank probe, Baxterization, and the plain-text R-matrix format."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import ArityError, BirankError, NotSkewInvertible, NotSymmetry, NotYangBaxter, ParseError
from .linalg import solve_unique
from .scalars import RationalFunction, format_scalar, is_symbolic, mpq, normalize, param, parse_scalar, q_symbol, specialize_value
from .skewsym import tower
from .tensors import TensorOperator, embed_adjacent, partial_r_trace

INVOLUTIVE = "involutive"
HECKE = "hecke"


@dataclass(frozen=True, eq=False)
class Braiding:
    n: int
    R: TensorOperator
    kind: str
    q: object  # Hecke parameter (symbolic q or a rational); None when involutive
    skew_inverse: TensorOperator
    trace_matrix: TensorOperator
    birank_m: int
    R_inv: TensorOperator
    name: str = "custom"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def skew_symmetrizers(self, kmax: int) -> list[TensorOperator]:
        ops = self._cache.get("A", [])
        if len(ops) < kmax:
            ops = tower(self.R, self.q if self.kind == HECKE else None, kmax)
            self._cache["A"] = ops
        return ops[:kmax]

    def r_trace(self, op: TensorOperator, positions=None):
        positions = range(1, op.arity + 1) if positions is None else positions
        return partial_r_trace(op, positions, self.trace_matrix)

    def specialize(self, assignment: Mapping[str, object]) -> "Braiding":
        """Same braiding with q (and parameters) replaced by rationals.

        The invariants are inherited: every check is a polynomial identity in
        q, so it survives specialization away from poles."""
        f = lambda x: specialize_value(x, assignment)
        qv = None if self.q is None else specialize_value(self.q, assignment)
        return Braiding(
            self.n, self.R.map(f), self.kind, qv, self.skew_inverse.map(f),
            self.trace_matrix.map(f), self.birank_m, self.R_inv.map(f),
            f"{self.name}@{','.join(f'{k}={v}' for k, v in sorted(assignment.items()))}",
        )

    @property
    def is_symbolic(self) -> bool:
        return any(is_symbolic(v) for _, _, v in self.R.items())

    def describe(self) -> str:
        qtxt = "" if self.q is None else f", q={format_scalar(self.q)}"
        return f"{self.name} (N={self.n}, {self.kind}{qtxt}, bi-rank ({self.birank_m}|0))"


def qybe_residual(R: TensorOperator) -> TensorOperator:
    """R_12 R_23 R_12 - R_23 R_12 R_23 on V^{(x)3}."""
    R1 = embed_adjacent(R, 3, 1)
    R2 = embed_adjacent(R, 3, 2)
    return R1 @ R2 @ R1 - R2 @ R1 @ R2


def hecke_residual(R: TensorOperator, q) -> TensorOperator:
    n = R.n
    return (TensorOperator.scalar(n, 2, q) - R) @ (TensorOperator.scalar(n, 2, 1 / q) + R)


def skew_inverse(R: TensorOperator) -> TensorOperator:
    """The Psi with Tr_(2)(R_12 Psi_23) = P_13 (unweighted trace on factor 2).

    In components: sum_{b,x} R[(a,b),(a',x)] Psi[(x,c),(b,c')] = delta(a,c') delta(c,a').
    """
    if R.arity != 2:
        raise ArityError("skew_inverse needs an arity-2 operator")
    n = R.n
    unknowns = list(itertools.product(range(n), repeat=4))  # (x, c, b, c')
    eqs = []
    for a, ap, c, cp in itertools.product(range(n), repeat=4):
        coeffs: dict = {}
        for b, x in itertools.product(range(n), repeat=2):
            v = R[(a, b), (ap, x)]
            if v:
                key = (x, c, b, cp)
                coeffs[key] = coeffs.get(key, 0) + v
        eqs.append((coeffs, mpq(1) if (a == cp and c == ap) else mpq(0)))
    sol = solve_unique(eqs, unknowns)
    if sol is None:
        raise NotSkewInvertible("the skew-inverse linear system is singular")
    return TensorOperator.from_entries(n, 2, {((x, c), (b, cp)): v for (x, c, b, cp), v in sol.items()})


def skew_inverse_residual(R: TensorOperator, psi: TensorOperator) -> dict:
    """Entries of Tr_(2)(R_12 Psi_23) - P_13 that fail to vanish."""
    n = R.n
    bad = {}
    for a, ap, c, cp in itertools.product(range(n), repeat=4):
        acc = 0
        for b, x in itertools.product(range(n), repeat=2):
            r = R[(a, b), (ap, x)]
            if r:
                acc = acc + r * psi[(x, c), (b, cp)]
        acc = acc - (1 if (a == cp and c == ap) else 0)
        if acc:
            bad[(a, c, ap, cp)] = acc
    return bad


def trace_matrix(psi: TensorOperator) -> TensorOperator:
    """D = Tr_(2) Psi, acting on factor 1."""
    return partial_r_trace(psi, [2])


def birank_probe(R: TensorOperator, q) -> tuple[int, list[int]]:
    """Return (m, ranks of A^(1..m+1)); raises BirankError unless rank A^(m) = 1
    and A^(m+1) = 0 for some m <= n."""
    n = R.n
    ops = tower(R, q, n + 1)
    ranks = [op.rank() for op in ops]
    m = None
    for k, r in enumerate(ranks, start=1):
        if r == 0:
            m = k - 1
            break
    if m is None or m == 0:
        raise BirankError(f"skew-symmetrizers do not vanish by level {n + 1} (ranks {ranks})")
    if ranks[m - 1] != 1:
        raise BirankError(f"rank A^({m}) = {ranks[m - 1]}, expected 1")
    return m, ranks[: m + 1]


def validate(R: TensorOperator, claimed_q=None, name: str = "custom") -> Braiding:
    """Check the braid relation, classify R, and compute its R-trace data."""
    if R.arity != 2:
        raise ArityError("an R-matrix acts on V (x) V")
    res = qybe_residual(R)
    if not res.is_zero():
        raise NotYangBaxter({(r, c): v for r, c, v in res.items()})
    n = R.n
    if (R @ R) == TensorOperator.identity(n, 2):
        kind, q = INVOLUTIVE, None
        R_inv = R
    else:
        q = claimed_q
        if q is None:
            q = q_symbol() if any(is_symbolic(v) for _, _, v in R.items()) else None
        if q is None or not hecke_residual(R, q).is_zero():
            raise NotSymmetry("R is neither involutive nor a Hecke symmetry for the given q")
        if (q * q) == 1:
            raise NotSymmetry("Hecke symmetries need q^2 != 1")
        kind = HECKE
        q = normalize(q)
        # R^{-1} = R - (q - q^{-1}) I from the Hecke condition
        R_inv = R - TensorOperator.scalar(n, 2, q - 1 / q)
    psi = skew_inverse(R)
    D = trace_matrix(psi)
    m, _ = birank_probe(R, q)
    return Braiding(n, R, kind, q, psi, D, m, R_inv, name)


# --- built-ins ---------------------------------------------------------------

def flip(n: int) -> TensorOperator:
    return TensorOperator.flip(n)


def standard_hecke(n: int, q=None) -> TensorOperator:
    """Drinfeld-Jimbo type: q on e_i(x)e_i, the flip off the diagonal, and
    (q - q^{-1}) on e_i(x)e_j for i < j."""
    q = q_symbol() if q is None else q
    entries = {}
    for i in range(n):
        entries[((i, i), (i, i))] = q
        for j in range(n):
            if i != j:
                entries[((i, j), (j, i))] = 1
            if i < j:
                entries[((i, j), (i, j))] = q - 1 / q
    return TensorOperator.from_entries(n, 2, entries)


BUILTINS = {"flip": "flip", "uq-gl": "uq-gl", "hecke": "uq-gl", "std": "uq-gl"}


def builtin(name: str, n: int) -> Braiding:
    key = BUILTINS.get(name)
    if key is None:
        raise ValueError(f"unknown built-in braiding {name!r}; choose from {sorted(BUILTINS)}")
    if n < 1:
        raise ValueError("N must be positive")
    if key == "flip":
        return validate(flip(n), name=f"flip{n}")
    return validate(standard_hecke(n), q_symbol(), name=f"uq-gl{n}")


# --- Baxterization -----------------------------------------------------------

@dataclass(frozen=True)
class CurrentRMatrix:
    """R(u,v) = R - g(u,v) I with g = 1/(u-v) (involutive) or (q-q^-1)u/(u-v) (Hecke)."""

    base: Braiding
    g_kind: str

    def __post_init__(self):
        expected = "rational" if self.base.kind == INVOLUTIVE else "hecke"
        if self.g_kind != expected:
            raise ValueError(f"g_kind {self.g_kind!r} does not match a {self.base.kind} braiding")

    def clearing_factor(self) -> dict[int, object]:
        """h(u) = (u - v) g(u, v) as {power of u: coefficient}."""
        if self.g_kind == "rational":
            return {0: mpq(1)}
        q = self.base.q
        return {1: normalize(q - 1 / q)}

    def g(self, u=None, v=None):
        u = param("u") if u is None else u
        v = param("v") if v is None else v
        h = sum((c * u**p for p, c in self.clearing_factor().items()), 0)
        return normalize(h / (u - v))

    def at(self, u=None, v=None) -> TensorOperator:
        n = self.base.n
        return self.base.R - TensorOperator.scalar(n, 2, self.g(u, v))


def baxterize(b: Braiding) -> CurrentRMatrix:
    return CurrentRMatrix(b, "rational" if b.kind == INVOLUTIVE else "hecke")


# --- file format -------------------------------------------------------------

def format_rmatrix(R: TensorOperator) -> str:
    """Header ``rmatrix N=<n>`` then ``i j k l <scalar>`` per nonzero entry,
    meaning R(e_k (x) e_l) has coefficient <scalar> at e_i (x) e_j (1-based)."""
    n = R.n
    lines = [f"rmatrix N={n}"]
    entries = []
    for r, c, v in R.items():
        i, j = divmod(r, n)
        k, l = divmod(c, n)
        entries.append(((i + 1, j + 1, k + 1, l + 1), v))
    for (i, j, k, l), v in sorted(entries, key=lambda e: e[0]):
        lines.append(f"{i} {j} {k} {l} {format_scalar(v)}")
    return "\n".join(lines) + "\n"


def parse_rmatrix(text: str) -> TensorOperator:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("rmatrix"):
        raise ParseError("missing 'rmatrix N=<n>' header")
    head = lines[0].split()
    try:
        (_, size) = head
        key, val = size.split("=")
        if key != "N":
            raise ValueError(key)
        n = int(val)
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    entries: dict = {}
    for ln in lines[1:]:
        parts = ln.split(None, 4)
        if len(parts) != 5:
            raise ParseError(f"bad entry line {ln!r}")
        try:
            i, j, k, l = (int(x) - 1 for x in parts[:4])
        except ValueError as exc:
            raise ParseError(f"bad indices in {ln!r}") from exc
        if not all(0 <= x < n for x in (i, j, k, l)):
            raise ParseError(f"index out of range in {ln!r}")
        key = ((i, j), (k, l))
        if key in entries:
            raise ParseError(f"duplicate entry {ln!r}")
        entries[key] = parse_scalar(parts[4])
    return TensorOperator.from_entries(n, 2, entries)


def load_rmatrix(path: str | Path) -> TensorOperator:
    return parse_rmatrix(Path(path).read_text(encoding="utf-8"))


def save_rmatrix(R: TensorOperator, path: str | Path) -> None:
    Path(path).write_text(format_rmatrix(R), encoding="utf-8")
