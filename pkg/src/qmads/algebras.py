"""Quadratic matrix algebras attached to a braiding: RTT, reflection
equation (RE), modified RE, and U(gl(N))."""

from __future__ import annotations

from dataclasses import dataclass, field

from .braidings import Braiding, builtin
from .freealg import (
    HOMOGENEOUS,
    QUADRATIC_LINEAR,
    DEFAULT_CAP,
    FreeMatrix,
    IdealHandle,
    PBWHandle,
    RelationSet,
    letter,
)
from .tensors import TensorOperator

RTT = "RTT"
RE = "RE"
MODIFIED_RE = "ModifiedRE"
UGL = "UglN"
KINDS = (RTT, RE, MODIFIED_RE, UGL)

_ALIASES = {
    "rtt": RTT, "re": RE, "modifiedre": MODIFIED_RE, "mre": MODIFIED_RE,
    "modified-re": MODIFIED_RE, "uglm": UGL, "ugln": UGL, "ugl": UGL, "u(gl)": UGL,
}
_FAMILY = {RTT: "t", RE: "l", MODIFIED_RE: "lh", UGL: "m"}


def canonical_kind(kind: str) -> str:
    k = _ALIASES.get(kind.lower().replace("_", ""))
    if k is None:
        raise ValueError(f"unknown algebra {kind!r}; choose from {list(KINDS)}")
    return k


@dataclass
class AlgebraPresentation:
    kind: str
    braiding: Braiding
    generators: FreeMatrix
    relations: RelationSet
    ideal: object
    _copies: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.braiding.n

    @property
    def family(self) -> str:
        return _FAMILY[self.kind]

    @property
    def trace_matrix(self) -> TensorOperator | None:
        # U(gl(N)) uses the plain trace; the flip has D = I anyway
        return None if self.kind == UGL else self.braiding.trace_matrix

    @property
    def hecke_q(self):
        """q for Hecke braidings, 1 for involutive ones."""
        return 1 if self.braiding.q is None else self.braiding.q

    def skew_symmetrizer(self, k: int) -> TensorOperator:
        if self.kind == UGL:
            from .skewsym import classical_antisymmetrizer

            key = ("classicalA", k)
            if key not in self._copies:
                self._copies[key] = classical_antisymmetrizer(self.n, k)
            return self._copies[key]
        return self.braiding.skew_symmetrizers(k)[k - 1]

    def copy(self, k: int, arity: int) -> FreeMatrix:
        """The k-th copy of the generating matrix on V^{(x)arity}: the plain
        embedding for RTT, the braided (overlined) copy otherwise."""
        return overlined_copy(self, k, arity)

    def with_strategy(self, strategy: str, seed: int = 0, trials: int = 5) -> "AlgebraPresentation":
        return present(self.kind, self.braiding, strategy, seed, trials)


def _relations(kind: str, b: Braiding, G: FreeMatrix) -> list:
    R = b.R
    G1 = G.embed(2, 1)
    if kind == RTT:
        G2 = G.embed(2, 2)
        rel = R @ G1 @ G2 - G1 @ G2 @ R
    else:
        rel = R @ G1 @ R @ G1 - G1 @ R @ G1 @ R
        if kind in (MODIFIED_RE, UGL):
            rel = rel - (R @ G1 - G1 @ R)
    return [x for x in rel.entries().values() if x]


def present(kind: str, braiding: Braiding | int, strategy: str = "exact", seed: int = 0,
            trials: int = 5, cap: int = DEFAULT_CAP) -> AlgebraPresentation:
    """Build generators, relations and an ideal handle.

    For U(gl(N)) ``braiding`` may be the integer N; the flip is used.
    """
    kind = canonical_kind(kind)
    if isinstance(braiding, int):
        braiding = builtin("flip", braiding)
    if kind == UGL and braiding.kind != "involutive":
        raise ValueError("U(gl(N)) is built on the flip")
    fam = _FAMILY[kind]
    n = braiding.n
    G = FreeMatrix.generating(n, fam)
    rels = _relations(kind, braiding, G)
    alphabet = tuple(letter(fam, i, j) for i in range(n) for j in range(n))
    grading = HOMOGENEOUS if kind in (RTT, RE) else QUADRATIC_LINEAR
    rs = RelationSet(rels, grading, alphabet)
    ideal = PBWHandle(rs) if kind == UGL else IdealHandle(rs, strategy, seed, trials, cap)
    return AlgebraPresentation(kind, braiding, G, rs, ideal)


def overlined_copy(a: AlgebraPresentation, k: int, arity: int) -> FreeMatrix:
    """L_1bar = L_1 and L_kbar = R_{k-1} L_{(k-1)bar} R_{k-1}^{-1}."""
    if not 1 <= k <= arity:
        raise ValueError(f"copy index {k} outside 1..{arity}")
    key = (k, arity)
    hit = a._copies.get(key)
    if hit is not None:
        return hit
    if a.kind == RTT or k == 1:
        out = a.generators.embed(arity, k)
    else:
        from .tensors import embed_adjacent

        prev = overlined_copy(a, k - 1, arity)
        Rk = embed_adjacent(a.braiding.R, arity, k - 1)
        Rk_inv = embed_adjacent(a.braiding.R_inv, arity, k - 1)
        out = prev.conjugate(Rk, Rk_inv)
    a._copies[key] = out
    return out
