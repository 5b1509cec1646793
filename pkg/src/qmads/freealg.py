"""Free associative algebras on matrix generators, operator-valued matrices
over them, and degree-sliced ideal membership.

Letters are small ints packing (family, level, i, j); a word is a tuple of
letters. Generators of constant algebras have level 0 and filtration weight
1; the graded Yangian generators l[k] have level and weight k.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import GenericityError, PoleError, ResourceError
from .linalg import Echelon, echelon_from_rows
from .scalars import RationalFunction, format_scalar, mpq, normalize, polynomial_parts, specialize_value
from .tensors import TensorOperator, embed, partial_r_trace

FAMILIES = {"t": 1, "l": 2, "lh": 3, "m": 4}
_FAMILY_NAMES = {v: k for k, v in FAMILIES.items()}
_DISPLAY = {"t": "t", "l": "l", "lh": "ĥl", "m": "m"}

DEFAULT_CAP = 200_000


def letter(family: str, i: int, j: int, level: int = 0) -> int:
    """Generator (family)[level]_i^j with 0-based i, j."""
    return ((FAMILIES[family] * 64 + level) * 64 + i) * 64 + j


def decode(a: int) -> tuple[str, int, int, int]:
    rest, j = divmod(a, 64)
    rest, i = divmod(rest, 64)
    code, level = divmod(rest, 64)
    return _FAMILY_NAMES[code], level, i, j


def letter_weight(a: int) -> int:
    return max((a >> 12) & 63, 1)


def word_weight(w: tuple[int, ...]) -> int:
    return sum(max((a >> 12) & 63, 1) for a in w)


def letter_name(a: int) -> str:
    fam, level, i, j = decode(a)
    base = _DISPLAY[fam]
    if level:
        base += f"[{level}]"
    return f"{base}_{i + 1}^{j + 1}"


def word_key(w: tuple[int, ...]):
    """Graded-lexicographic order; the pivot of a row is its maximal word."""
    return (word_weight(w), len(w), w)


class FreeElement:
    """A noncommutative polynomial: {word: nonzero scalar}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self.terms = {w: normalize(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "FreeElement":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def generator(cls, a: int) -> "FreeElement":
        return cls._raw({(a,): mpq(1)})

    @classmethod
    def scalar(cls, c) -> "FreeElement":
        c = normalize(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def one(cls) -> "FreeElement":
        return cls._raw({(): mpq(1)})

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls._raw({})

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return FreeElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return FreeElement.scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    nc = out.get(w, 0) + c1 * c2
                    if nc:
                        out[w] = nc
                    else:
                        out.pop(w, None)
            return FreeElement._raw({w: normalize(c) for w, c in out.items()})
        other = normalize(other)
        if not other:
            return FreeElement.zero()
        return FreeElement._raw({w: normalize(c * other) for w, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    # inspection -----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        return (self - other).is_zero()

    def __hash__(self):  # pragma: no cover
        return hash(len(self.terms))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def weight(self) -> int:
        return max((word_weight(w) for w in self.terms), default=-1)

    def letters(self) -> set[int]:
        return {a for w in self.terms for a in w}

    def homogeneous_parts(self, by: Callable[[tuple], int] = len) -> dict[int, "FreeElement"]:
        parts: dict[int, dict] = {}
        for w, c in self.terms.items():
            parts.setdefault(by(w), {})[w] = c
        return {d: FreeElement._raw(t) for d, t in parts.items()}

    def map_coefficients(self, f: Callable[[object], object]) -> "FreeElement":
        return FreeElement({w: f(c) for w, c in self.terms.items()})

    def specialize(self, assignment: Mapping[str, object]) -> "FreeElement":
        return self.map_coefficients(lambda c: specialize_value(c, assignment))

    def scalar_variables(self) -> set[str]:
        out: set[str] = set()
        for c in self.terms.values():
            if isinstance(c, RationalFunction):
                out |= c.variables()
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=word_key):
            c = format_scalar(self.terms[w])
            mono = "*".join(letter_name(a) for a in w)
            if not w:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            elif c == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FreeElement({self})"


def commutator(a: FreeElement, b: FreeElement) -> FreeElement:
    return a * b - b * a


def generating_letters(n: int, family: str, level: int = 0) -> list[list[int]]:
    return [[letter(family, i, j, level) for j in range(n)] for i in range(n)]


class FreeMatrix:
    """A matrix with free-algebra entries, stored as sum_w w (x) M_w where
    each M_w is a scalar TensorOperator on V^{(x)arity}.

    Products, conjugations and R-traces then reduce to scalar operator
    arithmetic on the coefficients.
    """

    __slots__ = ("n", "arity", "terms")

    def __init__(self, n: int, arity: int, terms: Mapping[tuple, TensorOperator] | None = None):
        self.n = n
        self.arity = arity
        self.terms = {w: op for w, op in (terms or {}).items() if not op.is_zero()}

    @classmethod
    def generating(cls, n: int, family: str, level: int = 0) -> "FreeMatrix":
        return cls(n, 1, {(letter(family, i, j, level),): TensorOperator.unit(n, i, j) for i in range(n) for j in range(n)})

    @classmethod
    def constant(cls, op: TensorOperator) -> "FreeMatrix":
        return cls(op.n, op.arity, {(): op})

    @classmethod
    def identity(cls, n: int, arity: int = 1) -> "FreeMatrix":
        return cls.constant(TensorOperator.identity(n, arity))

    @classmethod
    def from_element(cls, x: FreeElement, n: int, arity: int = 1) -> "FreeMatrix":
        """x times the identity operator."""
        return cls(n, arity, {w: TensorOperator.scalar(n, arity, c) for w, c in x.terms.items()})

    @classmethod
    def from_grid(cls, grid: list[list[FreeElement]]) -> "FreeMatrix":
        n = len(grid)
        terms: dict[tuple, dict] = {}
        for i, row in enumerate(grid):
            for j, x in enumerate(row):
                for w, c in x.terms.items():
                    terms.setdefault(w, {}).setdefault(i, {})[j] = c
        return cls(n, 1, {w: TensorOperator(n, 1, rows) for w, rows in terms.items()})

    def _like(self, terms) -> "FreeMatrix":
        out = FreeMatrix.__new__(FreeMatrix)
        out.n, out.arity = self.n, self.arity
        out.terms = {w: op for w, op in terms.items() if not op.is_zero()}
        return out

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "FreeMatrix") -> "FreeMatrix":
        if isinstance(other, TensorOperator):
            other = FreeMatrix.constant(other)
        out = dict(self.terms)
        for w, op in other.terms.items():
            out[w] = out[w] + op if w in out else op
        return self._like(out)

    def __neg__(self):
        return self._like({w: -op for w, op in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, TensorOperator):
            other = FreeMatrix.constant(other)
        return self + (-other)

    def scale(self, s) -> "FreeMatrix":
        return self._like({w: op.scale(s) for w, op in self.terms.items()})

    def __matmul__(self, other):
        if isinstance(other, TensorOperator):
            return self._like({w: op @ other for w, op in self.terms.items()})
        if not isinstance(other, FreeMatrix):
            return NotImplemented
        out: dict[tuple, TensorOperator] = {}
        for w1, a in self.terms.items():
            for w2, b in other.terms.items():
                p = a @ b
                if p.is_zero():
                    continue
                w = w1 + w2
                out[w] = out[w] + p if w in out else p
        return self._like(out)

    def __rmatmul__(self, other):
        if isinstance(other, TensorOperator):
            return self._like({w: other @ op for w, op in self.terms.items()})
        return NotImplemented

    def times_element(self, x: FreeElement) -> "FreeMatrix":
        """self * x with the scalar-valued x on the right of every entry."""
        out: dict[tuple, TensorOperator] = {}
        for w1, op in self.terms.items():
            for w2, c in x.terms.items():
                p = op.scale(c)
                w = w1 + w2
                out[w] = out[w] + p if w in out else p
        return self._like(out)

    def element_times(self, x: FreeElement) -> "FreeMatrix":
        out: dict[tuple, TensorOperator] = {}
        for w2, c in x.terms.items():
            for w1, op in self.terms.items():
                p = op.scale(c)
                w = w2 + w1
                out[w] = out[w] + p if w in out else p
        return self._like(out)

    def power(self, k: int) -> "FreeMatrix":
        out = FreeMatrix.identity(self.n, self.arity)
        for _ in range(k):
            out = out @ self
        return out

    def embed(self, total_arity: int, first: int = 1) -> "FreeMatrix":
        out = FreeMatrix.__new__(FreeMatrix)
        out.n, out.arity = self.n, total_arity
        out.terms = {w: embed(op, total_arity, first) for w, op in self.terms.items()}
        return out

    def conjugate(self, A: TensorOperator, A_inv: TensorOperator) -> "FreeMatrix":
        return self._like({w: A @ op @ A_inv for w, op in self.terms.items()})

    def map_coefficients(self, f) -> "FreeMatrix":
        return self._like({w: op.map(f) for w, op in self.terms.items()})

    # inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeMatrix):
            return NotImplemented
        return self.n == other.n and self.arity == other.arity and (self - other).is_zero()

    def __hash__(self):  # pragma: no cover
        return hash((self.n, self.arity, len(self.terms)))

    def entry(self, r, c) -> FreeElement:
        if isinstance(r, tuple):
            r = _flat(r, self.n)
            c = _flat(c, self.n)
        out = {}
        for w, op in self.terms.items():
            v = op.rows.get(r, {}).get(c)
            if v:
                out[w] = v
        return FreeElement._raw(out)

    def entries(self) -> dict[tuple[int, int], FreeElement]:
        acc: dict[tuple[int, int], dict] = {}
        for w, op in self.terms.items():
            for r, c, v in op.items():
                acc.setdefault((r, c), {})[w] = v
        return {k: FreeElement._raw(t) for k, t in acc.items()}

    def grid(self) -> list[list[FreeElement]]:
        dim = self.n**self.arity
        ent = self.entries()
        return [[ent.get((i, j), FreeElement.zero()) for j in range(dim)] for i in range(dim)]

    def r_trace(self, positions=None, weight: TensorOperator | None = None):
        """Partial (R-)trace; tracing every position gives a FreeElement."""
        positions = list(range(1, self.arity + 1)) if positions is None else list(positions)
        if len(set(positions)) == self.arity:
            return self.trace_against(_weight_power(weight, self.n, self.arity))
        terms = {w: partial_r_trace(op, positions, weight) for w, op in self.terms.items()}
        out = FreeMatrix.__new__(FreeMatrix)
        out.n, out.arity = self.n, self.arity - len(set(positions))
        out.terms = {w: op for w, op in terms.items() if not op.is_zero()}
        return out

    def trace_against(self, W: TensorOperator | None) -> FreeElement:
        """sum_w w * Tr(W M_w) (plain trace when W is None)."""
        out = {}
        for w, op in self.terms.items():
            acc = 0
            if W is None:
                for r, row in op.rows.items():
                    v = row.get(r)
                    if v:
                        acc = acc + v
            else:
                wr = W.rows
                for c, row in op.rows.items():
                    for r, x in row.items():
                        d = wr.get(r, {}).get(c)
                        if d:
                            acc = acc + d * x
            if acc:
                out[w] = normalize(acc)
        return FreeElement._raw(out)

    def __repr__(self) -> str:
        return f"FreeMatrix(n={self.n}, arity={self.arity}, words={len(self.terms)})"


def _flat(digits, n):
    r = 0
    for d in digits:
        r = r * n + d
    return r


def _weight_power(weight: TensorOperator | None, n: int, k: int) -> TensorOperator | None:
    if weight is None:
        return None
    out = weight
    for _ in range(k - 1):
        out = out.kron(weight)
    return out


def row_vector_times(v: list, G: FreeMatrix) -> list[FreeElement]:
    """(v G)_j = sum_i v_i G_ij for a row of FreeElements (or scalars)."""
    n = G.n
    out = [FreeElement.zero() for _ in range(n)]
    ent = G.entries()
    for (i, j), x in ent.items():
        vi = v[i]
        if isinstance(vi, FreeElement):
            if vi:
                out[j] = out[j] + vi * x
        elif vi:
            out[j] = out[j] + x * vi
    return out


# --- relations and ideals ----------------------------------------------------

HOMOGENEOUS = "homogeneous-quadratic"
QUADRATIC_LINEAR = "quadratic-linear"
LEVEL_GRADED = "graded-by-level"


@dataclass
class RelationSet:
    relations: list[FreeElement]
    grading: str
    alphabet: tuple[int, ...]

    def __post_init__(self):
        self.relations = [r for r in self.relations if r]
        if self.grading not in (HOMOGENEOUS, QUADRATIC_LINEAR, LEVEL_GRADED):
            raise ValueError(f"unknown grading {self.grading!r}")
        if self.grading == HOMOGENEOUS:
            for r in self.relations:
                if len({len(w) for w in r.terms}) != 1:
                    raise ValueError(f"relation {r} is not homogeneous")

    def specialize(self, assignment) -> "RelationSet":
        return RelationSet([r.specialize(assignment) for r in self.relations], self.grading, self.alphabet)


@dataclass
class Verdict:
    in_ideal: bool
    witness: FreeElement | None = None
    strategy: str = "exact"
    seed: int | None = None
    q_values: list = field(default_factory=list)
    degree: int = 0

    def __bool__(self) -> bool:
        return self.in_ideal

    @property
    def label(self) -> str:
        return "InIdeal" if self.in_ideal else "NotInIdeal"


def words_of_weight(alphabet: Iterable[int], weight: int) -> list[tuple[int, ...]]:
    """All words with total weight exactly ``weight``."""
    by_w: dict[int, list[int]] = {}
    for a in alphabet:
        by_w.setdefault(letter_weight(a), []).append(a)
    table: list[list[tuple]] = [[()]]
    for s in range(1, weight + 1):
        ws = []
        for lw, letters in by_w.items():
            if lw <= s:
                for prefix in table[s - lw]:
                    for a in letters:
                        ws.append(prefix + (a,))
        table.append(ws)
    return table[weight]


def count_words(alphabet: Iterable[int], weight: int, exact: bool) -> int:
    by_w: dict[int, int] = {}
    for a in alphabet:
        lw = letter_weight(a)
        by_w[lw] = by_w.get(lw, 0) + 1
    counts = [1]
    for s in range(1, weight + 1):
        counts.append(sum(c * counts[s - lw] for lw, c in by_w.items() if lw <= s))
    return counts[weight] if exact else sum(counts)


class IdealHandle:
    """Two-sided ideal generated by a RelationSet, sliced by weight.

    ``component(d)`` is the reduced echelon basis of span{w1 r w2} with
    weight exactly d (homogeneous) or at most d (filtered gradings).
    """

    def __init__(self, relations: RelationSet, strategy: str = "exact", seed: int = 0,
                 trials: int = 5, cap: int = DEFAULT_CAP):
        if strategy not in ("exact", "random"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.relations = relations
        self.strategy = strategy
        self.seed = seed
        self.trials = trials
        self.cap = cap
        self._components: dict[int, Echelon] = {}
        self._reduced_relations: list[tuple[int, FreeElement]] | None = None
        self._specialized: dict = {}
        self._q_values: list | None = None

    @property
    def homogeneous(self) -> bool:
        return self.relations.grading == HOMOGENEOUS

    def _basis_relations(self) -> list[tuple[int, FreeElement]]:
        if self._reduced_relations is None:
            by_weight: dict[int, list[FreeElement]] = {}
            for r in self.relations.relations:
                by_weight.setdefault(r.weight(), []).append(r)
            out = []
            for wt in sorted(by_weight):
                ech = echelon_from_rows([r.terms for r in by_weight[wt]], key=word_key)
                for p in sorted(ech.rows, key=word_key):
                    out.append((wt, FreeElement._raw(dict(ech.rows[p]))))
            self._reduced_relations = out
        return self._reduced_relations

    def slice_dimension(self, d: int) -> int:
        return count_words(self.relations.alphabet, d, exact=self.homogeneous)

    def component(self, d: int) -> Echelon:
        if d in self._components:
            return self._components[d]
        dim = self.slice_dimension(d)
        if dim > self.cap:
            raise ResourceError(f"degree-{d} slice has {dim} monomials (cap {self.cap})", dim)
        alphabet = self.relations.alphabet
        words_by_weight = {s: words_of_weight(alphabet, s) for s in range(0, d + 1)}
        rows = []
        for rw, r in self._basis_relations():
            if rw > d:
                continue
            budgets = [d - rw] if self.homogeneous else range(0, d - rw + 1)
            for budget in budgets:
                for left_w in range(budget + 1):
                    for w1 in words_by_weight[left_w]:
                        for w2 in words_by_weight[budget - left_w]:
                            rows.append({w1 + w + w2: c for w, c in r.terms.items()})
        ech = echelon_from_rows(rows, key=word_key)
        self._components[d] = ech
        return ech

    def quotient_dimension(self, d: int) -> int:
        return self.slice_dimension(d) - self.component(d).rank

    # membership -----------------------------------------------------------
    def q_values(self) -> list:
        if self._q_values is None:
            self._q_values = random_q_values(self.seed, self.trials)
        return self._q_values

    def specialized(self, qv) -> "IdealHandle":
        key = mpq(qv)
        h = self._specialized.get(key)
        if h is None:
            h = IdealHandle(self.relations.specialize({"q": key}), "exact", cap=self.cap)
            self._specialized[key] = h
        return h

    def membership(self, x: FreeElement, degree: int | None = None) -> Verdict:
        if self.strategy == "random":
            qs = self.q_values()
            for qv in qs:
                xs = x.specialize({"q": qv})
                v = self.specialized(qv)._exact_membership(xs, degree)
                if not v.in_ideal:
                    return Verdict(False, v.witness, "random", self.seed, list(qs), v.degree)
            return Verdict(True, None, "random", self.seed, list(qs), _deg(x, degree))
        return self._exact_membership(x, degree)

    def _exact_membership(self, x: FreeElement, degree: int | None) -> Verdict:
        params = sorted(v for v in x.scalar_variables() if v != "q")
        pieces = split_by_parameters(x, tuple(params)) if params else [x]
        for piece in pieces:
            rem = self._reduce(piece, degree)
            if rem:
                return Verdict(False, rem, "exact", None, [], _deg(x, degree))
        return Verdict(True, None, "exact", None, [], _deg(x, degree))

    def _reduce(self, x: FreeElement, degree: int | None) -> FreeElement:
        if not x:
            return x
        if self.homogeneous:
            rem: dict = {}
            for d, part in x.homogeneous_parts(word_weight).items():
                if d < 2:
                    rem.update(part.terms)
                    continue
                rem.update(self.component(d).reduce(part.terms))
            return FreeElement._raw(rem)
        d = x.weight() if degree is None else max(degree, x.weight())
        return FreeElement._raw(self.component(d).reduce(x.terms))


def _deg(x: FreeElement, degree: int | None) -> int:
    return degree if degree is not None else max(x.weight(), 0)


def split_by_parameters(x: FreeElement, params: tuple[str, ...]) -> list[FreeElement]:
    """Separate x = sum_mu p^mu x_mu over monomials in central parameters.

    Membership of x over Q(q, params) is equivalent to membership of every
    x_mu when x is polynomial in the parameters; otherwise x is returned whole.
    """
    buckets: dict[tuple, dict] = {}
    for w, c in x.terms.items():
        parts = polynomial_parts(c, params)
        if parts is None:
            return [x]
        for key, cc in parts.items():
            if cc:
                buckets.setdefault(key, {})[w] = cc
    return [FreeElement(t) for _, t in sorted(buckets.items())]


def random_q_values(seed: int, trials: int) -> list:
    """Seeded rational points for q, avoiding 0 and +-1."""
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        qv = mpq(rng.randint(2, 97), rng.randint(1, 97))
        if qv in (0, 1, -1) or qv in out:
            continue
        out.append(qv)
    return out


def membership(x: FreeElement, h: IdealHandle, degree: int | None = None) -> Verdict:
    return h.membership(x, degree)


def ideal_component(h: IdealHandle, d: int) -> Echelon:
    return h.component(d)


# --- U(gl(N)) PBW rewriting ----------------------------------------------------

def _gl_bracket(a: int, b: int) -> dict[tuple, object]:
    """[m_i^j, m_k^l] = m_i^l delta_kj - m_k^j delta_il."""
    fa, la, i, j = decode(a)
    fb, lb, k, l = decode(b)
    out: dict[tuple, object] = {}
    if k == j:
        w = (letter("m", i, l),)
        out[w] = out.get(w, 0) + 1
    if i == l:
        w = (letter("m", k, j),)
        out[w] = out.get(w, 0) - 1
    return {w: mpq(c) for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _pbw_word(w: tuple[int, ...]) -> tuple[tuple[tuple, object], ...]:
    for p in range(len(w) - 1):
        if w[p] > w[p + 1]:
            acc: dict = {}
            swapped = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
            for ww, c in _pbw_word(swapped):
                acc[ww] = acc.get(ww, 0) + c
            for mid, c0 in _gl_bracket(w[p], w[p + 1]).items():
                for ww, c in _pbw_word(w[:p] + mid + w[p + 2:]):
                    acc[ww] = acc.get(ww, 0) + c0 * c
            return tuple((ww, c) for ww, c in acc.items() if c)
    return ((w, mpq(1)),)


def pbw_normal_form(x: FreeElement) -> FreeElement:
    """Sorted-word normal form in U(gl(N)) (letters ordered by (i, j))."""
    for a in x.letters():
        if decode(a)[0] != "m" or decode(a)[1] != 0:
            raise ValueError(f"letter {letter_name(a)} is not a U(gl(N)) generator")
    out: dict = {}
    for w, c in x.terms.items():
        for ww, cc in _pbw_word(w):
            nc = out.get(ww, 0) + c * cc
            if nc:
                out[ww] = nc
            else:
                out.pop(ww, None)
    return FreeElement(out)


class PBWHandle:
    """Membership in the U(gl(N)) ideal via the PBW normal form."""

    strategy = "pbw"
    seed = None

    def __init__(self, relations: RelationSet):
        self.relations = relations

    def membership(self, x: FreeElement, degree: int | None = None) -> Verdict:
        nf = pbw_normal_form(x)
        return Verdict(nf.is_zero(), None if nf.is_zero() else nf, "pbw", None, [], _deg(x, degree))


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0
