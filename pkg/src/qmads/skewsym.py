"""Skew-symmetrizers A^(k) built by the q-recursion (q = 1 for involutive R)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .errors import PoleError, GenericityError
from .scalars import mpq, normalize, specialize_value
from .tensors import TensorOperator, embed_adjacent

if TYPE_CHECKING:
    from .braidings import Braiding


def qint(k: int, q):
    """k_q evaluated at a given value of q; the plain integer k when q is None."""
    if q is None:
        return mpq(k)
    if k == 0:
        return mpq(0)
    # q^{1-k} + q^{3-k} + ... + q^{k-1}
    total = 0
    for j in range(k):
        total = total + q ** (k - 1 - 2 * j)
    return normalize(total)


def tower(R: TensorOperator, q, kmax: int) -> list[TensorOperator]:
    """[A^(1), ..., A^(kmax)] for R with Hecke parameter q (None: involutive)."""
    n = R.n
    ops = [TensorOperator.identity(n, 1)]
    for k in range(2, kmax + 1):
        prev = ops[-1].kron(TensorOperator.identity(n, 1))
        if prev.is_zero():
            ops.append(TensorOperator.zero(n, k))
            continue
        Rk = embed_adjacent(R, k, k - 1)
        if q is None:
            middle = TensorOperator.identity(n, k) - Rk.scale(k - 1)
            factor = mpq(1, k)
        else:
            middle = TensorOperator.scalar(n, k, q ** (k - 1)) - Rk.scale(qint(k - 1, q))
            factor = 1 / qint(k, q)
        ops.append((prev @ middle @ prev).scale(factor))
    return ops


def skew_symmetrizer(b: "Braiding", k: int) -> TensorOperator:
    """A^(k) on V^{(x)k}; A^(k-1) sits on factors 1..k-1 in the recursion."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return b.skew_symmetrizers(k)[k - 1]


def classical_antisymmetrizer(n: int, k: int) -> TensorOperator:
    """(1/k!) sum_sigma sgn(sigma) P_sigma, built directly from permutations."""
    import itertools
    import math

    rows: dict[int, dict[int, object]] = {}
    weight = mpq(1, math.factorial(k))
    for perm in itertools.permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        for digits in itertools.product(range(n), repeat=k):
            src = 0
            dst = 0
            for d in digits:
                src = src * n + d
            for i in range(k):
                dst = dst * n + digits[perm[i]]
            row = rows.setdefault(dst, {})
            row[src] = row.get(src, 0) + sign * weight
    return TensorOperator(n, k, rows)


@dataclass
class SkewSymmetrizerTower:
    base: "Braiding"
    ops: list[TensorOperator]
    ranks: list[int] = field(default_factory=list)

    @classmethod
    def build(cls, b: "Braiding", k_max: int | None = None) -> "SkewSymmetrizerTower":
        k_max = k_max if k_max is not None else b.n + 1
        ops = b.skew_symmetrizers(k_max)
        return cls(b, ops, [op.rank() for op in ops])


def rank_crosscheck(op: TensorOperator, seed: int = 0, trials: int = 3) -> list[int]:
    """Ranks of ``op`` at seeded rational specializations of q.

    Specialization can only lower the rank, so every value must be <= the
    symbolic rank; for generic points it is equal.
    """
    rng = random.Random(seed)
    ranks = []
    while len(ranks) < trials:
        qv = mpq(rng.randint(2, 60), rng.randint(1, 60))
        try:
            at_q = op.map(lambda x: specialize_value(x, {"q": qv}))
        except (PoleError, GenericityError):
            continue
        ranks.append(at_q.rank())
    return ranks
