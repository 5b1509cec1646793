"""Running a verification driver under the exact or the seeded
random-specialization strategy.

The random strategy substitutes q into the braiding first and runs the
whole pipeline over Q, so every intermediate object is rational. Each
identity checked is polynomial in q, hence a symbolic InIdeal verdict
implies InIdeal at every admissible specialization; the converse holds
with high probability over the seeded points.
"""

from __future__ import annotations

from typing import Callable

from .braidings import Braiding
from .errors import GenericityError, PoleError
from .freealg import random_q_values
from .report import IN_IDEAL, NOT_IN_IDEAL, NONZERO, ZERO, ReportItem, VerificationReport
from .scalars import format_scalar

STRATEGIES = ("exact", "random")


def run_with_strategy(driver: Callable[[Braiding], VerificationReport], b: Braiding,
                      strategy: str = "exact", seed: int = 0, trials: int = 5) -> VerificationReport:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "exact" or not b.is_symbolic:
        rep = driver(b)
        if strategy == "random":
            rep.notes["strategy"] = "random requested; braiding has no free q, ran exact"
        return rep
    reports = []
    used = []
    candidates = random_q_values(seed, trials * 4)
    for qv in candidates:
        if len(used) == trials:
            break
        try:
            bq = b.specialize({"q": qv})
        except (PoleError, GenericityError):
            continue
        reports.append(driver(bq))
        used.append(qv)
    return merge_trials(reports, b, seed, used)


def merge_trials(reports: list[VerificationReport], b: Braiding, seed: int, q_values: list) -> VerificationReport:
    first = reports[0]
    out = VerificationReport(first.identity, first.anchor, b.describe(), first.algebra, notes=dict(first.notes))
    out.notes.pop("setup_secs", None)
    out.notes["strategy"] = f"random specialization, seed {seed}, {len(q_values)} trials"
    qs = [format_scalar(v) for v in q_values]
    by_id: dict[str, list[ReportItem]] = {}
    for rep in reports:
        for it in rep.items:
            by_id.setdefault(it.item_id, []).append(it)
    for item_id, its in by_id.items():
        verdicts = {it.verdict for it in its}
        if verdicts == {ZERO}:
            verdict = ZERO
        elif NONZERO in verdicts and verdicts <= {NONZERO, ZERO} and its[0].expected == (NONZERO,):
            verdict = NONZERO if verdicts == {NONZERO} else ZERO
        elif all(it.ok for it in its):
            verdict = IN_IDEAL if IN_IDEAL in verdicts else next(iter(verdicts))
        else:
            bad = [it for it in its if not it.ok][0]
            verdict = bad.verdict if bad.verdict != IN_IDEAL else NOT_IN_IDEAL
        details = "; ".join(sorted({it.detail for it in its if it.detail}))
        out.add(ReportItem(item_id, verdict, "random", seed, its[0].degree,
                           sum(it.elapsed for it in its), its[0].expected, qs, details))
    return out
