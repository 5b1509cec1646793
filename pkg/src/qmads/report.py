"""Verification reports shared by the drivers and the command line."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .scalars import format_scalar

TOOL_VERSION = "0.1.0"

IN_IDEAL = "InIdeal"
NOT_IN_IDEAL = "NotInIdeal"
ZERO = "Zero"
NONZERO = "Nonzero"


@dataclass
class ReportItem:
    item_id: str
    verdict: str
    strategy: str
    seed: int | None = None
    degree: int | None = None
    elapsed: float = 0.0
    expected: tuple[str, ...] = (IN_IDEAL, ZERO)
    q_values: list[str] = field(default_factory=list)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict in self.expected

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["expected"] = list(self.expected)
        d["ok"] = self.ok
        if not timing:
            d.pop("elapsed")
        return d


@dataclass
class VerificationReport:
    identity: str
    anchor: str
    braiding: str
    algebra: str
    items: list[ReportItem] = field(default_factory=list)
    tool_version: str = TOOL_VERSION
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(it.ok for it in self.items)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def add(self, item: ReportItem) -> ReportItem:
        self.items.append(item)
        return item

    def sorted_items(self) -> list[ReportItem]:
        return sorted(self.items, key=lambda it: _natural(it.item_id))

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "tool_version": self.tool_version,
            "identity": self.identity,
            "anchor": self.anchor,
            "braiding": self.braiding,
            "algebra": self.algebra,
            "status": self.status,
            "passed_items": sum(it.ok for it in self.items),
            "total_items": len(self.items),
            "notes": self.notes,
            "items": [it.to_dict(timing) for it in self.sorted_items()],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)

    def to_text(self) -> str:
        head = [
            f"identity : {self.identity} ({self.anchor})",
            f"braiding : {self.braiding}",
            f"algebra  : {self.algebra}",
        ]
        for k, v in sorted(self.notes.items()):
            head.append(f"{k:<9}: {v}")
        rows = [("item", "verdict", "strategy", "seed", "deg", "secs")]
        for it in self.sorted_items():
            rows.append((it.item_id, it.verdict, it.strategy, "" if it.seed is None else str(it.seed),
                         "" if it.degree is None else str(it.degree), f"{it.elapsed:.3f}"))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        table = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        tail = f"status   : {self.status.upper()} ({sum(it.ok for it in self.items)}/{len(self.items)} items)"
        return "\n".join(head + table + [tail])


def _natural(s: str):
    out = []
    num = ""
    for ch in s:
        if ch.isdigit():
            num += ch
            continue
        if num:
            out.append((0, int(num), ""))
            num = ""
        out.append((1, 0, ch))
    if num:
        out.append((0, int(num), ""))
    return out


def membership_item(item_id: str, x, handle, degree: int | None = None) -> ReportItem:
    """Run membership on x and record the verdict; identically zero
    elements are reported as Zero without touching the ideal."""
    t0 = time.perf_counter()
    if x.is_zero():
        return ReportItem(item_id, ZERO, "free", None, degree, time.perf_counter() - t0)
    v = handle.membership(x, degree)
    return ReportItem(
        item_id,
        v.label,
        v.strategy,
        v.seed,
        v.degree if degree is None else degree,
        time.perf_counter() - t0,
        q_values=[format_scalar(qv) for qv in v.q_values],
        detail="" if v.in_ideal else f"remainder has {len(v.witness.terms)} terms",
    )


def zero_item(item_id: str, x, degree: int | None = None, expect_zero: bool = True) -> ReportItem:
    """Exact free-algebra check: Zero or Nonzero, no quotienting."""
    verdict = ZERO if x.is_zero() else NONZERO
    expected = (ZERO,) if expect_zero else (NONZERO,)
    return ReportItem(item_id, verdict, "free", None, degree, 0.0, expected)
