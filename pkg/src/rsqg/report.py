"""Certificate report structures shared by all verification entry points."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .matrices import SMatrix


@dataclass
class CheckItem:
    """Outcome of one named identity check."""

    name: str
    family: str
    rank: int
    ok: bool
    witness: str = ""  # first offending entry when failing
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def line(self) -> str:
        msg = f"[{self.status}] {self.family}{self.rank} {self.name} ({self.seconds:.2f}s)"
        if not self.ok and self.witness:
            msg += f" witness: {self.witness}"
        return msg


@dataclass
class Report:
    items: list[CheckItem] = field(default_factory=list)

    def add(self, item: CheckItem) -> CheckItem:
        self.items.append(item)
        return item

    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    def sorted_items(self) -> list[CheckItem]:
        return sorted(self.items, key=lambda it: (it.name, it.family, it.rank))

    def merged(self, other: "Report") -> "Report":
        return Report(self.items + other.items)

    def to_json(self) -> list[dict]:
        return [
            {
                "check": it.name,
                "family": it.family,
                "rank": it.rank,
                "status": it.status,
                "witness": it.witness,
                "seconds": round(it.seconds, 4),
            }
            for it in self.sorted_items()
        ]


def first_mismatch(a: SMatrix, b: SMatrix) -> str:
    """Coordinates and value of the first differing entry (grlex row order)."""
    d = a - b
    if d.is_zero():
        return ""
    i, j, v = d.entries()[0]
    return f"entry ({i},{j}) differs by {v}"


def timed_matrix_check(name: str, family: str, rank: int, a: SMatrix, b: SMatrix, t0: float) -> CheckItem:
    w = first_mismatch(a, b)
    return CheckItem(name, family, rank, w == "", w, time.perf_counter() - t0)
