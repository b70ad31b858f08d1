"""Enumeration budgets: an item cap plus an optional wall-clock deadline."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .errors import BudgetExceeded

DEFAULT_MAX_ITEMS = 10**6
DEFAULT_SECONDS = 60.0

BUDGET_ENV = "KEGRAPH_BUDGET"
TIMEOUT_ENV = "KEGRAPH_TIMEOUT"


def default_max_items() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
        return value
    return DEFAULT_MAX_ITEMS


def default_seconds() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw:
        value = float(raw)
        if value <= 0:
            raise ValueError(f"{TIMEOUT_ENV} must be positive, got {raw!r}")
        return value
    return DEFAULT_SECONDS


@dataclass(frozen=True)
class Budget:
    """Per-enumeration item cap and an absolute ``time.monotonic()`` deadline.

    The cap applies to each enumeration separately; the deadline is shared by
    everything run under the same budget, which is how the per-graph wall-clock
    limit is enforced.
    """

    max_items: int = DEFAULT_MAX_ITEMS
    deadline: float | None = None

    def __post_init__(self):
        if self.max_items <= 0:
            raise ValueError("max_items must be positive")

    @classmethod
    def start(cls, max_items: int | None = None, seconds: float | None = None) -> Budget:
        """Budget whose deadline starts counting now (env defaults when omitted)."""
        if max_items is None:
            max_items = default_max_items()
        if seconds is None:
            seconds = default_seconds()
        if seconds <= 0:
            raise ValueError("seconds must be positive")
        return cls(max_items=max_items, deadline=time.monotonic() + seconds)

    @classmethod
    def unlimited(cls) -> Budget:
        return cls(max_items=2**62, deadline=None)

    def meter(self, what: str) -> Meter:
        return Meter(self, what)


class Meter:
    """Counts yields of one enumeration against a :class:`Budget`."""

    __slots__ = ("budget", "what", "count", "_calls")

    def __init__(self, budget: Budget, what: str):
        self.budget = budget
        self.what = what
        self.count = 0
        self._calls = 0

    def charge(self):
        """Account for one more yielded item; raise once the cap is passed."""
        if self.count >= self.budget.max_items:
            raise BudgetExceeded(self.what, self.count, "limit")
        self.count += 1
        self.check_time()

    def check_time(self):
        deadline = self.budget.deadline
        if deadline is None:
            return
        self._calls += 1
        # monotonic() is cheap but not free; sample it.
        if self._calls & 63 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded(self.what, self.count, "deadline")

    def check_deadline(self):
        """Unsampled deadline check, for callers that already thin their calls."""
        deadline = self.budget.deadline
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(self.what, self.count, "deadline")
