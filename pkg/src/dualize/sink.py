"""Output contract shared by every enumerator."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


class LimitReached(Exception):
    """An enumeration stopped early because of ``max_outputs`` or a deadline."""


@dataclass
class EnumStats:
    algorithm: str = ""
    nodes: int = 0        # recursive calls (vertex subsets visited)
    checks: int = 0       # minimality checks, i.e. tentative additions
    pruned: int = 0       # candidate vertices skipped by violating-vertex pruning
    max_depth: int = 0
    outputs: int = 0
    aborted: str | None = None  # "limit" or "timeout"
    seconds: float = 0.0


class MhsSink:
    """Receives each minimal hitting set exactly once.

    ``mode`` is ``"count"``, ``"collect"`` or ``"stream"`` (``callback`` gets
    every set). A ``limit`` makes the (limit+1)-th emission abort the run;
    ``deadline`` is an absolute ``time.perf_counter()`` value.
    """

    def __init__(self, mode: str = "collect", limit: int | None = None,
                 callback: Callable[[tuple], None] | None = None,
                 deadline: float | None = None):
        if mode not in ("count", "collect", "stream"):
            raise ValueError(f"unknown sink mode {mode!r}")
        if mode == "stream" and callback is None:
            raise ValueError("stream mode needs a callback")
        self.mode = mode
        self.limit = limit
        self.callback = callback
        self.deadline = deadline
        self.count = 0
        self.sets: list[tuple] = []
        self.aborted: str | None = None

    def emit(self, S: Iterable[int]) -> None:
        if self.limit is not None and self.count >= self.limit:
            self.aborted = "limit"
            raise LimitReached("limit")
        self.count += 1
        if self.mode == "collect":
            self.sets.append(tuple(sorted(S)))
        elif self.mode == "stream":
            self.callback(tuple(sorted(S)))

    def check_time(self) -> None:
        if self.deadline is not None and time.perf_counter() > self.deadline:
            self.aborted = "timeout"
            raise LimitReached("timeout")


def canonical(sets: Iterable[Sequence[int]]) -> list[tuple]:
    """Sorted list of sorted tuples, duplicates removed."""
    return sorted({tuple(sorted(s)) for s in sets})


@dataclass
class DualCollection:
    sets: list = field(default_factory=list)

    def __post_init__(self):
        self.sets = canonical(self.sets)

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)
