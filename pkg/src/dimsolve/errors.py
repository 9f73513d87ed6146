"""Exceptions and the diagnostics collector shared by the solver stages."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class Contradiction(Exception):
    """The current coloring branch cannot be extended to a d.i.m."""


class NoDimWithXy(Exception):
    """No d.i.m. of the graph contains the anchor edge."""


class StructureError(Exception):
    """A structural property that holds on S_{2,2,3}-free inputs was violated."""


class NotInClassError(ValueError):
    """The input contains an induced S_{2,2,3} and out-of-class solving was not allowed."""


@dataclass
class Diagnostics:
    """Counters for structural checks, X-coloring sizes and fallbacks.

    ``checks[name]`` counts passes, ``failures[name]`` counts violations.
    ``x_colorings`` holds one entry per anchor edge processed.
    """

    checks: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)
    x_colorings: list[int] = field(default_factory=list)
    events: Counter = field(default_factory=Counter)

    def check(self, name: str, ok: bool) -> bool:
        if ok:
            self.checks[name] += 1
        else:
            self.failures[name] += 1
        return ok

    def note(self, name: str, k: int = 1) -> None:
        self.events[name] += k

    def merge(self, other: "Diagnostics") -> None:
        self.checks.update(other.checks)
        self.failures.update(other.failures)
        self.x_colorings.extend(other.x_colorings)
        self.events.update(other.events)

    @property
    def max_x_colorings(self) -> int:
        return max(self.x_colorings, default=0)
