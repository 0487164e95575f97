"""Structured pass/fail reports for exhaustive verification sweeps."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

REPORT_SCHEMA = "symlevel-report-v1"


@dataclass
class VerificationReport:
    """Result of one verification sweep: instance count plus any counterexamples."""

    theorem: str
    parameters: dict
    instances_checked: int
    failures: list[dict] = field(default_factory=list)
    wall_time_ms: int = 0
    observations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "schema": REPORT_SCHEMA,
            "theorem": self.theorem,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "status": self.status,
            "failures": self.failures,
        }
        if self.observations:
            out["observations"] = self.observations
        if include_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out


class Stopwatch:
    """Wall-clock milliseconds for report timing fields."""

    def __init__(self):
        self.start = time.perf_counter()

    def ms(self) -> int:
        return int((time.perf_counter() - self.start) * 1000)


def merge_reports(reports: list[VerificationReport], theorem: str, parameters: dict) -> VerificationReport:
    """Associative merge: counts add, failures concatenate in input order."""
    merged = VerificationReport(theorem=theorem, parameters=parameters, instances_checked=0)
    for r in reports:
        merged.instances_checked += r.instances_checked
        merged.failures.extend(r.failures)
        merged.wall_time_ms += r.wall_time_ms
    return merged
