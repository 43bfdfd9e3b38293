"""Exhaustive cross-check of the Tutte-coefficient characterizations.

For every labeled matroid on [n] and every (k, l) in the grid, the
minor/flats/Tutte uniformity tests must agree, and so must the definitional
and coefficient versions of almost-uniformity and of excluded minors.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import uniformity as U
from .census import BRUTE_FORCE_MAX, labeled_matroids
from .formats import to_text

CHECKS = ("uniform", "almost", "excluded")


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None


@dataclass
class VerifyReport:
    n: int
    k_max: int
    l_max: int
    matroids: int = 0
    tallies: dict = field(default_factory=lambda: {c: CheckTally() for c in CHECKS})

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def merge(self, other: VerifyReport) -> None:
        self.matroids += other.matroids
        for name in CHECKS:
            mine, theirs = self.tallies[name], other.tallies[name]
            mine.passed += theirs.passed
            mine.failed += theirs.failed
            if mine.first_failure is None:
                mine.first_failure = theirs.first_failure

    def render(self) -> str:
        grid = self.k_max * self.l_max
        lines = [f"verify n={self.n} k<={self.k_max} l<={self.l_max}: "
                 f"{self.matroids} matroids x {grid} (k,l) pairs"]
        for name in CHECKS:
            t = self.tallies[name]
            status = "PASS" if t.failed == 0 else "FAIL"
            lines.append(f"{name}: {status} passed={t.passed} failed={t.failed}")
            if t.first_failure is not None:
                lines.append(t.first_failure.rstrip("\n"))
        return "\n".join(lines) + "\n"


def _describe(name, M, k, l, values) -> str:
    shown = " ".join(f"{key}={val}" for key, val in values.items())
    return f"counterexample for {name} at (k,l)=({k},{l}): {shown}\n{to_text(M)}"


def _check_slice(args) -> VerifyReport:
    n, k_max, l_max, start, stop = args
    report = VerifyReport(n, k_max, l_max)
    for M in labeled_matroids(n)[start:stop]:
        report.matroids += 1
        for k in range(1, k_max + 1):
            for l in range(1, l_max + 1):
                results = {
                    "uniform": {name: fn(M, k, l) for name, fn in U.UNIFORM_METHODS.items()},
                    "almost": {name: fn(M, k, l) for name, fn in U.ALMOST_METHODS.items()},
                    "excluded": {name: fn(M, k, l) for name, fn in U.EXCLUDED_METHODS.items()},
                }
                for name, values in results.items():
                    tally = report.tallies[name]
                    if len(set(values.values())) == 1:
                        tally.passed += 1
                    else:
                        tally.failed += 1
                        if tally.first_failure is None:
                            tally.first_failure = _describe(name, M, k, l, values)
    return report


def verify(n: int, k_max: int, l_max: int, jobs: int = 1) -> VerifyReport:
    """Run all equivalence checks over the labeled matroids on [n].

    The result does not depend on ``jobs``: slices are merged in order.
    """
    if not 1 <= n <= BRUTE_FORCE_MAX:
        raise ValueError(f"verify needs 1 <= n <= {BRUTE_FORCE_MAX}")
    if k_max < 1 or l_max < 1:
        raise ValueError("k_max and l_max must be positive")
    total = len(labeled_matroids(n))
    jobs = max(1, min(jobs, total))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    tasks = [(n, k_max, l_max, bounds[i], bounds[i + 1]) for i in range(jobs)]
    if jobs == 1:
        parts = [_check_slice(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_check_slice, tasks))
    report = VerifyReport(n, k_max, l_max)
    for part in parts:
        report.merge(part)
    return report
