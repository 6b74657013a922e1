"""Verification reports: localized violations with exact residuals.

Verifiers never return bare booleans.  Each check evaluates one condition
at one basis index tuple and yields a residual vector; a nonzero residual
becomes a `Violation`.  Reports are sorted by (condition, indices) so their
line rendering is stable across runs and worker counts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

Residual = tuple[Fraction, ...]
# (condition id, basis index tuple, thunk computing the residual)
Check = tuple[str, tuple[int, ...], Callable[[], Residual]]


def _fmt_tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


@dataclass(frozen=True, order=True)
class Violation:
    condition: str
    indices: tuple[int, ...]
    residual: Residual

    def line(self) -> str:
        return f"VIOLATION {self.condition} {_fmt_tuple(self.indices)} {_fmt_tuple(self.residual)}"


@dataclass(frozen=True)
class VerificationReport:
    checked: int
    violations: tuple[Violation, ...]

    def __post_init__(self):
        object.__setattr__(self, "violations",
                           tuple(sorted(self.violations,
                                        key=lambda v: (v.condition, v.indices))))

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> frozenset[str]:
        return frozenset(v.condition for v in self.violations)

    def lines(self) -> list[str]:
        return [v.line() for v in self.violations]

    def at(self, condition: str, indices: tuple[int, ...]) -> Violation | None:
        for v in self.violations:
            if v.condition == condition and v.indices == indices:
                return v
        return None

    @staticmethod
    def merge(*reports: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            checked=sum(r.checked for r in reports),
            violations=tuple(v for r in reports for v in r.violations))


def run_checks(checks: Iterable[Check], workers: int = 1) -> VerificationReport:
    """Evaluate every check; aggregation order is deterministic regardless
    of `workers` because violations are sorted by (condition, indices)."""
    checks = list(checks)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            residuals = list(pool.map(lambda c: c[2](), checks))
    else:
        residuals = [fn() for _, _, fn in checks]
    violations = tuple(Violation(cond, idx, res)
                       for (cond, idx, _), res in zip(checks, residuals)
                       if any(x != 0 for x in res))
    return VerificationReport(checked=len(checks), violations=violations)


def prefix_checks(prefix: str, checks: Iterable[Check]) -> list[Check]:
    return [(f"{prefix}{cond}", idx, fn) for cond, idx, fn in checks]
