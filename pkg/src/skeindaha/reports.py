"""Check results, suite reports, and their canonical renderings."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    level: str = "plain"
    residual_terms: int = 0
    millis: int = 0
    detail: str = ""

    def to_json(self) -> dict:
        out = {
            "id": self.check_id,
            "pass": self.passed,
            "level": self.level,
            "lhs_minus_rhs_term_count": self.residual_terms,
            "millis": self.millis,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.check_id)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "total": self.total,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.sorted_checks()],
        }

    def render_table(self) -> str:
        lines = [f"suite {self.suite}: {self.passed}/{self.total} passed"]
        width = max((len(c.check_id) for c in self.checks), default=10)
        for c in self.sorted_checks():
            status = "pass" if c.passed else "FAIL"
            extra = f"  {c.detail}" if c.detail else ""
            lines.append(
                f"  {c.check_id:<{width}}  {status}  [{c.level}]"
                f"  {c.millis:>6} ms{extra}"
            )
        return "\n".join(lines)


def dumps_report(reports) -> str:
    payload = [r.to_json() for r in reports]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def run_check(check_id: str, fn) -> CheckResult:
    """Execute one check callable returning bool or (bool, level, residual)."""
    t0 = time.perf_counter()
    try:
        out = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        millis = int((time.perf_counter() - t0) * 1000)
        return CheckResult(check_id, False, "error", 0, millis, f"{exc}")
    millis = int((time.perf_counter() - t0) * 1000)
    if isinstance(out, tuple):
        passed, level, residual = out
        return CheckResult(check_id, bool(passed), level, residual, millis)
    return CheckResult(check_id, bool(out), "plain", 0 if out else 1, millis)


def run_negative_control(check_id: str, fn, detail: str) -> CheckResult:
    """A deliberately broken identity; the control passes when it fails."""
    t0 = time.perf_counter()
    try:
        out = fn()
        inner_pass = out[0] if isinstance(out, tuple) else bool(out)
    except Exception:
        inner_pass = False
    millis = int((time.perf_counter() - t0) * 1000)
    return CheckResult(
        check_id, not inner_pass, "control", 0, millis, detail
    )
