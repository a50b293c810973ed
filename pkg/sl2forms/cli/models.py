"""Pydantic schemas for verification reports."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel

PASS = "pass"
FAIL = "fail"


# -- Records --

class CheckRecord(BaseModel):
    name: str
    suite: str
    status: str
    residual: str = "0"
    details: Dict[str, str] = {}
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


# -- Reports --

class Summary(BaseModel):
    total: int
    passed: int
    failed: int


class Report(BaseModel):
    command: str
    version: str
    spec: Dict[str, Any]
    checks: List[CheckRecord]
    summary: Summary

    @property
    def exit_code(self) -> int:
        return 0 if self.summary.failed == 0 else 1


def summarize(checks: List[CheckRecord]) -> Summary:
    passed = sum(1 for c in checks if c.passed)
    return Summary(total=len(checks), passed=passed, failed=len(checks) - passed)
