'''
Created on 12 Oct 2026

@author: ante
'''
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Tuple


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one exact identity or certificate check.
    Truthy iff the check passed. Composite checks keep their sub-steps.
    """
    name: str
    passed: bool
    failed_at: Optional[int] = None
    detail: str = ""
    steps: Tuple["CheckResult", ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def all_of(cls, name: str, steps: Iterable["CheckResult"]) -> "CheckResult":
        steps = tuple(steps)
        failed = [s.name for s in steps if not s.passed]
        detail = "failed: " + ", ".join(failed) if failed else ""
        return cls(name=name, passed=not failed, detail=detail, steps=steps)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.failed_at is not None:
            out["failed_at"] = self.failed_at
        if self.detail:
            out["detail"] = self.detail
        if self.steps:
            out["steps"] = [s.to_dict() for s in self.steps]
        return out
