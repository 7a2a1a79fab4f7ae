'''
Created on 16 Oct 2026

@author: ante
'''
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from cmc_triharmonic import __version__
from cmc_triharmonic.checks import CheckResult

log = logging.getLogger(__name__)

# Fixed key order of a serialized report.
REPORT_KEYS = (
    "command", "version", "space", "family", "params", "spectrum",
    "invariants", "residual", "verdict", "checks", "data", "timing",
)


@dataclass
class RunReport:
    command: List[str]
    version: str = __version__
    space: Optional[Dict[str, Any]] = None
    family: Optional[str] = None
    params: Dict[str, str] = field(default_factory=dict)
    spectrum: List[Dict[str, Any]] = field(default_factory=list)
    invariants: Optional[Dict[str, str]] = None
    residual: Optional[str] = None
    verdict: Optional[str] = None
    checks: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(self.checks)

    def add_check(self, check: CheckResult) -> CheckResult:
        if not check:
            log.error("check failed: %s %s", check.name, check.detail)
        self.checks.append(check)
        return check

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for key in REPORT_KEYS:
            value = getattr(self, key)
            if key == "checks":
                value = [c.to_dict() for c in value]
            elif key == "timing" and value is not None:
                value = {"seconds": round(value, 3)}
            out[key] = value
        return out


def render_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"


def _flatten(prefix: str, value: Any, lines: List[tuple]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, lines)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, lines)
    elif isinstance(value, list):
        lines.append((prefix, " ".join(str(v) for v in value)))
    elif value is not None:
        lines.append((prefix, str(value)))


def render_text(report: RunReport) -> str:
    """Aligned `key: value` lines, nested keys dotted."""
    lines: List[tuple] = []
    for key, value in report.to_dict().items():
        if key == "checks":
            for c in report.checks:
                status = "ok" if c else f"FAILED {c.detail}".rstrip()
                lines.append((f"check {c.name}", status))
            continue
        _flatten(key, value, lines)
    width = max((len(k) for k, _ in lines), default=0)
    return "".join(f"{k.ljust(width)} : {v}\n" for k, v in lines)


def render(report: RunReport, fmt: str = "json") -> str:
    match fmt:
        case "json":
            return render_json(report)
        case "text":
            return render_text(report)
    raise ValueError(f"unknown output format {fmt!r}")
