'''
Created on 16 Oct 2026

@author: ante
'''
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple

from cmc_triharmonic.conditions.triharmonic import Verdict, classify
from cmc_triharmonic.errors import UsageError
from cmc_triharmonic.exactnum.rational import parse_decimal
from cmc_triharmonic.geometry.catalog import FamilyId, build
from cmc_triharmonic.geometry.spaceform import SpaceForm, render_scalar

log = logging.getLogger(__name__)

CSV_HEADER = ("param", "H2", "S", "R", "residual", "verdict")


@dataclass(frozen=True)
class ParamRange:
    key: str
    lo: Fraction
    hi: Fraction
    steps: int

    @classmethod
    def parse(cls, text: str) -> "ParamRange":
        """key=lo:hi:steps, endpoints as integers, p/q or terminating decimals."""
        key, sep, rest = text.partition("=")
        parts = rest.split(":")
        if not sep or not key.strip() or len(parts) != 3:
            raise UsageError(f"malformed range {text!r} (expected key=lo:hi:steps)")
        lo, hi = parse_decimal(parts[0]), parse_decimal(parts[1])
        try:
            steps = int(parts[2])
        except ValueError:
            raise UsageError(f"steps must be an integer in {text!r}") from None
        if steps < 2:
            raise UsageError(f"a sweep needs at least 2 steps, got {steps}")
        if not lo < hi:
            raise UsageError(f"empty range {lo}..{hi}")
        return cls(key.strip(), lo, hi, steps)

    def samples(self) -> List[Fraction]:
        span = self.hi - self.lo
        return [self.lo + i * span / (self.steps - 1) for i in range(self.steps)]


@dataclass(frozen=True)
class ScanRow:
    param: Fraction
    H2: str
    S: str
    R: str
    residual: Fraction
    verdict: Verdict

    def as_row(self) -> Tuple[str, ...]:
        return (str(self.param), self.H2, self.S, self.R, str(self.residual), self.verdict.value)

    def to_dict(self) -> Dict[str, str]:
        return dict(zip(CSV_HEADER, self.as_row()))


def evaluate(sf: SpaceForm, tag: str, fixed: Mapping[str, Fraction], key: str, value: Fraction) -> ScanRow:
    params = dict(fixed)
    params[key] = value
    report = classify(sf, build(sf, FamilyId.from_mapping(tag, params)))
    inv = report.invariants
    return ScanRow(value, render_scalar(inv.H2), render_scalar(inv.S), render_scalar(inv.R), report.T1, report.verdict)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class ScanResult:
    rows: Tuple[ScanRow, ...]

    @property
    def proper_count(self) -> int:
        return sum(1 for r in self.rows if r.verdict is Verdict.PROPER)

    def sign_changes(self) -> List[Tuple[Fraction, Fraction]]:
        """Consecutive nonzero residuals of opposite sign, as bracketing parameter pairs."""
        changes = []
        last = None
        for row in self.rows:
            s = _sign(row.residual)
            if not s:
                continue
            if last is not None and s != _sign(last.residual):
                changes.append((last.param, row.param))
            last = row
        return changes

    def summary(self) -> Dict[str, Any]:
        changes = self.sign_changes()
        return {
            "samples": len(self.rows),
            "proper": self.proper_count,
            "sign_changes": len(changes),
            "brackets": [[str(a), str(b)] for a, b in changes],
        }


def run_scan(sf: SpaceForm, tag: str, fixed: Mapping[str, Fraction],
             prange: ParamRange, workers: int = 1) -> ScanResult:
    """Rows come back in parameter order whatever the number of workers."""
    samples = prange.samples()
    log.info("scan %s in %s: %s over %d samples, %d worker(s)", tag, sf.ambient, prange.key, len(samples), workers)
    task = lambda v: evaluate(sf, tag, fixed, prange.key, v)  # noqa: E731
    if workers <= 1:
        rows = [task(v) for v in samples]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(task, samples))
    return ScanResult(tuple(rows))


def render_csv(result: ScanResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in result.rows:
        writer.writerow(row.as_row())
    return buf.getvalue()


def render_scan_json(result: ScanResult, header: Dict[str, Any]) -> str:
    payload = dict(header)
    payload["summary"] = result.summary()
    payload["rows"] = [r.to_dict() for r in result.rows]
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def read_csv(text: str) -> List[Dict[str, str]]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected sweep header {reader.fieldnames}")
    return list(reader)

