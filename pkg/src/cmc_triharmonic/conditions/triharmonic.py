'''
Created on 14 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict

import mpmath

from cmc_triharmonic.exactnum.rational import Scalar, is_exact, lift
from cmc_triharmonic.geometry.spaceform import (
    CurvatureSpectrum, InvariantSet, SpaceForm, render_scalar, invariants,
)

log = logging.getLogger(__name__)


class Verdict(Enum):
    MINIMAL         = "Minimal"
    PROPER          = "ProperTriharmonic"
    NOT_TRIHARMONIC = "NotTriharmonic"

    @classmethod
    def from_flag(cls, flag: str) -> "Verdict":
        return {"proper": cls.PROPER, "minimal": cls.MINIMAL, "not": cls.NOT_TRIHARMONIC}[flag]


def is_zero(x: Scalar) -> bool:
    """Exact zero test for rationals; for mpf, zero up to the last three working digits."""
    if is_exact(x):
        return x == 0
    return abs(x) < mpmath.mpf(10) ** (3 - mpmath.mp.dps)


def triharmonic_residual(sf: SpaceForm, inv: InvariantSet, delta_s: Scalar = Fraction(0)) -> Scalar:
    """T1 = dS + S^2 - n c S - n^2 c H^2."""
    inexact = not (is_exact(inv.S) and is_exact(inv.H2) and is_exact(delta_s))
    S, H2 = lift(inv.S, inexact), lift(inv.H2, inexact)
    c = lift(sf.c, inexact)
    n = sf.n
    return lift(delta_s, inexact) + S * S - n * c * S - n * n * c * H2


@dataclass(frozen=True)
class TriharmonicReport:
    T1: Scalar
    T2_satisfied: bool
    verdict: Verdict
    invariants: InvariantSet

    def to_dict(self) -> Dict[str, Any]:
        return {
            "T1": render_scalar(self.T1),
            "T2_satisfied": self.T2_satisfied,
            "verdict": self.verdict.value,
        }


def classify(sf: SpaceForm, spec: CurvatureSpectrum, delta_s: Scalar = Fraction(0)) -> TriharmonicReport:
    """
    Verdict for a constant-curvature spectrum. A gradient-free S makes the A grad S
    equation hold trivially; minimal spectra are triharmonic whatever T1 is.
    """
    inv = invariants(sf, spec)
    if spec.is_exact and inv.S < sf.n * inv.H2:
        raise ValueError(f"malformed spectrum: S={inv.S} < n*H2={sf.n * inv.H2}")

    t1 = triharmonic_residual(sf, inv, delta_s)
    t2 = True
    if is_zero(inv.H2):
        verdict = Verdict.MINIMAL
    elif is_zero(t1) and t2:
        verdict = Verdict.PROPER
    else:
        verdict = Verdict.NOT_TRIHARMONIC
    log.debug("%s: H2=%s S=%s T1=%s -> %s", sf.ambient, render_scalar(inv.H2), render_scalar(inv.S), render_scalar(t1), verdict.value)
    return TriharmonicReport(T1=t1, T2_satisfied=t2, verdict=verdict, invariants=inv)
