'''
Created on 15 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from cmc_triharmonic.checks import CheckResult
from cmc_triharmonic.exactnum.matrix import determinant, solve
from cmc_triharmonic.moments.lemmas import closed_form_f

log = logging.getLogger(__name__)


class VandermondeMode(Enum):
    ODD         = "odd"
    CONSECUTIVE = "consecutive"

    def powers(self, k: int) -> List[int]:
        if self is VandermondeMode.ODD:
            return [2 * i + 1 for i in range(k)]
        return [i + 1 for i in range(k)]

    @property
    def step(self) -> int:
        return 2 if self is VandermondeMode.ODD else 1


def vandermonde_det(values: Sequence[Fraction], powers: Sequence[int]) -> Fraction:
    """det M with M[i][j] = values[j] ** powers[i]."""
    if len(values) != len(powers) or not values:
        raise ValueError("values and powers must be non-empty and of equal length")
    values = [Fraction(v) for v in values]
    return determinant([[v ** e for v in values] for e in powers])


def vandermonde_product(values: Sequence[Fraction], mode: VandermondeMode) -> Fraction:
    """prod(values) * prod_{a<b} (x_b^s - x_a^s), s = 2 for odd powers and 1 otherwise."""
    values = [Fraction(v) for v in values]
    s = mode.step
    acc = math.prod(values, start=Fraction(1))
    for b in range(len(values)):
        for a in range(b):
            acc *= values[b] ** s - values[a] ** s
    return acc


def vandermonde_identity_check(values: Sequence[Fraction], mode: VandermondeMode) -> CheckResult:
    det = vandermonde_det(values, mode.powers(len(values)))
    product = vandermonde_product(values, mode)
    name = f"vandermonde {mode.value} k={len(values)}"
    if det == product:
        return CheckResult(name, True)
    return CheckResult(name, False, detail=f"det {det} != product {product} at {[str(v) for v in values]}")


# -------------------------
# Certificates
# -------------------------

class Status(Enum):
    FEASIBLE   = "Feasible"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class Constraint:
    """P^exponent is forced to equal value."""
    label: str
    exponent: int
    value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "exponent": self.exponent, "value": str(self.value)}


@dataclass(frozen=True)
class Certificate:
    """
    Feasible: masses solving every moment equation. Infeasible: either the first
    violated moment (failed_at, defect) or a pair of contradictory constraints.
    """
    status: Status
    rates: Tuple[Fraction, ...] = ()
    masses: Tuple[Fraction, ...] = ()
    targets: Tuple[Fraction, ...] = ()
    constraints: Tuple[Constraint, ...] = ()
    failed_at: Optional[int] = None
    defect: Optional[Fraction] = None

    def _constraint_defect(self) -> Fraction:
        first, second = self.constraints
        if second.exponent % first.exponent:
            raise ValueError("constraint exponents are not comparable")
        return first.value ** (second.exponent // first.exponent) - second.value

    def verify(self) -> bool:
        """Re-derive the verdict from the witness alone."""
        if self.constraints:
            defect = self._constraint_defect()
            if self.status is Status.INFEASIBLE:
                return defect != 0 and defect == self.defect
            return defect == 0
        residuals = [
            sum((m * P ** q for m, P in zip(self.masses, self.rates)), Fraction(0)) - t
            for q, t in enumerate(self.targets, start=1)
        ]
        if self.status is Status.FEASIBLE:
            return not any(residuals)
        k = self.failed_at
        if k is None or not 1 <= k <= len(residuals):
            return False
        return not any(residuals[:k - 1]) and residuals[k - 1] == self.defect != 0

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"status": self.status.value}
        if self.rates:
            out["rates"] = [str(x) for x in self.rates]
        if self.masses:
            out["masses"] = [str(x) for x in self.masses]
        if self.constraints:
            out["constraints"] = [c.to_dict() for c in self.constraints]
        if self.failed_at is not None:
            out["failed_at"] = self.failed_at
        if self.defect is not None:
            out["defect"] = str(self.defect)
        return out


def solve_masses(rates: Sequence[Fraction], targets: Sequence[Fraction]) -> Certificate:
    """
    targets[k] is the moment of order q = k+1. The first len(rates) moments fix the
    masses; the remaining ones are checked against them.
    """
    rates = tuple(Fraction(P) for P in rates)
    targets = tuple(Fraction(t) for t in targets)
    k = len(rates)
    if not rates:
        raise ValueError("no rates given")
    if len(set(rates)) != k:
        raise ValueError(f"repeated rate in {[str(P) for P in rates]}; collapse the system first")
    if any(P == 0 for P in rates):
        raise ValueError("zero rate; collapse the system first")
    if len(targets) < k:
        raise ValueError(f"{k} rates need at least {k} targets, got {len(targets)}")

    matrix = [[P ** (i + 1) for P in rates] for i in range(k)]
    masses = tuple(solve(matrix, targets[:k]))
    for q in range(k + 1, len(targets) + 1):
        moment = sum((m * P ** q for m, P in zip(masses, rates)), Fraction(0))
        defect = moment - targets[q - 1]
        if defect:
            log.debug("moment q=%d violated by %s", q, defect)
            return Certificate(Status.INFEASIBLE, rates, masses, targets, failed_at=q, defect=defect)
    return Certificate(Status.FEASIBLE, rates, masses, targets)


@dataclass(frozen=True)
class MomentSystem:
    """sum_a m_a P_a^q = f(q) with m_a = n_a mu_a."""
    c: Fraction
    nH: Fraction
    masses: Tuple[Fraction, ...] = field(default_factory=tuple)
    rates: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "nH", Fraction(self.nH))
        object.__setattr__(self, "masses", tuple(Fraction(m) for m in self.masses))
        object.__setattr__(self, "rates", tuple(Fraction(P) for P in self.rates))
        if len(self.masses) != len(self.rates):
            raise ValueError("masses and rates must have the same length")

    @property
    def d(self) -> int:
        return len(self.rates)

    def target(self, q: int) -> Fraction:
        return closed_form_f(q, self.c, self.nH)

    def moment(self, q: int) -> Fraction:
        return sum((m * P ** q for m, P in zip(self.masses, self.rates)), Fraction(0))

    def residual(self, q: int) -> Fraction:
        return self.moment(q) - self.target(q)

    def collapse(self, mode: VandermondeMode = VandermondeMode.CONSECUTIVE) -> "MomentSystem":
        """
        Merge rates that the powers of `mode` cannot tell apart. In odd mode -P and P
        merge onto |P| with the sign folded into the mass. Zero rates drop out.
        """
        merged: Dict[Fraction, Fraction] = {}
        for m, P in zip(self.masses, self.rates):
            if P == 0:
                continue
            if mode is VandermondeMode.ODD and P < 0:
                m, P = -m, -P
            merged[P] = merged.get(P, Fraction(0)) + m
        rates = tuple(merged)
        return MomentSystem(self.c, self.nH, tuple(merged[P] for P in rates), rates)

    def certify(self, q_max: int) -> Certificate:
        """solve_masses on the collapsed rates against the closed-form targets q = 1..q_max."""
        system = self.collapse()
        targets = [self.target(q) for q in range(1, q_max + 1)]
        if system.rates:
            return solve_masses(system.rates, targets)
        # every rate vanished: each moment is 0, so the first nonzero target is violated
        for q, t in enumerate(targets, start=1):
            if t:
                log.debug("no nonzero rates, moment q=%d violated by %s", q, -t)
                return Certificate(Status.INFEASIBLE, targets=tuple(targets), failed_at=q, defect=-t)
        return Certificate(Status.FEASIBLE, targets=tuple(targets))


# -------------------------
# Uniform-rate contradictions
# -------------------------

class UniformCase(Enum):
    CASE1 = "case1"
    CASE3 = "case3"


def uniform_rate_certificate(c: Fraction, case: UniformCase) -> Certificate:
    """
    All nonzero rates equal up to sign. CASE1 forces P^2 = -c/2 and P^4 = 3c^2/8;
    CASE3 forces P^2 = -3c/4 from f(4)/f(2) and P^2 = -5c/6 from f(6)/f(4).
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("uniform-rate systems degenerate at c = 0; use solve_masses")
    f = lambda q: closed_form_f(q, c, 1)  # noqa: E731
    match case:
        case UniformCase.CASE1:
            constraints = (
                Constraint("P^2 = f(2)/f(0)", 2, f(2) / f(0)),
                Constraint("P^4 = f(4)/f(0)", 4, f(4) / f(0)),
            )
        case UniformCase.CASE3:
            constraints = (
                Constraint("P^2 = f(4)/f(2)", 2, f(4) / f(2)),
                Constraint("P^2 = f(6)/f(4)", 2, f(6) / f(4)),
            )
        case _:
            raise ValueError(f"unknown case {case!r}")
    first, second = constraints
    defect = first.value ** (second.exponent // first.exponent) - second.value
    status = Status.INFEASIBLE if defect else Status.FEASIBLE
    return Certificate(status, constraints=constraints, defect=defect)


def flat_uniform_rate_certificate(nH: Fraction, P: Fraction) -> Certificate:
    """c = 0 with every nonzero rate equal to P: the first moment forces nH * P = f(1) = 0."""
    nH, P = Fraction(nH), Fraction(P)
    constraints = (
        Constraint("sum m P = nH P", 1, nH * P),
        Constraint("f(1)", 1, closed_form_f(1, 0, nH)),
    )
    defect = constraints[0].value - constraints[1].value
    status = Status.INFEASIBLE if defect else Status.FEASIBLE
    return Certificate(status, constraints=constraints, defect=defect)
