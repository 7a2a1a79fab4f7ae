'''
Created on 15 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from cmc_triharmonic.checks import CheckResult
from cmc_triharmonic.moments.multipoly import Derivation, MultiPoly, PolyRing

log = logging.getLogger(__name__)


def _identity(name: str, lhs: MultiPoly, rhs: MultiPoly) -> CheckResult:
    if lhs == rhs:
        return CheckResult(name, True)
    return CheckResult(name, False, detail=f"difference {lhs - rhs}")


# -------------------------
# Euclidean chain: A = sum_{a<=r} n mu^2, B = sum_{a>r} n mu^2
# -------------------------

THEOREM3_RING = PolyRing.of("A", "B", "P", "N")


def theorem3_derivation() -> Derivation:
    A, P = THEOREM3_RING.vars("A", "P")
    return Derivation.of(THEOREM3_RING, {"A": 2 * P * A, "B": 0, "P": P ** 2}, constants=("N",))


def theorem3_chain_check(derivation: Optional[Derivation] = None) -> CheckResult:
    """
    E = 2(N-3)P^2 A + (A+B)^2 differentiates to 8(N-3)P^3 A + 4(A+B)AP, and
    D(E)/(4P) - E = -(A+B)B, so A+B != 0 forces B = 0.
    """
    D = derivation or theorem3_derivation()
    A, B, P, N = THEOREM3_RING.vars("A", "B", "P", "N")
    E = 2 * (N - 3) * P ** 2 * A + (A + B) ** 2
    DE = D(E)
    step1 = _identity("derive", DE, 8 * (N - 3) * P ** 3 * A + 4 * (A + B) * A * P)

    quotient, remainder = DE.divmod(4 * P)
    if remainder:
        step2 = CheckResult("reduce", False, detail=f"4P does not divide {DE}")
    else:
        step2 = _identity("reduce", quotient - E, -(A + B) * B)
    return CheckResult.all_of("theorem3 chain", [step1, step2])


# -------------------------
# Five-dimensional chain
# -------------------------

@dataclass(frozen=True)
class R6Equations:
    """
    The equations of the five-dimensional argument. The odd ring carries
    u = mu^2, h = H^2, the rate P and the connection coefficient G; the even
    ring replaces P by p = P^2.
    """
    odd: PolyRing
    even: PolyRing
    G1: MultiPoly
    G3: MultiPoly
    G4_odd: MultiPoly
    G4: MultiPoly
    G5: MultiPoly
    G6: MultiPoly
    G7: MultiPoly
    G8: MultiPoly

    def odd_derivation(self) -> Derivation:
        u, P, G = self.odd.vars("u", "P", "G")
        return Derivation.of(self.odd, {"u": 2 * u * P, "h": 0, "P": P ** 2, "G": G ** 2})

    def reduced_derivation(self) -> Derivation:
        """e1/P on even polynomials: D(u) = 2u, D(p) = 2p, D(h) = 0."""
        u, p = self.even.vars("u", "p")
        return Derivation.of(self.even, {"u": 2 * u, "p": 2 * p, "h": 0})

    def W(self, ring: PolyRing) -> MultiPoly:
        u, h = ring.vars("u", "h")
        return 2 * u + 25 * h


def r6_equations(g7_h_coefficient: int = 250) -> R6Equations:
    odd = PolyRing.of("u", "h", "P", "G")
    even = PolyRing.of("u", "h", "p")

    u, h, P, G = odd.vars("u", "h", "P", "G")
    W = 2 * u + 25 * h
    G1 = -4 * u * P ** 2 + 4 * u * P * G + W ** 2
    G3 = -4 * P ** 2 + 3 * P * G + G ** 2 + 2 * W
    G4_odd = 32 * u ** 2 * P ** 2 * W - 20 * u * P ** 2 * W ** 2 + W ** 4

    u, h, p = even.vars("u", "h", "p")
    W = 2 * u + 25 * h
    G4 = 32 * u ** 2 * p * W - 20 * u * p * W ** 2 + W ** 4
    G5 = 32 * u ** 2 * p - 20 * u * p * W + W ** 3
    G6 = -12 * u * p - 500 * h * p + 3 * W ** 2
    G7 = -12 * u * p - g7_h_coefficient * h * p + 6 * u * W
    G8 = 4 * u * h - 125 * h ** 2
    return R6Equations(odd, even, G1, G3, G4_odd, G4, G5, G6, G7, G8)


def _split_linear(g: MultiPoly, name: str):
    """g = -p*a + b with a, b free of p."""
    parts = g.collect(name)
    if set(parts) - {0, 1}:
        raise ValueError(f"{g} is not linear in {name}")
    zero = g.ring.zero()
    return -parts.get(1, zero), parts.get(0, zero)


def r6_elimination_check(eqs: Optional[R6Equations] = None) -> CheckResult:
    """Every step from the first structure equation down to 4uh - 125h^2 = 0."""
    eqs = eqs or r6_equations()
    steps: List[CheckResult] = []

    u, h, P, G = eqs.odd.vars("u", "h", "P", "G")
    W = eqs.W(eqs.odd)
    e1 = eqs.odd_derivation()
    steps.append(_identity("e1(G1) = 4uP G3", e1(eqs.G1), 4 * u * P * eqs.G3))
    steps.append(_identity(
        "G1, G3 eliminate G",
        16 * u ** 2 * P ** 2 * eqs.G3 - eqs.G4_odd,
        eqs.G1 * (16 * u * P ** 2 + 4 * u * P * G - W ** 2),
    ))

    square = eqs.G4.evaluate({"u": u, "h": h, "p": P ** 2})
    steps.append(_identity("G4 is even in P", square, eqs.G4_odd))

    u, h, p = eqs.even.vars("u", "h", "p")
    W = eqs.W(eqs.even)
    steps.append(_identity("G4 = W G5", eqs.G4, W * eqs.G5))

    D = eqs.reduced_derivation()
    steps.append(_identity("D(G5) = 4u G6", D(eqs.G5), 4 * u * eqs.G6))
    steps.append(_identity("D(G6) = 4 G7", D(eqs.G6), 4 * eqs.G7))

    a6, b6 = _split_linear(eqs.G6, "p")
    a7, b7 = _split_linear(eqs.G7, "p")
    steps.append(_identity("eliminate p", a7 * eqs.G6 - a6 * eqs.G7, -150 * W * eqs.G8))
    steps.append(_identity(
        "cross expansion",
        2 * u * (12 * u + 500 * h) - W * (12 * u + 250 * h),
        50 * h * (4 * u - 125 * h),
    ))

    numerator = b6 * a7 - b7 * a6
    _, remainder = numerator.divmod(eqs.G8)
    if remainder:
        steps.append(CheckResult("G8 divides the p-resultant", False,
                                 detail=f"remainder {remainder}"))
    else:
        steps.append(CheckResult("G8 divides the p-resultant", True))

    result = CheckResult.all_of("r6 elimination", steps)
    log.debug("%s: %d steps, passed=%s", result.name, len(steps), result.passed)
    return result
