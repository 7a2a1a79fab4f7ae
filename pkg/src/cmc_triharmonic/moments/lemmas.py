'''
Created on 14 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Optional

from cmc_triharmonic.checks import CheckResult
from cmc_triharmonic.exactnum.rational import double_factorial
from cmc_triharmonic.moments.multipoly import Derivation, MultiPoly, PolyRing

log = logging.getLogger(__name__)


def closed_form_f(q: int, c, nH):
    """
    Moment targets sum n_a mu_a P_a^q: zero for odd q,
    (q-1)!!/q!! * (-c)^(q/2) * nH for even q. c and nH may be rationals or MultiPoly.
    """
    if q < 0:
        raise ValueError(f"moment order must be nonnegative, got {q}")
    if q % 2:
        return 0 * nH
    ratio = Fraction(double_factorial(q - 1), double_factorial(q))
    return ratio * (-c) ** (q // 2) * nH


def recurrence_check(q_max: int, c, nH,
                     f: Optional[Callable[[int], object]] = None) -> CheckResult:
    """(q+1) f(q+1) + c q f(q-1) = 0 for 1 <= q <= q_max."""
    if q_max < 1:
        raise ValueError(f"q_max must be at least 1, got {q_max}")
    if f is None:
        f = lambda q: closed_form_f(q, c, nH)  # noqa: E731
    name = f"recurrence q<={q_max} c={c}"
    for q in range(1, q_max + 1):
        value = (q + 1) * f(q + 1) + c * q * f(q - 1)
        if value:
            log.debug("recurrence breaks at q=%d: %s", q, value)
            return CheckResult(name, False, failed_at=q, detail=f"residual {value}")
    return CheckResult(name, True)


# -------------------------
# Frame ring: mu_a, P_a, n_a (a = 1..d) and c
# -------------------------

def frame_ring(d: int = 3, extra=()) -> PolyRing:
    names = [f"mu{a}" for a in range(1, d + 1)]
    names += [f"P{a}" for a in range(1, d + 1)]
    names += [f"n{a}" for a in range(1, d + 1)]
    return PolyRing(tuple(names) + ("c",) + tuple(extra))


def frame_derivation(ring: PolyRing, d: int = 3) -> Derivation:
    """e1(mu_a) = mu_a P_a, e1(P_a) = P_a^2 + c; multiplicities and c are constant."""
    c = ring.var("c")
    rules = {}
    for a in range(1, d + 1):
        mu, P = ring.var(f"mu{a}"), ring.var(f"P{a}")
        rules[f"mu{a}"] = mu * P
        rules[f"P{a}"] = P ** 2 + c
    constants = [x for x in ring.names if x not in rules]
    return Derivation.of(ring, rules, constants)


def power_sum(ring: PolyRing, q: int, d: int = 3, mu_power: int = 1) -> MultiPoly:
    """sum_a n_a mu_a^mu_power P_a^q."""
    acc = ring.zero()
    for a in range(1, d + 1):
        acc = acc + ring.var(f"n{a}") * ring.var(f"mu{a}") ** mu_power * ring.var(f"P{a}") ** q
    return acc


def lemma3_formal_check(q_max: int, d: int = 3,
                        derivation: Optional[Derivation] = None) -> CheckResult:
    """
    e1(sum n mu P^q) = (1+q) sum n mu P^(q+1) + c q sum n mu P^(q-1), for q <= q_max,
    with the multiplicities kept as symbols.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be at least 1, got {q_max}")
    ring = frame_ring(d) if derivation is None else derivation.ring
    D = derivation or frame_derivation(ring, d)
    c = ring.var("c")
    name = f"lemma3 formal q<={q_max} d={d}"
    for q in range(1, q_max + 1):
        lhs = D(power_sum(ring, q, d))
        rhs = (1 + q) * power_sum(ring, q + 1, d) + c * q * power_sum(ring, q - 1, d)
        if lhs != rhs:
            return CheckResult(name, False, failed_at=q, detail=f"difference {lhs - rhs}")
    log.debug("%s: %d identities", name, q_max)
    return CheckResult(name, True)


def lemma4_formal_check(keep_gamma: bool = True, d: int = 3,
                        derivation: Optional[Derivation] = None) -> CheckResult:
    """
    The expanded form of dS + S^2 - ncS - n^2cH^2 with the Laplacian written as
    -e1e1(S) + e1(S)(sum n P + Gamma). Gamma is one aggregate connection symbol,
    or zero when keep_gamma is off.
    """
    ring = frame_ring(d, extra=("n", "Gamma")) if derivation is None else derivation.ring
    D = derivation or frame_derivation(ring, d)
    c, n = ring.var("c"), ring.var("n")
    gamma = ring.var("Gamma") if keep_gamma else ring.zero()

    S = power_sum(ring, 0, d, mu_power=2)
    trace = power_sum(ring, 0, d)
    rate_sum = ring.zero()
    for a in range(1, d + 1):
        rate_sum = rate_sum + ring.var(f"n{a}") * ring.var(f"P{a}")

    e1S = D(S)
    e1e1S = D(e1S)
    lhs = -e1e1S + e1S * (rate_sum + gamma) + S ** 2 - n * c * S - c * trace ** 2
    display = (-6 * power_sum(ring, 2, d, mu_power=2)
               + 2 * power_sum(ring, 1, d, mu_power=2) * (rate_sum + gamma)
               + S ** 2 - (n + 2) * c * S - c * trace ** 2)

    steps = [
        CheckResult("e1(S) = 2 sum n mu^2 P", e1S == 2 * power_sum(ring, 1, d, mu_power=2)),
        CheckResult("e1e1(S) = 6 sum n mu^2 P^2 + 2cS",
                    e1e1S == 6 * power_sum(ring, 2, d, mu_power=2) + 2 * c * S),
        CheckResult("expanded triharmonic equation", lhs == display,
                    detail="" if lhs == display else f"difference {lhs - display}"),
    ]
    return CheckResult.all_of(f"lemma4 formal gamma={'symbolic' if keep_gamma else 0}", steps)
