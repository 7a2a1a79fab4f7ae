'''
Created on 16 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List

from cmc_triharmonic.checks import CheckResult
from cmc_triharmonic.moments.chains import r6_elimination_check, theorem3_chain_check
from cmc_triharmonic.moments.lemmas import lemma3_formal_check, lemma4_formal_check, recurrence_check
from cmc_triharmonic.moments.multipoly import PolyRing
from cmc_triharmonic.moments.vandermonde import (
    MomentSystem, Status, UniformCase, VandermondeMode, flat_uniform_rate_certificate,
    solve_masses, uniform_rate_certificate, vandermonde_identity_check,
)

log = logging.getLogger(__name__)

DEFAULT_QMAX  = 15
DEFAULT_CASES = 1000
DEFAULT_SEED  = 0
MAX_K         = 6


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def lemma3_suite(q_max: int, cases: int, seed: int) -> List[CheckResult]:
    nH = PolyRing.of("nH").var("nH")
    checks = [recurrence_check(2 * q_max, Fraction(c), nH) for c in (-1, 1)]
    checks.append(lemma3_formal_check(q_max))
    return checks


def lemma4_suite(q_max: int, cases: int, seed: int) -> List[CheckResult]:
    return [lemma4_formal_check(keep_gamma=True), lemma4_formal_check(keep_gamma=False)]


def vandermonde_suite(q_max: int, cases: int, seed: int) -> List[CheckResult]:
    rng = random.Random(seed)
    checks = []
    for mode in VandermondeMode:
        name = f"vandermonde {mode.value} x{cases}"
        failed = None
        for i in range(cases):
            values = [random_rational(rng) for _ in range(rng.randint(1, MAX_K))]
            result = vandermonde_identity_check(values, mode)
            if not result:
                failed = CheckResult(name, False, failed_at=i, detail=result.detail)
                break
        checks.append(failed or CheckResult(name, True))

    # masses recovered from moments they generated
    name = f"mass round trip x{cases // 10}"
    result = CheckResult(name, True)
    for i in range(cases // 10):
        d = rng.randint(1, 5)
        rates = []
        while len(rates) < d:
            P = random_rational(rng)
            if P and P not in rates:
                rates.append(P)
        masses = [random_rational(rng) for _ in rates]
        system = MomentSystem(Fraction(0), Fraction(0), tuple(masses), tuple(rates))
        cert = solve_masses(rates, [system.moment(q) for q in range(1, d + 3)])
        if cert.status is not Status.FEASIBLE or list(cert.masses) != masses:
            result = CheckResult(name, False, failed_at=i, detail=f"rates {[str(P) for P in rates]}")
            break
    checks.append(result)

    for c in (-1, 1):
        for case in UniformCase:
            cert = uniform_rate_certificate(Fraction(c), case)
            checks.append(CheckResult(
                f"uniform rate {case.value} c={c}",
                cert.status is Status.INFEASIBLE and cert.verify(),
                detail=f"defect {cert.defect}",
            ))
    cert = flat_uniform_rate_certificate(Fraction(1), Fraction(1))
    checks.append(CheckResult("flat uniform rate", cert.status is Status.INFEASIBLE and cert.verify()))
    return checks


def theorem3_suite(q_max: int, cases: int, seed: int) -> List[CheckResult]:
    return [theorem3_chain_check()]


def r6_suite(q_max: int, cases: int, seed: int) -> List[CheckResult]:
    return [r6_elimination_check()]


SUITES: Dict[str, Callable[[int, int, int], List[CheckResult]]] = {
    "lemma3": lemma3_suite,
    "lemma4": lemma4_suite,
    "vandermonde": vandermonde_suite,
    "theorem3": theorem3_suite,
    "r6": r6_suite,
}


def run_suite(name: str, q_max: int = DEFAULT_QMAX, cases: int = DEFAULT_CASES,
              seed: int = DEFAULT_SEED) -> List[CheckResult]:
    if q_max < 1:
        raise ValueError(f"--qmax must be at least 1, got {q_max}")
    if cases < 0:
        raise ValueError(f"--cases must be nonnegative, got {cases}")
    names = list(SUITES) if name == "all" else [name]
    checks: List[CheckResult] = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
        log.info("suite %s", suite)
        checks.extend(SUITES[suite](q_max, cases, seed))
    return checks
