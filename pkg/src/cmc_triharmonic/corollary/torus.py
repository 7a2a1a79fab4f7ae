'''
Created on 16 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import mpmath

from cmc_triharmonic.errors import VerificationError
from cmc_triharmonic.exactnum.matrix import determinant
from cmc_triharmonic.exactnum.rational import DEFAULT_DIGITS, GUARD_DIGITS, MIN_DIGITS, BigFloat, to_mpf
from cmc_triharmonic.exactnum.unipoly import IsolatedRoot, UniPoly, isolate_root, sturm_root_count
from cmc_triharmonic.conditions.triharmonic import triharmonic_residual
from cmc_triharmonic.geometry.catalog import clifford_torus_spectrum
from cmc_triharmonic.geometry.spaceform import SpaceForm, invariants

log = logging.getLogger(__name__)

ROOT_INTERVAL = (Fraction(0), Fraction(2))


def _require_dimension(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"the torus branch needs n >= 3, got {n!r}")


def f_n_poly(n: int) -> UniPoly:
    """n^4 t^3 - 2n^2(n^2-5n+5) t^2 - (n-1)(2n-5)(3n-5) t - (n-1)(n-2)^2."""
    _require_dimension(n)
    return UniPoly.of(
        -(n - 1) * (n - 2) ** 2,
        -(n - 1) * (2 * n - 5) * (3 * n - 5),
        -2 * n ** 2 * (n ** 2 - 5 * n + 5),
        n ** 4,
    )


@dataclass(frozen=True)
class CorollaryRoot:
    n: int
    root: IsolatedRoot
    sturm_count: int

    @property
    def value(self) -> BigFloat:
        return self.root.value


def t0(n: int, digits: int = DEFAULT_DIGITS) -> CorollaryRoot:
    """The root of f_n in (0, 2), certified unique by a Sturm count."""
    p = f_n_poly(n)
    lo, hi = ROOT_INTERVAL
    count = sturm_root_count(p, lo, hi)
    if count != 1:
        raise VerificationError(f"f_{n} has {count} roots in ({lo}, {hi}), expected exactly one")
    root = isolate_root(p, lo, hi, digits=digits)
    log.debug("t0(%d) in [%s, %s] after %d bisections", n, float(root.lo), float(root.hi), root.steps)
    return CorollaryRoot(n=n, root=root, sturm_count=count)


def clifford_a2(n: int, H, digits: int = DEFAULT_DIGITS) -> BigFloat:
    """a^2 = 2(n-1)^2 / (n^2H^2 + 2n(n-1) + nH sqrt(n^2H^2 + 4(n-1)))."""
    _require_dimension(n)
    if isinstance(H, BigFloat):
        H = H.value
    with mpmath.workdps(digits + GUARD_DIGITS):
        H = to_mpf(H)
        if not H > 0:
            raise ValueError(f"mean curvature must be positive, got {H}")
        nH2 = n * n * H * H
        a2 = 2 * (n - 1) ** 2 / (nH2 + 2 * n * (n - 1) + n * H * mpmath.sqrt(nH2 + 4 * (n - 1)))
        # 0 < a2 < 1, so guard digits keep the absolute error below 10^-digits
        return BigFloat.of(a2, digits=digits, error=mpmath.mpf(10) ** -digits)


@dataclass(frozen=True)
class CorollaryResult:
    n: int
    t0: BigFloat
    bracket: tuple
    a2: BigFloat
    H2: BigFloat
    gap: BigFloat
    residual: BigFloat
    tolerance: BigFloat
    sturm_unique: bool

    @property
    def mean_curvature_matches(self) -> bool:
        return self.gap.value < self.tolerance.value

    @property
    def residual_vanishes(self) -> bool:
        return abs(self.residual.value) < self.tolerance.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "t0": self.t0.to_dict(),
            "t0_bracket": [str(self.bracket[0]), str(self.bracket[1])],
            "a2": self.a2.to_dict(),
            "H2": self.H2.to_dict(),
            "gap": mpmath.nstr(self.gap.value, 5),
            "residual": mpmath.nstr(self.residual.value, 5),
            "tolerance": mpmath.nstr(self.tolerance.value, 3),
            "sturm_unique": self.sturm_unique,
        }


def corollary_crosscheck(n: int, digits: int = DEFAULT_DIGITS) -> CorollaryResult:
    """
    H^2 = t0 gives the radius a^2; the torus S^{n-1}(a) x S^1 built from it must
    have mean curvature t0 and a vanishing triharmonic residual, to the last few digits.
    """
    if digits < MIN_DIGITS:
        raise ValueError(f"precision must be at least {MIN_DIGITS} digits, got {digits}")
    root = t0(n, digits + GUARD_DIGITS)
    work = digits + GUARD_DIGITS
    with mpmath.workdps(work):
        t = root.value.value
        a2 = clifford_a2(n, mpmath.sqrt(t), digits=work).value
        sf = SpaceForm(n, Fraction(1))
        inv = invariants(sf, clifford_torus_spectrum(n - 1, 1, a2))
        residual = triharmonic_residual(sf, inv)
        tol = mpmath.mpf(10) ** (3 - digits)
        gap = abs(inv.H2 - t)

        log.info("corollary n=%d: |H2 - t0| = %s, |T1| = %s", n, mpmath.nstr(gap, 3), mpmath.nstr(abs(residual), 3))
        if not (gap < tol and abs(residual) < tol):
            log.warning("n=%d: torus misses the tolerance %s", n, mpmath.nstr(tol, 3))

        return CorollaryResult(
            n=n,
            t0=BigFloat.of(t, digits=digits, error=root.value.error),
            bracket=(root.root.lo, root.root.hi),
            a2=BigFloat.of(a2, digits=digits, error=mpmath.mpf(10) ** -digits),
            H2=BigFloat.of(inv.H2, digits=digits),
            gap=BigFloat.of(gap, digits=digits),
            residual=BigFloat.of(residual, digits=digits),
            tolerance=BigFloat.of(tol, digits=digits),
            sturm_unique=root.sturm_count == 1,
        )


# -------------------------
# Elimination of the radius
# -------------------------

def torus_equations(n: int) -> tuple:
    """
    With u = (1-a^2)/a^2 and A = n-1, as polynomials in u with coefficients in h = H^2:
    p1 = u^2 (S^2 - nS - n^2 h), p2 = u (n^2 h - n^2 H^2(u)), coefficients low to high.
    """
    _require_dimension(n)
    A = n - 1
    h = UniPoly.t()
    p1 = [UniPoly.constant(1), UniPoly.constant(-n), 2 * A - n * n * h, UniPoly.constant(-n * A), UniPoly.constant(A * A)]
    p2 = [UniPoly.constant(-1), n * n * h + 2 * A, UniPoly.constant(-A * A)]
    return p1, p2


def sylvester_matrix(p: Sequence[UniPoly], q: Sequence[UniPoly]) -> List[List[UniPoly]]:
    """Sylvester matrix of two polynomials given by coefficient lists (low to high)."""
    m, k = len(p) - 1, len(q) - 1
    size = m + k
    zero = UniPoly()
    rows = []
    for i in range(k):
        row = [zero] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ResultantVerdict:
    n: int
    resultant: UniPoly
    target: UniPoly
    divisible: bool
    quotient: Optional[UniPoly] = None
    content: Optional[Fraction] = None
    h_power: int = 0
    extraneous: Optional[UniPoly] = None

    def __bool__(self) -> bool:
        return self.divisible

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "n": self.n,
            "resultant": self.resultant.to_str("h"),
            "f_n": self.target.to_str("h"),
            "divisible": self.divisible,
        }
        if self.divisible:
            out["content"] = str(self.content)
            out["h_power"] = self.h_power
            out["extraneous"] = self.extraneous.to_str("h")
        return out


def torus_residual_resultant(n: int, target: Optional[UniPoly] = None) -> ResultantVerdict:
    """Res_u(p1, p2) as a polynomial in h, and whether f_n(h) divides it."""
    p1, p2 = torus_equations(n)
    target = target if target is not None else f_n_poly(n)
    res = determinant(sylvester_matrix(p1, p2))
    quotient, remainder = res.divmod(target)
    if not res or remainder:
        log.debug("n=%d: f_n leaves remainder %s", n, remainder.to_str("h"))
        return ResultantVerdict(n, res, target, divisible=False)

    content, primitive = quotient.primitive()
    h_power = primitive.multiplicity_of_zero()
    extraneous = primitive // UniPoly.monomial(h_power)
    if extraneous.degree > 0:
        log.warning("n=%d: resultant carries extraneous factor %s", n, extraneous.to_str("h"))
    return ResultantVerdict(n, res, target, True, quotient, content, h_power, extraneous)
