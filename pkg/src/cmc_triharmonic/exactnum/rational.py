'''
Created on 12 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from cmc_triharmonic.errors import UsageError

log = logging.getLogger(__name__)

# Exact scalars are plain Fractions: always normalised, denominator > 0.
ExactRational = Fraction
Scalar = Union[Fraction, mpmath.mpf]

DEFAULT_DIGITS = 40
MIN_DIGITS     = 16
GUARD_DIGITS   = 10

RE_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
RE_DECIMAL  = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or an integer. Decimals are rejected so exact inputs stay exact.
    """
    m = RE_RATIONAL.match(text or "")
    if not m:
        raise UsageError(f"malformed rational {text!r} (expected p/q or an integer)")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise UsageError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_decimal(text: str) -> Fraction:
    """Like parse_rational, but also takes terminating decimals (converted exactly)."""
    if RE_DECIMAL.match(text or ""):
        return Fraction(text.strip())
    return parse_rational(text)


def double_factorial(k: int) -> int:
    """
    k!! = k(k-2)(k-4)..., ending at 1 or 2. (-1)!! = 0!! = 1.
    """
    if k < -1:
        raise ValueError(f"double factorial undefined for k={k}")
    return math.prod(range(k, 0, -2))


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def to_mpf(x) -> mpmath.mpf:
    """
    Convert at the current working precision. Fractions go through numerator and
    denominator; mixing Fraction and mpf directly would silently round via float.
    """
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    raise TypeError(f"cannot convert {type(x).__name__} to mpf")


def lift(x, inexact: bool):
    """Coerce x to the arithmetic of a computation: mpf when inexact, Fraction otherwise."""
    if inexact:
        return to_mpf(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if it is irrational."""
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class BigFloat:
    """
    A real at decimal working precision `digits`, optionally with an absolute error bound.
    """
    value: mpmath.mpf
    digits: int = DEFAULT_DIGITS
    error: Optional[mpmath.mpf] = None

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ValueError(f"precision must be at least {MIN_DIGITS} digits, got {self.digits}")

    @classmethod
    def of(cls, x, digits: int = DEFAULT_DIGITS, error=None) -> "BigFloat":
        with mpmath.workdps(digits + GUARD_DIGITS):
            value = to_mpf(x)
            err = to_mpf(error) if error is not None else None
        return cls(value=value, digits=digits, error=err)

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.digits)

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self):
        out = {"value": str(self), "digits": self.digits}
        if self.error is not None:
            out["error"] = mpmath.nstr(self.error, 5)
        return out
