'''
Created on 12 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from cmc_triharmonic.exactnum.rational import DEFAULT_DIGITS, BigFloat

log = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class UniPoly:
    """
    Univariate polynomial over the rationals. coeffs[k] is the coefficient of t^k,
    trailing zeros trimmed; the zero polynomial has no coefficients.
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -------------------------
    # Construction
    # -------------------------

    @classmethod
    def of(cls, *coeffs: Coefficient) -> "UniPoly":
        """Coefficients from the constant term upwards."""
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Coefficient) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Coefficient = 1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls.monomial(1)

    # -------------------------
    # Inspection
    # -------------------------

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, t: Coefficient) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -------------------------
    # Ring operations
    # -------------------------

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        if len(rem) - 1 < dd:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem[:dd]))

    def __floordiv__(self, other) -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "UniPoly":
        return self.divmod(other)[1]

    def __truediv__(self, other) -> "UniPoly":
        """Exact division; raises if a remainder is left."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return UniPoly(tuple(c / other for c in self.coeffs))
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    # -------------------------
    # Calculus and gcd
    # -------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "UniPoly":
        if not self:
            return self
        return self / self.leading

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        """p / gcd(p, p'): same distinct roots, all simple."""
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        return (self / g).monic()

    def primitive(self) -> Tuple[Fraction, "UniPoly"]:
        """
        Split into content * primitive part, with the primitive part having coprime
        integer coefficients and a positive leading coefficient.
        """
        if not self:
            return Fraction(0), self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        g = math.gcd(*nums)
        if nums[-1] < 0:
            g = -g
        content = Fraction(g, den)
        return content, self / content

    def multiplicity_of_zero(self) -> int:
        """Power of t dividing the polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def to_str(self, var: str = "t") -> str:
        if not self:
            return "0"
        parts: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.to_str()


# -------------------------
# Sturm sequences
# -------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: UniPoly) -> List[UniPoly]:
    """p, p', then negated remainders down to a nonzero constant (or the gcd)."""
    seq = [p]
    d = p.derivative()
    if not d:
        return seq
    seq.append(d)
    while True:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def sign_variations(seq: List[UniPoly], x: Fraction) -> int:
    signs = [s for s in (_sign(p(x)) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_open(seq: List[UniPoly], lo: Fraction, hi: Fraction) -> int:
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def _clear_endpoint(q: UniPoly, end: Fraction, toward: Fraction) -> Fraction:
    """
    Move a root endpoint inwards by the smallest power of 1/2 that leaves the
    endpoint's neighbourhood root-free. The deflated polynomial q/(t-end) certifies
    that no other root was stepped over.
    """
    direction = 1 if toward > end else -1
    half_width = abs(toward - end) / 2
    deflated = q / UniPoly.of(-end, 1)
    deflated_seq = sturm_sequence(deflated)
    k = 1
    while True:
        eps = Fraction(1, 2 ** k)
        cand = end + direction * eps
        if eps < half_width and q(cand) != 0:
            a, b = min(end, cand), max(end, cand)
            if _count_open(deflated_seq, a, b) == 0:
                log.warning("endpoint %s is a root, interval shrunk by 2^-%d", end, k)
                return cand
        k += 1


def sturm_root_count(p: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi), exact."""
    if not p:
        raise ValueError("Sturm count of the zero polynomial is undefined")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    q = p.squarefree_part()
    if q.degree < 1:
        return 0
    if q(lo) == 0:
        lo = _clear_endpoint(q, lo, hi)
    if q(hi) == 0:
        hi = _clear_endpoint(q, hi, lo)
    seq = sturm_sequence(q)
    count = _count_open(seq, lo, hi)
    log.debug("sturm chain length %d, %d root(s) in (%s, %s)", len(seq), count, lo, hi)
    return count


# -------------------------
# Bisection
# -------------------------

@dataclass(frozen=True)
class IsolatedRoot:
    """A simple root: BigFloat value plus the exact bracket [lo, hi] it was refined to."""
    value: BigFloat
    lo: Fraction
    hi: Fraction
    steps: int = 0
    exact: bool = field(default=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def isolate_root(p: UniPoly, lo: Fraction, hi: Fraction,
                 digits: int = DEFAULT_DIGITS) -> IsolatedRoot:
    """
    Refine the unique root of p in (lo, hi) by exact bisection until the bracket
    is narrower than 10^-digits.
    """
    count = sturm_root_count(p, lo, hi)
    if count != 1:
        raise ValueError(f"expected exactly one root in ({lo}, {hi}), found {count}")

    q = p.squarefree_part()
    left, right = Fraction(lo), Fraction(hi)
    if q(left) == 0:
        left = _clear_endpoint(q, left, right)
    if q(right) == 0:
        right = _clear_endpoint(q, right, left)

    width = Fraction(1, 10 ** digits)
    left_sign = _sign(q(left))
    steps = 0
    exact = False
    while right - left >= width:
        mid = (left + right) / 2
        s = _sign(q(mid))
        steps += 1
        if s == 0:
            left = right = mid
            exact = True
            break
        if s == left_sign:
            left = mid
        else:
            right = mid

    log.debug("bisection: %d steps, bracket width %s", steps, float(right - left))
    value = BigFloat.of((left + right) / 2, digits=digits, error=(right - left) / 2)
    return IsolatedRoot(value=value, lo=left, hi=right, steps=steps, exact=exact)
