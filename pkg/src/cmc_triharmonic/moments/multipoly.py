'''
Created on 14 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Tuple, Union

import mpmath

from cmc_triharmonic.errors import MissingRuleError
from cmc_triharmonic.exactnum.rational import to_mpf

log = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    """Q[x_1, ..., x_k] with named variables, in lex order of `names`."""
    names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def of(cls, *names: str) -> "PolyRing":
        return cls(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"{name!r} is not a variable of {self.names}") from None

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, ())

    def const(self, c) -> "MultiPoly":
        return MultiPoly.from_dict(self, {(0,) * self.arity: Fraction(c)})

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.arity
        e[self.index(name)] = 1
        return MultiPoly.from_dict(self, {tuple(e): Fraction(1)})

    def vars(self, *names: str) -> Tuple["MultiPoly", ...]:
        return tuple(self.var(x) for x in names)


@dataclass(frozen=True)
class MultiPoly:
    """
    Sparse polynomial: sorted (exponent, coefficient) pairs, no zero coefficients.
    """
    ring: PolyRing
    terms: Tuple[Tuple[Exponent, Fraction], ...]

    @classmethod
    def from_dict(cls, ring: PolyRing, terms: Mapping[Exponent, Any]) -> "MultiPoly":
        cleaned = tuple(sorted((e, Fraction(c)) for e, c in terms.items() if c))
        return cls(ring, cleaned)

    def as_dict(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    # -------------------------
    # Arithmetic
    # -------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return MultiPoly.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, tuple((e, -c) for e, c in self.terms))

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
        acc: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiPoly.from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = self.ring.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -------------------------
    # Structure
    # -------------------------

    def partial(self, name: str) -> "MultiPoly":
        i = self.ring.index(name)
        acc: Dict[Exponent, Fraction] = {}
        for e, c in self.terms:
            if e[i]:
                f = list(e)
                f[i] -= 1
                acc[tuple(f)] = c * e[i]
        return MultiPoly.from_dict(self.ring, acc)

    def variables(self) -> List[str]:
        return [x for i, x in enumerate(self.ring.names) if any(e[i] for e, _ in self.terms)]

    def collect(self, name: str) -> Dict[int, "MultiPoly"]:
        """Coefficients with respect to one variable: {k: coefficient of name^k}."""
        i = self.ring.index(name)
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms:
            f = list(e)
            k, f[i] = f[i], 0
            parts.setdefault(k, {})[tuple(f)] = c
        return {k: MultiPoly.from_dict(self.ring, t) for k, t in sorted(parts.items())}

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[-1]

    def divmod(self, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Division by a single polynomial in lex order; the remainder is zero iff divisor | self."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        lead_e, lead_c = divisor.leading_term()
        quot: Dict[Exponent, Fraction] = {}
        rem: Dict[Exponent, Fraction] = {}
        p = self
        while p:
            e, c = p.leading_term()
            if all(a >= b for a, b in zip(e, lead_e)):
                shift = tuple(a - b for a, b in zip(e, lead_e))
                factor = c / lead_c
                quot[shift] = quot.get(shift, 0) + factor
                p = p - MultiPoly.from_dict(self.ring, {shift: factor}) * divisor
            else:
                rem[e] = c
                p = p - MultiPoly.from_dict(self.ring, {e: c})
        return MultiPoly.from_dict(self.ring, quot), MultiPoly.from_dict(self.ring, rem)

    def __truediv__(self, other) -> "MultiPoly":
        """Exact division by a scalar or a polynomial factor."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return MultiPoly(self.ring, tuple((e, c / other) for e, c in self.terms))
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def evaluate(self, values: Mapping[str, Any]):
        """
        Substitute every variable. Values may be rationals, mpf, or MultiPoly
        from another ring (a ring homomorphism).
        """
        missing = [x for x in self.variables() if x not in values]
        if missing:
            raise ValueError(f"no value for {', '.join(missing)}")
        inexact = any(isinstance(v, mpmath.mpf) for v in values.values())
        acc = None
        for e, c in self.terms:
            term = to_mpf(c) if inexact else c
            for x, k in zip(self.ring.names, e):
                if k:
                    term = term * values[x] ** k
            acc = term if acc is None else acc + term
        return Fraction(0) if acc is None else acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mono = "*".join(x if k == 1 else f"{x}^{k}" for x, k in zip(self.ring.names, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -------------------------
# Derivations
# -------------------------

RuleImage = Union[MultiPoly, int, Fraction]


@dataclass(frozen=True)
class Derivation:
    """A derivation of a PolyRing given by the images of its variables."""
    ring: PolyRing
    rules: Tuple[Tuple[str, MultiPoly], ...]

    def __post_init__(self):
        named = {x for x, _ in self.rules}
        missing = [x for x in self.ring.names if x not in named]
        if missing:
            raise MissingRuleError(f"no derivation rule for {', '.join(map(repr, missing))}")
        for x, image in self.rules:
            if image.ring != self.ring:
                raise ValueError(f"rule for {x!r} lives in another ring")

    @classmethod
    def of(cls, ring: PolyRing, rules: Mapping[str, RuleImage],
           constants: Iterable[str] = ()) -> "Derivation":
        table: Dict[str, MultiPoly] = {}
        for name in constants:
            ring.index(name)
            table[name] = ring.zero()
        for name, image in rules.items():
            ring.index(name)
            table[name] = image if isinstance(image, MultiPoly) else ring.const(image)
        return cls(ring, tuple(sorted(table.items())))

    def rule(self, name: str) -> MultiPoly:
        for x, image in self.rules:
            if x == name:
                return image
        raise MissingRuleError(f"no derivation rule for {name!r}")

    def with_rule(self, name: str, image: RuleImage) -> "Derivation":
        table = dict(self.rules)
        table[name] = image if isinstance(image, MultiPoly) else self.ring.const(image)
        return Derivation(self.ring, tuple(sorted(table.items())))

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return formal_derive(p, self)


def formal_derive(p: MultiPoly, D: Derivation) -> MultiPoly:
    """Leibniz extension: D(p) = sum over variables x of dp/dx * D(x)."""
    if p.ring != D.ring:
        raise ValueError("polynomial and derivation live in different rings")
    acc = p.ring.zero()
    for x in p.variables():
        image = D.rule(x)
        if image:
            acc = acc + p.partial(x) * image
    return acc
