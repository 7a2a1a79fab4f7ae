'''
Created on 13 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple

import mpmath

from cmc_triharmonic.exactnum.rational import Scalar, is_exact, lift, rational_sqrt

log = logging.getLogger(__name__)


def _scalar(x) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        return x
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def render_scalar(x) -> str:
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, mpmath.mp.dps)
    return str(x)


@dataclass(frozen=True)
class SpaceForm:
    """Ambient N^{n+1}(c) for a hypersurface of dimension n."""
    n: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"hypersurface dimension must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "c", Fraction(self.c))

    @property
    def ambient(self) -> str:
        dim = self.n + 1
        if self.c == 1:
            return f"S^{dim}"
        if self.c == 0:
            return f"R^{dim}"
        if self.c == -1:
            return f"H^{dim}"
        return f"N^{dim}({self.c})"

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "c": str(self.c), "ambient": self.ambient}


@dataclass(frozen=True)
class Surd:
    """coefficient * sqrt(radicand), radicand > 0."""
    coefficient: Scalar
    radicand: Scalar = Fraction(1)

    @property
    def square(self) -> Scalar:
        return self.coefficient * self.coefficient * self.radicand

    @property
    def sign(self) -> int:
        return (self.coefficient > 0) - (self.coefficient < 0)

    def __neg__(self) -> "Surd":
        return Surd(-self.coefficient, self.radicand)

    def to_mpf(self) -> mpmath.mpf:
        return lift(self.coefficient, True) * mpmath.sqrt(lift(self.radicand, True))

    def __str__(self) -> str:
        if is_exact(self.coefficient) and is_exact(self.radicand):
            root = rational_sqrt(Fraction(self.radicand))
            if root is not None:
                return str(self.coefficient * root)
            if self.coefficient == 0:
                return "0"
            return f"{self.coefficient}*sqrt({self.radicand})"
        return render_scalar(self.to_mpf())


@dataclass(frozen=True)
class CurvatureEntry:
    coefficient: Scalar
    multiplicity: int


@dataclass(frozen=True)
class CurvatureSpectrum:
    """
    Distinct principal curvatures mu_alpha = a_alpha * sqrt(radicand) with
    multiplicities n_alpha. One radicand per spectrum keeps products exact.
    """
    entries: Tuple[CurvatureEntry, ...]
    radicand: Scalar = Fraction(1)

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a spectrum needs at least one principal curvature")
        object.__setattr__(self, "radicand", _scalar(self.radicand))
        if not self.radicand > 0:
            raise ValueError(f"radicand must be positive, got {self.radicand}")
        seen = set()
        for e in self.entries:
            if not isinstance(e.multiplicity, int) or e.multiplicity < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {e.multiplicity!r}")
            if e.coefficient in seen:
                raise ValueError(f"repeated principal curvature {e.coefficient}")
            seen.add(e.coefficient)

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Any, int]], radicand=Fraction(1)) -> "CurvatureSpectrum":
        """Build from (coefficient, multiplicity) pairs, merging equal values."""
        merged: Dict[Any, int] = {}
        for coeff, mult in pairs:
            key = _scalar(coeff)
            merged[key] = merged.get(key, 0) + mult
        entries = tuple(CurvatureEntry(k, m) for k, m in merged.items())
        return cls(entries=entries, radicand=radicand)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.radicand) and all(is_exact(e.coefficient) for e in self.entries)

    def values(self) -> List[Surd]:
        return [Surd(e.coefficient, self.radicand) for e in self.entries]

    def expanded(self) -> List[Scalar]:
        """Coefficients repeated by multiplicity: lambda_1..lambda_n up to the common sqrt."""
        return [e.coefficient for e in self.entries for _ in range(e.multiplicity)]

    def flipped(self) -> "CurvatureSpectrum":
        """Opposite unit normal: every principal curvature changes sign."""
        return CurvatureSpectrum(
            entries=tuple(CurvatureEntry(-e.coefficient, e.multiplicity) for e in self.entries),
            radicand=self.radicand,
        )

    def to_list(self) -> List[Dict[str, Any]]:
        out = []
        for e, v in zip(self.entries, self.values()):
            out.append({
                "value": str(v),
                "square": render_scalar(v.square),
                "sign": v.sign,
                "multiplicity": e.multiplicity,
            })
        return out


@dataclass(frozen=True)
class InvariantSet:
    """nH = trace of the shape operator (a surd), H2, S and scalar curvature R."""
    nH: Surd
    H2: Scalar
    S: Scalar
    R: Scalar

    def to_dict(self) -> Dict[str, str]:
        return {"nH": str(self.nH), "H2": render_scalar(self.H2), "S": render_scalar(self.S), "R": render_scalar(self.R)}


def invariants(sf: SpaceForm, spec: CurvatureSpectrum) -> InvariantSet:
    """
    nH = sum n_a mu_a, S = sum n_a mu_a^2, H2 = (nH)^2/n^2, R = n(n-1)c + n^2 H2 - S.
    BigFloat spectra are evaluated at the caller's mpmath working precision.
    """
    if spec.n != sf.n:
        raise ValueError(f"multiplicities sum to {spec.n}, space form has n={sf.n}")
    inexact = not spec.is_exact
    r = lift(spec.radicand, inexact)
    c = lift(sf.c, inexact)
    n = sf.n

    trace = sum((e.multiplicity * lift(e.coefficient, inexact) for e in spec.entries), lift(0, inexact))
    squares = sum((e.multiplicity * lift(e.coefficient, inexact) ** 2 for e in spec.entries), lift(0, inexact))

    S = r * squares
    H2 = trace * trace * r / (n * n)
    R = n * (n - 1) * c + n * n * H2 - S
    return InvariantSet(nH=Surd(trace, r), H2=H2, S=S, R=R)


def gauss_scalar_check(sf: SpaceForm, spec: CurvatureSpectrum) -> Fraction:
    """
    Scalar curvature from the Gauss equation, summed over ordered pairs i != j of
    c + lambda_i lambda_j, minus R from invariants(). Exactly zero when consistent.
    """
    if not spec.is_exact:
        raise ValueError("the Gauss scalar check is exact-only")
    inv = invariants(sf, spec)
    lam = spec.expanded()
    r = spec.radicand
    total = Fraction(0)
    for i, li in enumerate(lam):
        for j, lj in enumerate(lam):
            if i != j:
                total += sf.c + li * lj * r
    return total - inv.R
