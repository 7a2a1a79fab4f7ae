'''
Created on 13 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Mapping, Tuple

from cmc_triharmonic.errors import UsageError
from cmc_triharmonic.exactnum.rational import Scalar, is_exact, lift
from cmc_triharmonic.geometry.spaceform import CurvatureSpectrum, SpaceForm

log = logging.getLogger(__name__)


class Family(Enum):
    SMALL_SPHERE       = "small-sphere"
    CLIFFORD_TORUS     = "clifford"
    EUCLIDEAN_SPHERE   = "sphere"
    SPHERICAL_CYLINDER = "cylinder"
    GEODESIC_SPHERE_H  = "geodesic-sphere"
    HOROSPHERE_H       = "horosphere"
    EQUIDISTANT_H      = "equidistant"
    HYPERBOLIC_CYLINDER = "hcylinder"


@dataclass(frozen=True)
class FamilyInfo:
    curvature: Fraction
    keys: Tuple[str, ...]
    integer_keys: Tuple[str, ...]
    description: str


FAMILIES: Dict[Family, FamilyInfo] = {
    Family.SMALL_SPHERE:        FamilyInfo(Fraction(1),  ("r2",),          (),         "S^n(r) in S^{n+1}, 0 < r^2 < 1"),
    Family.CLIFFORD_TORUS:      FamilyInfo(Fraction(1),  ("p", "q", "a2"), ("p", "q"), "S^p(a) x S^q(sqrt(1-a^2)) in S^{n+1}, 0 < a^2 < 1"),
    Family.EUCLIDEAN_SPHERE:    FamilyInfo(Fraction(0),  ("r",),           (),         "round sphere S^n(r) in R^{n+1}"),
    Family.SPHERICAL_CYLINDER:  FamilyInfo(Fraction(0),  ("p", "r"),       ("p",),     "S^p(r) x R^{n-p} in R^{n+1}"),
    Family.GEODESIC_SPHERE_H:   FamilyInfo(Fraction(-1), ("lambda",),      (),         "geodesic sphere in H^{n+1}, lambda > 1"),
    Family.HOROSPHERE_H:        FamilyInfo(Fraction(-1), (),               (),         "horosphere in H^{n+1}"),
    Family.EQUIDISTANT_H:       FamilyInfo(Fraction(-1), ("lambda",),      (),         "equidistant hypersurface in H^{n+1}, 0 < lambda < 1"),
    Family.HYPERBOLIC_CYLINDER: FamilyInfo(Fraction(-1), ("p", "lambda"),  ("p",),     "S^p x H^{n-p} in H^{n+1}, lambda > 1"),
}


def family_help() -> str:
    """One line per family: name, parameters and what it is."""
    lines = ["families:"]
    for family, info in FAMILIES.items():
        keys = ",".join(info.keys) or "-"
        lines.append(f"  {family.value:<16} {keys:<9} {info.description}")
    return "\n".join(lines)


@dataclass(frozen=True)
class FamilyId:
    tag: Family
    params: Tuple[Tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, tag, **params) -> "FamilyId":
        return cls.from_mapping(tag, params)

    @classmethod
    def from_mapping(cls, tag, params: Mapping[str, Any]) -> "FamilyId":
        try:
            family = tag if isinstance(tag, Family) else Family(tag)
        except ValueError:
            names = ", ".join(f.value for f in Family)
            raise UsageError(f"unknown family {tag!r} (known: {names})") from None
        info = FAMILIES[family]
        unknown = sorted(set(params) - set(info.keys))
        missing = [k for k in info.keys if k not in params]
        if unknown:
            raise UsageError(f"{family.value}: unknown parameter(s) {', '.join(unknown)}")
        if missing:
            raise UsageError(f"{family.value}: missing parameter(s) {', '.join(missing)}")
        values = []
        for k in info.keys:
            v = Fraction(params[k])
            if k in info.integer_keys and v.denominator != 1:
                raise UsageError(f"{family.value}: parameter {k} must be an integer, got {v}")
            values.append((k, v))
        return cls(tag=family, params=tuple(values))

    def __getitem__(self, key: str) -> Fraction:
        return dict(self.params)[key]

    def with_param(self, key: str, value) -> "FamilyId":
        params = dict(self.params)
        params[key] = value
        return FamilyId.from_mapping(self.tag, params)

    def to_dict(self) -> Dict[str, str]:
        return {k: str(v) for k, v in self.params}


def clifford_torus_spectrum(p: int, q: int, a2: Scalar) -> CurvatureSpectrum:
    """
    S^p(a) x S^q(sqrt(1-a^2)): sqrt(u) with multiplicity p and -1/sqrt(u) with
    multiplicity q, u = (1-a^2)/a^2, normal pointing along the first factor.
    Works for exact a2 and for mpf a2 at the caller's working precision.
    """
    inexact = not is_exact(a2)
    a2 = lift(a2, inexact)
    u = (1 - a2) / a2
    return CurvatureSpectrum.of([(lift(1, inexact), p), (-1 / u, q)], radicand=u)


def _require(cond: bool, family: Family, msg: str) -> None:
    if not cond:
        raise UsageError(f"{family.value}: {msg}")


def build(sf: SpaceForm, fam: FamilyId) -> CurvatureSpectrum:
    """Principal-curvature spectrum of a catalog family in the given space form."""
    info = FAMILIES[fam.tag]
    if sf.c != info.curvature:
        raise UsageError(f"{fam.tag.value} lives in curvature {info.curvature}, space form has c={sf.c}")
    n = sf.n
    tag = fam.tag
    log.debug("build %s in %s with %s", tag.value, sf.ambient, fam.to_dict())

    match tag:
        case Family.SMALL_SPHERE:
            r2 = fam["r2"]
            _require(0 < r2 < 1, tag, f"r2 must lie in (0, 1), got {r2}")
            return CurvatureSpectrum.of([(1, n)], radicand=(1 - r2) / r2)

        case Family.CLIFFORD_TORUS:
            p, q, a2 = int(fam["p"]), int(fam["q"]), fam["a2"]
            _require(p >= 1 and q >= 1, tag, "p and q must be positive")
            _require(p + q == n, tag, f"p + q must equal n={n}")
            _require(0 < a2 < 1, tag, f"a2 must lie in (0, 1), got {a2}")
            return clifford_torus_spectrum(p, q, a2)

        case Family.EUCLIDEAN_SPHERE:
            r = fam["r"]
            _require(r > 0, tag, f"r must be positive, got {r}")
            return CurvatureSpectrum.of([(1 / r, n)])

        case Family.SPHERICAL_CYLINDER:
            p, r = int(fam["p"]), fam["r"]
            _require(1 <= p <= n - 1, tag, f"p must lie in 1..{n - 1}")
            _require(r > 0, tag, f"r must be positive, got {r}")
            return CurvatureSpectrum.of([(1 / r, p), (0, n - p)])

        case Family.GEODESIC_SPHERE_H:
            lam = fam["lambda"]
            _require(lam > 1, tag, f"lambda must exceed 1, got {lam}")
            return CurvatureSpectrum.of([(lam, n)])

        case Family.HOROSPHERE_H:
            return CurvatureSpectrum.of([(1, n)])

        case Family.EQUIDISTANT_H:
            lam = fam["lambda"]
            _require(0 < lam < 1, tag, f"lambda must lie in (0, 1), got {lam}")
            return CurvatureSpectrum.of([(lam, n)])

        case Family.HYPERBOLIC_CYLINDER:
            p, lam = int(fam["p"]), fam["lambda"]
            _require(1 <= p <= n - 1, tag, f"p must lie in 1..{n - 1}")
            _require(lam > 1, tag, f"lambda must exceed 1, got {lam}")
            return CurvatureSpectrum.of([(lam, p), (1 / lam, n - p)])

    raise UsageError(f"no constructor for {tag}")
