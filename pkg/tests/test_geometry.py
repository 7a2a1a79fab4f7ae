from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cmc_triharmonic.errors import UsageError
from cmc_triharmonic.geometry import (
    CurvatureSpectrum, Family, FamilyId, SpaceForm, Surd, build,
    clifford_torus_spectrum, family_help, gauss_scalar_check, invariants,
)
from tests.strategies import positive_rationals, rationals


def spectra(max_d: int = 4):
    pairs = st.lists(st.tuples(rationals(), st.integers(1, 4)), min_size=1, max_size=max_d)
    return st.builds(CurvatureSpectrum.of, pairs, positive_rationals()).filter(lambda s: s.n >= 2)


# -------------------------
# Space forms and spectra
# -------------------------

def test_spaceform_ambient():
    assert SpaceForm(4, 1).ambient == "S^5"
    assert SpaceForm(3, 0).ambient == "R^4"
    assert SpaceForm(3, -1).ambient == "H^4"
    assert SpaceForm(3, Fraction(1, 2)).ambient == "N^4(1/2)"
    with pytest.raises(ValueError):
        SpaceForm(1, 1)


def test_spectrum_merges_equal_values():
    spec = CurvatureSpectrum.of([(1, 2), (Fraction(2, 2), 1), (3, 1)])
    assert spec.d == 2
    assert spec.n == 4


def test_spectrum_validation():
    with pytest.raises(ValueError):
        CurvatureSpectrum.of([])
    with pytest.raises(ValueError):
        CurvatureSpectrum.of([(1, 0)])
    with pytest.raises(ValueError):
        CurvatureSpectrum.of([(1, 1)], radicand=0)


def test_surd_rendering():
    assert str(Surd(Fraction(3), Fraction(4))) == "6"
    assert str(Surd(Fraction(-1, 2), Fraction(2))) == "-1/2*sqrt(2)"
    assert Surd(Fraction(-1), Fraction(3)).square == 3


def test_invariants_small_sphere_n4():
    sf = SpaceForm(4, 1)
    inv = invariants(sf, build(sf, FamilyId.of("small-sphere", r2=Fraction(1, 3))))
    assert inv.S == 8
    assert inv.H2 == 2
    assert inv.R == 4 * 3 + 16 * 2 - 8
    assert str(inv.nH) == "4*sqrt(2)"


def test_invariants_reject_dimension_mismatch():
    with pytest.raises(ValueError):
        invariants(SpaceForm(3, 1), CurvatureSpectrum.of([(1, 4)]))


@settings(max_examples=1000)
@given(st.sampled_from([-1, 0, 1]), spectra())
def test_gauss_equation_consistency(c, spec):
    assert gauss_scalar_check(SpaceForm(spec.n, c), spec) == 0


@given(spectra())
def test_invariants_under_orientation_flip(spec):
    sf = SpaceForm(spec.n, 1)
    a, b = invariants(sf, spec), invariants(sf, spec.flipped())
    assert (a.S, a.H2, a.R) == (b.S, b.H2, b.R)
    assert b.nH.coefficient == -a.nH.coefficient


@given(spectra(), st.data())
def test_splitting_an_entry_changes_nothing(spec, data):
    splittable = [e for e in spec.entries if e.multiplicity > 1]
    assume(splittable)
    entry = data.draw(st.sampled_from(splittable))
    k = data.draw(st.integers(1, entry.multiplicity - 1))
    pairs = [(e.coefficient, e.multiplicity) for e in spec.entries if e is not entry]
    pairs += [(entry.coefficient, k), (entry.coefficient, entry.multiplicity - k)]
    assert CurvatureSpectrum.of(pairs, spec.radicand).n == spec.n
    sf = SpaceForm(spec.n, 1)
    assert invariants(sf, CurvatureSpectrum.of(pairs, spec.radicand)) == invariants(sf, spec)


def test_inexact_spectrum_uses_working_precision():
    with mpmath.workdps(40):
        spec = clifford_torus_spectrum(2, 1, mpmath.mpf(1) / 2)
        inv = invariants(SpaceForm(3, 1), spec)
        assert abs(inv.S - 3) < mpmath.mpf(10) ** -35
        assert abs(inv.H2 - mpmath.mpf(1) / 9) < mpmath.mpf(10) ** -35


# -------------------------
# Catalog
# -------------------------

def test_clifford_torus_spectrum_exact():
    sf = SpaceForm(3, 1)
    spec = build(sf, FamilyId.of(Family.CLIFFORD_TORUS, p=2, q=1, a2=Fraction(1, 2)))
    assert spec.radicand == 1
    assert [(e.coefficient, e.multiplicity) for e in spec.entries] == [(1, 2), (-1, 1)]
    inv = invariants(sf, spec)
    assert (inv.nH.coefficient, inv.S, inv.H2) == (1, 3, Fraction(1, 9))


def test_cylinder_and_hyperbolic_families():
    sf = SpaceForm(4, 0)
    inv = invariants(sf, build(sf, FamilyId.of("cylinder", p=2, r=1)))
    assert (inv.S, inv.nH.coefficient, inv.H2) == (2, 2, Fraction(1, 4))

    sh = SpaceForm(4, -1)
    spec = build(sh, FamilyId.of("hcylinder", p=1, **{"lambda": 2}))
    assert [(e.coefficient, e.multiplicity) for e in spec.entries] == [(2, 1), (Fraction(1, 2), 3)]
    assert build(sh, FamilyId.of("horosphere")).expanded() == [1, 1, 1, 1]


@pytest.mark.parametrize("c, tag, params", [
    (1, "small-sphere", {"r2": 2}),
    (1, "small-sphere", {"r2": 0}),
    (1, "clifford", {"p": 1, "q": 1, "a2": Fraction(1, 2)}),
    (0, "sphere", {"r": -1}),
    (-1, "geodesic-sphere", {"lambda": 1}),
    (-1, "equidistant", {"lambda": 1}),
    (0, "small-sphere", {"r2": Fraction(1, 3)}),
    (-1, "sphere", {"r": 1}),
])
def test_build_rejects(c, tag, params):
    with pytest.raises(UsageError):
        build(SpaceForm(3, c), FamilyId.of(tag, **params))


def test_family_id_validation():
    with pytest.raises(UsageError):
        FamilyId.of("torus", a2=Fraction(1, 2))
    with pytest.raises(UsageError):
        FamilyId.of("small-sphere")
    with pytest.raises(UsageError):
        FamilyId.of("small-sphere", r2=Fraction(1, 3), r=1)
    with pytest.raises(UsageError):
        FamilyId.of("cylinder", p=Fraction(3, 2), r=1)
    fam = FamilyId.of("small-sphere", r2=Fraction(1, 3))
    assert fam.to_dict() == {"r2": "1/3"}
    assert fam.with_param("r2", Fraction(1, 2))["r2"] == Fraction(1, 2)


def test_invariants_trivial_examples():
    flat = invariants(SpaceForm(3, 0), CurvatureSpectrum.of([(0, 3)]))
    assert (flat.nH.coefficient, flat.S, flat.R) == (0, 0, 0)
    torus = invariants(SpaceForm(2, 1), CurvatureSpectrum.of([(1, 1), (-1, 1)]))
    assert (torus.nH.coefficient, torus.S, torus.R) == (0, 2, 0)


@given(rationals(), rationals())
def test_gauss_five_dimensional_configuration(mu, H):
    spec = CurvatureSpectrum.of([(0, 2), (mu, 1), (-mu, 1), (5 * H, 1)])
    assert gauss_scalar_check(SpaceForm(5, 0), spec) == 0


@given(positive_rationals().filter(lambda r: r < 1), st.integers(2, 8))
def test_small_sphere_invariants(r2, n):
    inv = invariants(SpaceForm(n, 1), build(SpaceForm(n, 1), FamilyId.of("small-sphere", r2=r2)))
    assert inv.H2 == (1 - r2) / r2
    assert inv.S == n * (1 - r2) / r2


@given(st.integers(1, 4), st.integers(1, 4), positive_rationals().filter(lambda a: a < 1))
def test_clifford_torus_norm_identity(p, q, a2):
    sf = SpaceForm(p + q, 1)
    inv = invariants(sf, build(sf, FamilyId.of("clifford", p=p, q=q, a2=a2)))
    assert inv.S * a2 * (1 - a2) == p * (1 - a2) ** 2 + q * a2 ** 2


def test_family_help_lists_every_family():
    lines = family_help().splitlines()
    assert lines[0] == "families:"
    assert len(lines) == 1 + len(Family)
    for family, line in zip(Family, lines[1:]):
        assert line.split()[0] == family.value
    assert "r2" in lines[1] and "0 < r^2 < 1" in lines[1]
