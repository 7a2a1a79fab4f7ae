from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmc_triharmonic.conditions import Verdict, classify, triharmonic_residual
from cmc_triharmonic.geometry import CurvatureSpectrum, FamilyId, SpaceForm, build, invariants
from tests.strategies import positive_rationals, rationals


def spectra():
    pairs = st.lists(st.tuples(rationals(), st.integers(1, 3)), min_size=1, max_size=4)
    return st.builds(CurvatureSpectrum.of, pairs, positive_rationals()).filter(lambda s: s.n >= 2)


def test_residual_small_sphere_n4():
    sf = SpaceForm(4, 1)
    inv = invariants(sf, build(sf, FamilyId.of("small-sphere", r2=Fraction(1, 3))))
    assert triharmonic_residual(sf, inv) == 0


def test_residual_geodesic_sphere():
    sf = SpaceForm(3, -1)
    inv = invariants(sf, build(sf, FamilyId.of("geodesic-sphere", **{"lambda": 2})))
    assert (inv.S, inv.H2) == (12, 4)
    assert triharmonic_residual(sf, inv) == 216


def test_residual_with_laplacian_term():
    sf = SpaceForm(4, 1)
    inv = invariants(sf, build(sf, FamilyId.of("small-sphere", r2=Fraction(1, 3))))
    assert triharmonic_residual(sf, inv, Fraction(5, 2)) == Fraction(5, 2)


@pytest.mark.parametrize("n", range(2, 11))
def test_small_sphere_radius_one_over_sqrt3_is_proper(n):
    sf = SpaceForm(n, 1)
    report = classify(sf, build(sf, FamilyId.of("small-sphere", r2=Fraction(1, 3))))
    assert report.verdict is Verdict.PROPER
    assert report.T1 == 0
    assert report.invariants.H2 == 2


@pytest.mark.parametrize("r2", [Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), Fraction(1, 10)])
def test_other_small_spheres_are_not_triharmonic(r2):
    sf = SpaceForm(5, 1)
    assert classify(sf, build(sf, FamilyId.of("small-sphere", r2=r2))).verdict is Verdict.NOT_TRIHARMONIC


def test_cylinder_is_not_triharmonic():
    sf = SpaceForm(4, 0)
    report = classify(sf, build(sf, FamilyId.of("cylinder", p=2, r=1)))
    assert report.verdict is Verdict.NOT_TRIHARMONIC
    assert report.T1 == report.invariants.S ** 2 == 4


def test_clifford_torus_half_radius():
    sf = SpaceForm(3, 1)
    report = classify(sf, build(sf, FamilyId.of("clifford", p=2, q=1, a2=Fraction(1, 2))))
    assert report.verdict is Verdict.NOT_TRIHARMONIC
    assert report.T1 == -1


def test_minimal_clifford_torus():
    sf = SpaceForm(2, 1)
    report = classify(sf, build(sf, FamilyId.of("clifford", p=1, q=1, a2=Fraction(1, 2))))
    assert report.verdict is Verdict.MINIMAL
    assert report.invariants.S == 2


def test_horosphere_residual():
    sf = SpaceForm(3, -1)
    report = classify(sf, build(sf, FamilyId.of("horosphere")))
    assert report.T1 == 27
    assert report.verdict is Verdict.NOT_TRIHARMONIC


@given(spectra())
def test_hyperbolic_space_has_no_proper_examples(spec):
    report = classify(SpaceForm(spec.n, -1), spec)
    assert report.verdict is not Verdict.PROPER
    assert report.T1 >= 0


@given(spectra())
def test_euclidean_space_has_no_proper_examples(spec):
    report = classify(SpaceForm(spec.n, 0), spec)
    assert report.verdict is not Verdict.PROPER
    assert report.T1 == report.invariants.S ** 2


@given(st.sampled_from([-1, 0, 1]), spectra())
def test_verdict_ignores_orientation(c, spec):
    sf = SpaceForm(spec.n, c)
    assert classify(sf, spec).verdict is classify(sf, spec.flipped()).verdict


@given(positive_rationals(bound=30, max_den=30).filter(lambda r: r < 1))
def test_small_sphere_proper_only_at_one_third(r2):
    sf = SpaceForm(4, 1)
    verdict = classify(sf, build(sf, FamilyId.of("small-sphere", r2=r2))).verdict
    assert (verdict is Verdict.PROPER) == (r2 == Fraction(1, 3))


def test_report_serializes_exact_values():
    sf = SpaceForm(4, 1)
    report = classify(sf, build(sf, FamilyId.of("small-sphere", r2=Fraction(1, 3))))
    assert report.to_dict() == {"T1": "0", "T2_satisfied": True, "verdict": "ProperTriharmonic"}
    assert report.invariants.to_dict()["S"] == "8"
