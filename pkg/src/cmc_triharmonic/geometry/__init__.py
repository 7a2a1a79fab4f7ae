from cmc_triharmonic.geometry.spaceform import (
    CurvatureEntry, CurvatureSpectrum, InvariantSet, SpaceForm, Surd,
    gauss_scalar_check, invariants, render_scalar,
)
from cmc_triharmonic.geometry.catalog import (
    FAMILIES, Family, FamilyId, build, clifford_torus_spectrum, family_help,
)
