from cmc_triharmonic.corollary.torus import (
    CorollaryResult, CorollaryRoot, ResultantVerdict, clifford_a2,
    corollary_crosscheck, f_n_poly, sylvester_matrix, t0, torus_equations,
    torus_residual_resultant,
)
