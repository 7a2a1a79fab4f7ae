from cmc_triharmonic.moments.multipoly import Derivation, MultiPoly, PolyRing, formal_derive
from cmc_triharmonic.moments.lemmas import (
    closed_form_f, frame_derivation, frame_ring, lemma3_formal_check,
    lemma4_formal_check, power_sum, recurrence_check,
)
from cmc_triharmonic.moments.vandermonde import (
    Certificate, Constraint, MomentSystem, Status, UniformCase, VandermondeMode,
    flat_uniform_rate_certificate, solve_masses, uniform_rate_certificate,
    vandermonde_det, vandermonde_identity_check,
)
from cmc_triharmonic.moments.chains import (
    R6Equations, r6_elimination_check, r6_equations, theorem3_chain_check,
    theorem3_derivation,
)
