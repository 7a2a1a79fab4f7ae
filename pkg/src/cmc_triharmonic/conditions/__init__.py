from cmc_triharmonic.conditions.triharmonic import (
    TriharmonicReport, Verdict, classify, is_zero, triharmonic_residual,
)
