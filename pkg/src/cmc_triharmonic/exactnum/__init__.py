from cmc_triharmonic.exactnum.rational import (
    DEFAULT_DIGITS, GUARD_DIGITS, MIN_DIGITS, BigFloat, ExactRational, Scalar,
    double_factorial, parse_decimal, parse_rational, to_mpf,
)
from cmc_triharmonic.exactnum.unipoly import (
    IsolatedRoot, UniPoly, isolate_root, sturm_root_count, sturm_sequence,
)
from cmc_triharmonic.exactnum.matrix import determinant, solve
