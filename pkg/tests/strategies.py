from fractions import Fraction

from hypothesis import strategies as st

from cmc_triharmonic.exactnum.unipoly import UniPoly


def rationals(bound: int = 20, max_den: int = 12):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def positive_rationals(bound: int = 20, max_den: int = 12):
    return st.builds(Fraction, st.integers(1, bound), st.integers(1, max_den))


def unipolys(max_degree: int = 6):
    return st.lists(rationals(), min_size=0, max_size=max_degree + 1).map(lambda cs: UniPoly(tuple(cs)))


def nonzero_unipolys(max_degree: int = 6):
    return unipolys(max_degree).filter(bool)
