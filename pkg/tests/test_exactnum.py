from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cmc_triharmonic.errors import UsageError
from cmc_triharmonic.exactnum import (
    BigFloat, UniPoly, determinant, double_factorial, isolate_root, parse_decimal,
    parse_rational, solve, sturm_root_count,
)
from cmc_triharmonic.exactnum.rational import rational_sqrt, to_mpf
from tests.strategies import nonzero_unipolys, rationals, unipolys

t = sympy.Symbol("t")


def to_sympy(p: UniPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])) or [0], t, domain=sympy.QQ)


# -------------------------
# Rationals
# -------------------------

@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)),
    ("-7", Fraction(-7)),
    ("1/3", Fraction(1, 3)),
    (" 4/6 ", Fraction(2, 3)),
    ("-5/10", Fraction(-1, 2)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a/b", "1/-2", "1//2", "0.25"])
def test_parse_rational_rejects(text):
    with pytest.raises(UsageError):
        parse_rational(text)


def test_parse_decimal_is_exact():
    assert parse_decimal("1.01") == Fraction(101, 100)
    assert parse_decimal("0.05") == Fraction(1, 20)
    assert parse_decimal(".5") == Fraction(1, 2)
    assert parse_decimal("7/3") == Fraction(7, 3)


@pytest.mark.parametrize("k, expected", [(-1, 1), (0, 1), (1, 1), (2, 2), (5, 15), (6, 48), (7, 105)])
def test_double_factorial(k, expected):
    assert double_factorial(k) == expected


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_to_mpf_does_not_go_through_float():
    with mpmath.workdps(50):
        x = to_mpf(Fraction(1, 3))
        assert abs(x * 3 - 1) < mpmath.mpf(10) ** -45


def test_bigfloat_minimum_precision():
    with pytest.raises(ValueError):
        BigFloat(mpmath.mpf(1), digits=10)
    b = BigFloat.of(Fraction(1, 7), digits=30, error=Fraction(1, 10 ** 31))
    assert str(b).startswith("0.142857142857142857142857142857")
    assert b.to_dict()["digits"] == 30


@settings(max_examples=10_000)
@given(rationals(), rationals(), rationals())
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1


@settings(max_examples=1000)
@given(rationals(), rationals(), rationals().filter(bool))
def test_bigfloat_arithmetic_tracks_exact_arithmetic(a, b, c):
    exact = (a * b + c) / c
    digits = 30
    with mpmath.workdps(digits + 10):
        x, y, z = to_mpf(a), to_mpf(b), to_mpf(c)
        value = BigFloat.of((x * y + z) / z, digits=digits)
        scale = max(1, abs(to_mpf(exact)))
        assert abs(value.value - to_mpf(exact)) < scale * mpmath.mpf(10) ** -digits


# -------------------------
# UniPoly
# -------------------------

def test_unipoly_trims_and_evaluates():
    p = UniPoly.of(1, 0, 2, 0, 0)
    assert p.degree == 2
    assert p(3) == 19
    assert UniPoly().degree == -1
    assert not UniPoly.of(0, 0)


def test_unipoly_to_str():
    assert UniPoly.of(-2, -8, 18, 81).to_str() == "81*t^3 + 18*t^2 - 8*t - 2"
    assert UniPoly.of(0, -1).to_str("h") == "-h"


@given(unipolys(), unipolys())
def test_unipoly_product_matches_sympy(p, q):
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)


@given(unipolys(), nonzero_unipolys())
def test_divmod_reconstructs(p, q):
    quot, rem = p.divmod(q)
    assert quot * q + rem == p
    assert rem.degree < q.degree


@given(nonzero_unipolys(), nonzero_unipolys())
def test_exact_division(p, q):
    assert (p * q) / q == p


def test_exact_division_raises_on_remainder():
    with pytest.raises(ValueError):
        UniPoly.of(1, 0, 1) / UniPoly.of(-1, 1)


def test_primitive_and_zero_multiplicity():
    p = UniPoly.of(0, 0, Fraction(3, 2), Fraction(-9, 4))
    content, prim = p.primitive()
    assert content * prim == p
    assert prim.leading > 0
    assert all(c.denominator == 1 for c in prim.coeffs)
    assert p.multiplicity_of_zero() == 2


def test_squarefree_part():
    p = UniPoly.of(-1, 1) ** 3 * UniPoly.of(2, 1)
    assert p.squarefree_part() == (UniPoly.of(-1, 1) * UniPoly.of(2, 1)).monic()


# -------------------------
# Sturm counts and bisection
# -------------------------

@settings(max_examples=200)
@given(nonzero_unipolys(), rationals(), rationals())
def test_sturm_count_matches_sympy(p, a, b):
    assume(a < b)
    sqf = to_sympy(p.squarefree_part())
    expected = sqf.count_roots(sympy.Rational(a.numerator, a.denominator), sympy.Rational(b.numerator, b.denominator))
    # sympy counts the closed interval
    expected -= sum(1 for x in (a, b) if p(x) == 0)
    assert sturm_root_count(p, a, b) == expected


def test_sturm_count_with_root_at_endpoint():
    p = UniPoly.of(0, -1, 0, 1)  # t^3 - t
    assert sturm_root_count(p, Fraction(0), Fraction(2)) == 1
    assert sturm_root_count(p, Fraction(-1), Fraction(1)) == 1
    assert sturm_root_count(p, Fraction(-2), Fraction(2)) == 3


def test_sturm_count_rejects_degenerate_input():
    with pytest.raises(ValueError):
        sturm_root_count(UniPoly(), Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        sturm_root_count(UniPoly.of(1, 1), Fraction(1), Fraction(1))


def test_isolate_sqrt2():
    root = isolate_root(UniPoly.of(-2, 0, 1), Fraction(1), Fraction(2), digits=30)
    assert root.lo < root.hi
    assert root.width < Fraction(1, 10 ** 30)
    assert root.lo ** 2 < 2 < root.hi ** 2
    with mpmath.workdps(40):
        assert abs(root.value.value - mpmath.sqrt(2)) < mpmath.mpf(10) ** -30


def test_isolate_hits_exact_midpoint():
    root = isolate_root(UniPoly.of(-1, 1), Fraction(0), Fraction(2))
    assert root.exact
    assert root.lo == root.hi == 1


def test_isolate_requires_single_root():
    with pytest.raises(ValueError):
        isolate_root(UniPoly.of(-1, 0, 1), Fraction(-2), Fraction(2))


@settings(max_examples=300)
@given(st.lists(rationals(bound=10, max_den=4), min_size=1, max_size=5, unique=True), st.data())
def test_isolated_bracket_straddles_a_sign_change(roots, data):
    roots = sorted(roots)
    p = UniPoly.constant(data.draw(rationals().filter(bool)))
    for r in roots:
        p = p * UniPoly.of(-r, 1)
    if data.draw(st.booleans()):
        p = p * UniPoly.of(1, 0, 1)
    i = data.draw(st.integers(0, len(roots) - 1))
    lo = (roots[i - 1] + roots[i]) / 2 if i > 0 else roots[i] - 1
    hi = (roots[i] + roots[i + 1]) / 2 if i + 1 < len(roots) else roots[i] + 1
    root = isolate_root(p, lo, hi, digits=16)
    assert lo <= root.lo <= roots[i] <= root.hi <= hi
    if root.exact:
        assert p(root.lo) == 0
    else:
        assert p(root.lo) * p(root.hi) < 0
        assert root.width < Fraction(1, 10 ** 16)


# -------------------------
# Matrices
# -------------------------

@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(rationals(), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_determinant_matches_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()
    assert determinant(rows) == Fraction(int(expected.p), int(expected.q))


def test_determinant_with_polynomial_entries():
    x = UniPoly.t()
    m = [[x, UniPoly.constant(1)], [UniPoly.constant(1), x]]
    assert determinant(m) == x * x - 1


def test_determinant_singular_and_swap():
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([[0, 1], [1, 0]]) == -1


def test_solve():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(ValueError):
        solve([[1, 2], [2, 4]], [1, 1])


@pytest.mark.parametrize("p, lo, hi, expected", [
    (UniPoly.of(1, 0, 1), -10, 10, 0),
    (UniPoly.of(1, -2, 1), 0, 2, 1),
    (UniPoly.of(-2, -8, 18, 81), 0, 2, 1),
])
def test_sturm_examples(p, lo, hi, expected):
    assert sturm_root_count(p, Fraction(lo), Fraction(hi)) == expected


@given(st.integers(1, 30))
def test_double_factorial_step(k):
    assert double_factorial(k) == k * double_factorial(k - 2)
