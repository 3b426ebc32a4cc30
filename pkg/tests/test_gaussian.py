"""Gaussian rational arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from segrekit.gaussian import (GaussianRational as QI, QI_I, QI_ONE, QI_ZERO,
                               format_coeff, frac_sqrt, qi_sqrt)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=20)
qis = st.builds(QI, fracs, fracs)


def test_basic_identities():
    assert QI_I * QI_I == -QI_ONE
    assert QI(Fraction(3), Fraction(4)).norm() == Fraction(25)
    assert QI(Fraction(1), Fraction(1)).conjugate() == QI(Fraction(1), Fraction(-1))


@given(qis, qis, qis)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(qis)
def test_conjugation_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0


@given(qis)
def test_division_inverse(a):
    if not a.is_zero():
        assert a / a == QI_ONE
        assert a * (QI_ONE / a) == QI_ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QI_ONE / QI_ZERO


@given(qis, st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_product(a, k):
    acc = QI_ONE
    for _ in range(k):
        acc = acc * a
    assert a ** k == acc


def test_frac_sqrt():
    assert frac_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert frac_sqrt(Fraction(2)) is None
    assert frac_sqrt(Fraction(0)) == 0


def test_qi_sqrt_exact_cases():
    # sqrt(-1) = i, sqrt(2i) = 1 + i, sqrt(-4) = 2i
    assert qi_sqrt(QI(Fraction(-1))) in (QI_I, -QI_I)
    r = qi_sqrt(QI(Fraction(0), Fraction(2)))
    assert r is not None and r * r == QI(Fraction(0), Fraction(2))
    r = qi_sqrt(QI(Fraction(-4)))
    assert r is not None and r * r == QI(Fraction(-4))
    assert qi_sqrt(QI(Fraction(2))) is None


@given(qis)
def test_qi_sqrt_roundtrip(a):
    sq = a * a
    r = qi_sqrt(sq)
    assert r is not None
    assert r * r == sq


def test_format_coeff():
    assert format_coeff(QI(Fraction(3, 2))) == "3/2"
    assert format_coeff(QI_I) == "i"
    assert "i" in format_coeff(QI(Fraction(1), Fraction(2)))
