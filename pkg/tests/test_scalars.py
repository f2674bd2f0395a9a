"""Field arithmetic in Q(delta), delta**2 = n."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfplanar.scalars import Scalar, ScalarField, make_delta


def test_delta_squares_to_n():
    for n in (2, 3, 5, 6, 7):
        d = make_delta(n)
        assert d * d == n
        assert (d * d).is_rational


def test_perfect_square_collapse():
    assert make_delta(1) == 1
    assert make_delta(4) == 2
    assert make_delta(4, -1) == -2
    assert make_delta(9) == 3
    assert make_delta(4).coef == 0


def test_sign_choice():
    assert make_delta(2, -1) == -make_delta(2, 1)
    with pytest.raises(ValueError):
        make_delta(2, 0)


def test_frozen_products_n2():
    f = ScalarField(2)
    d = f.delta
    assert (1 + d) * (1 - d) == -1
    assert (1 + d) * (1 + d) == f.scalar(3, 2)
    assert d ** 3 == 2 * d
    assert d ** -2 == Fraction(1, 2)


def test_division_by_conjugation():
    f = ScalarField(2)
    d = f.delta
    assert d.inverse() == f.scalar(0, Fraction(1, 2))
    assert (1 + d) / (1 - d) == f.scalar(-3, -2)
    assert (f.scalar(3, 2) / f.scalar(3, 2)) == 1
    with pytest.raises(ZeroDivisionError):
        f.zero.inverse()


def test_rational_scalars_interoperate_across_fields():
    a = ScalarField(2).scalar(3)
    b = ScalarField(4).scalar(3)
    assert a == b == 3
    assert (a + ScalarField(6).scalar(1)) == 4
    with pytest.raises(ValueError):
        ScalarField(2).delta + ScalarField(3).delta


def test_mixing_with_int_and_fraction():
    d = make_delta(2)
    assert 2 * d == d + d
    assert Fraction(1, 2) * (d + d) == d
    assert 1 - d == -(d - 1)
    assert 6 / (d * d) == 3


def test_truthiness_and_rationality():
    f = ScalarField(2)
    assert not f.zero
    assert f.one
    assert f.delta
    assert f.scalar(Fraction(1, 3)).as_fraction() == Fraction(1, 3)
    with pytest.raises(ValueError):
        f.delta.as_fraction()


def test_str_forms():
    f = ScalarField(2)
    assert str(f.scalar(Fraction(3, 2))) == "3/2"
    assert str(f.delta) == "δ"
    assert str(-f.delta) == "-δ"
    assert str(f.scalar(1, 1)) == "1 + δ"
    assert str(f.scalar(1, -2)) == "1 - 2·δ"
    assert str(f.scalar(0, Fraction(5, 3))) == "5/3·δ"


def test_canonical_text_is_fixed_shape():
    field = ScalarField(2)
    assert field.delta.canonical_text() == "0 + 1·δ"
    assert field.scalar(3).canonical_text() == "3 + 0·δ"
    assert field.scalar(Fraction(-3, 2), Fraction(1, 3)).canonical_text() == \
        "-3/2 + 1/3·δ"
    assert ScalarField(4).delta.canonical_text() == "2 + 0·δ"


def test_json_round_trip():
    f = ScalarField(6)
    x = f.scalar(Fraction(-7, 3), Fraction(5, 2))
    data = x.to_json()
    assert data == {"rat": [-7, 3], "delta": [5, 2]}
    assert Scalar.from_json(f, data) == x
    g = ScalarField(4)
    y = Scalar.from_json(g, {"rat": [1, 1], "delta": [1, 1]})
    assert y == 3  # delta collapses to 2


fractions_st = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def scalars_st(draw, n):
    f = ScalarField(n)
    return f.scalar(draw(fractions_st), draw(fractions_st))


@given(a=scalars_st(2), b=scalars_st(2), c=scalars_st(2))
def test_field_axioms_n2(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + (b + c) == (a + b) + c
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(a=scalars_st(4), b=scalars_st(4))
def test_field_axioms_collapse_n4(a, b):
    assert a.coef == 0 and b.coef == 0
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a


@given(a=scalars_st(6))
def test_json_round_trip_property(a):
    assert Scalar.from_json(a.field, a.to_json()) == a
