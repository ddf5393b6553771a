import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from skeindaha.errors import NonSquareError, ZeroDivisorError
from skeindaha.scalars import Scalar


def test_i_squared():
    assert Scalar.i() * Scalar.i() == Scalar(-1)


def test_conjugate_product():
    # (a+bi)(a-bi) = a^2 + b^2, expanded by hand
    a = Scalar(mpq(1, 2), 1)
    b = Scalar(mpq(1, 2), -1)
    assert a * b == Scalar(mpq(5, 4))


def test_division_by_zero():
    with pytest.raises(ZeroDivisorError):
        Scalar(3, 1) / Scalar(0)


def test_inverse_of_i():
    assert Scalar.i().inverse() == Scalar(0, -1)
    assert (Scalar.i() ** -1) * Scalar.i() == Scalar.one()


def test_powers():
    assert Scalar.i() ** 4 == Scalar.one()
    assert Scalar.i() ** -3 == Scalar.i()
    assert Scalar(2) ** -2 == Scalar(mpq(1, 4))


def test_sqrt_rational():
    assert Scalar(mpq(9, 4)).sqrt() == Scalar(mpq(3, 2))
    assert Scalar(-4).sqrt() == Scalar(0, 2)


def test_sqrt_gaussian():
    v = Scalar(0, 2)  # 2i = (1+i)^2
    r = v.sqrt()
    assert r * r == v
    assert r.re > 0


def test_sqrt_branch_sign():
    r = Scalar(4).sqrt()
    assert r == Scalar(2)
    r = Scalar(-9).sqrt()
    assert r.im > 0


def test_sqrt_non_square():
    with pytest.raises(NonSquareError):
        Scalar(2).sqrt()
    with pytest.raises(NonSquareError):
        Scalar(1, 1).sqrt()


def test_str_forms():
    assert str(Scalar(1, 1)) == "1+i"
    assert str(Scalar(0, -1)) == "-i"
    assert str(Scalar(mpq(-1, 2), mpq(3, 2))) == "-1/2+3/2i"


small = st.integers(-6, 6)


@st.composite
def scalars(draw):
    return Scalar(draw(small), draw(small))


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + Scalar.zero() == a
    assert a * Scalar.one() == a


@given(scalars())
def test_inverse_axiom(a):
    if not a.is_zero():
        assert a * a.inverse() == Scalar.one()
