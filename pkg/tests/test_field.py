from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilfactor.errors import DivisionByZero, FieldMismatch, ParseError
from nilfactor.field import GF, QQ, FieldScalar, is_prime, parse_field

from conftest import elements, fields


def test_small_values():
    assert QQ.scalar(Fraction(1, 2)) + QQ.scalar(Fraction(1, 3)) == QQ.scalar(Fraction(5, 6))
    assert GF(7).scalar(5) * GF(7).scalar(3) == GF(7).scalar(1)
    assert -GF(2).scalar(1) == GF(2).scalar(1)
    assert QQ.scalar(Fraction(2, 3)).inv() == QQ.scalar(Fraction(3, 2))
    assert GF(5).scalar(2).inv() == GF(5).scalar(3)
    assert GF(11).scalar(1).inv() == GF(11).scalar(1)


def test_integral_rationals_are_ints():
    x = QQ(Fraction(4, 2))
    assert x == 2 and type(x) is int


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        QQ.scalar(0).inv()
    with pytest.raises(ZeroDivisionError):
        GF(3).scalar(3).inv()


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        GF(5).scalar(1) + GF(7).scalar(1)
    with pytest.raises(FieldMismatch):
        QQ.scalar(1) * GF(2).scalar(1)


def test_parse_field_forms():
    assert parse_field("QQ") == QQ
    assert parse_field("GF(7)") == GF(7)
    assert str(parse_field(" gf( 13 ) ")) == "GF(13)"
    for bad in ("GF(8)", "GF(1)", "RR", "GF7"):
        with pytest.raises(ParseError):
            parse_field(bad)


def test_prime_check_against_sieve():
    limit = 500
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [p for p in range(limit) if is_prime(p)] == [p for p in range(limit) if sieve[p]]


def test_entry_parsing():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert GF(5).parse("1/3") == 2
    assert GF(5).parse("-1") == 4
    for bad in ("1.5", "1e3", "a", "1/0", ""):
        with pytest.raises(ParseError):
            QQ.parse(bad)
    with pytest.raises(ParseError):
        GF(5).parse("2/5")


@st.composite
def triples(draw):
    f = draw(fields)
    e = elements(f)
    return f, draw(e), draw(e), draw(e)


@given(triples())
def test_field_axioms(t):
    f, a, b, c = t
    a, b, c = (FieldScalar(f, x) for x in (a, b, c))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == f.scalar(0)
    if not a.is_zero():
        assert a * a.inv() == f.scalar(1)
        assert (b / a) * a == b


@given(fields.flatmap(lambda f: st.tuples(st.just(f), elements(f))))
def test_format_parse_round_trip(pair):
    f, x = pair
    assert f.parse(f.format(x)) == x
