import random

import pytest

from cyclograd import I, Polynomial, gauss, gens
from cyclograd.text import (
    ParseError, parse_polynomial, parse_tensor, parse_vector_field, print_polynomial, print_tensor,
)
from cyclograd.randomgen import random_polynomial
from gmpy2 import mpq

X1, X2 = gens(2)


def test_grammar_examples():
    assert parse_polynomial("x1.x2 - x2.x1") == X1 * X2 - X2 * X1
    assert parse_polynomial("(1/2)*x1.x1 + 1") == Polynomial(1, {(1, 1): mpq(1, 2), (): 1})
    assert parse_polynomial("(1/2)*x1.x2.x1 - 3*x2 + 1") == Polynomial(
        2, {(1, 2, 1): mpq(1, 2), (2,): -3, (): 1})


def test_whitespace_and_complex():
    assert parse_polynomial(" ( 1 + 2 i ) * x1 . x2 ") == Polynomial(2, {(1, 2): gauss(1, 2)})
    assert parse_polynomial("1i*x2.x1") == Polynomial(2, {(2, 1): I})
    assert parse_polynomial("-x1") == -Polynomial.gen(1, 1)


@pytest.mark.parametrize("bad", ["x0", "x1..x2", "x1 +", "(1/0)*x1", "y1", "x1 x2"])
def test_syntax_errors(bad):
    with pytest.raises((ParseError, ZeroDivisionError, ValueError)):
        parse_polynomial(bad)


def test_index_beyond_n():
    with pytest.raises(ValueError):
        parse_polynomial("x3", 2)


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x1 + x0")
    assert exc.value.pos == 6


def test_round_trip_1000():
    rng = random.Random("roundtrip")
    for i in range(1000):
        n = rng.randint(1, 3)
        p = random_polynomial(rng, n, rng.randint(0, 5), complex_=bool(i % 3 == 0))
        text = print_polynomial(p)
        assert parse_polynomial(text, n) == p, text
        assert print_polynomial(parse_polynomial(text, n)) == text


def test_print_canonicalizes():
    assert print_polynomial(parse_polynomial("x2 + x1 + x1 - 1")) == "-1 + 2*x1 + x2"


def test_tensor_and_field_round_trip():
    t = parse_tensor("x1 (x) x2 - [2*x1 + 2] (x) 1", 2)
    assert parse_tensor(print_tensor(t), 2) == t
    v = parse_vector_field("x2; -x1")
    assert v.n == 2 and v[1] == -X1
