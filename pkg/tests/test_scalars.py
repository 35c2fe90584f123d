import math
from fractions import Fraction

import pytest

from gradedhecke import linalg
from gradedhecke.scalars import (Laurent, PrimeField, RatFun, RationalField, make_field,
                                 quantum_characteristic, specialize_at_zero, valuation_at_zero)

F5 = PrimeField(5)


def test_prime_field_arithmetic():
    assert F5.add(3, 4) == 2
    assert F5.mul(3, 4) == 2
    assert F5.inv(2) == 3
    assert F5.pow(4, 2) == 1
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_make_field():
    assert isinstance(make_field("rational"), RationalField)
    assert make_field(7).characteristic == 7
    with pytest.raises(ValueError):
        make_field(6)


@pytest.mark.parametrize("field,q,e", [(F5, 4, 2), (PrimeField(7), 2, 3), (F5, 2, 4),
                                       (F5, 1, 5), (RationalField(), 2, 0), (RationalField(), -1, 2)])
def test_quantum_characteristic(field, q, e):
    assert quantum_characteristic(field, q) == e


def test_quantum_characteristic_rejects_zero():
    with pytest.raises(ValueError):
        quantum_characteristic(F5, 0)


def test_valuation_at_zero():
    x = RatFun.x(F5)
    assert valuation_at_zero(x * x / (x + 1)) == 2
    assert valuation_at_zero(1 / x) == -1
    assert valuation_at_zero(RatFun.const(F5, 0)) == math.inf


def test_specialize_at_zero():
    x = RatFun.x(F5)
    assert specialize_at_zero((x + 4) / (x + 1)) == 4
    assert specialize_at_zero(x * x) == 0
    with pytest.raises(ValueError, match="not integral"):
        specialize_at_zero(1 / x)


def test_laurent():
    f = Laurent({2: 1, 0: 1})
    assert str(f) == "t^2+1"
    assert f.bar() == Laurent({-2: 1, 0: 1})
    assert Laurent().bar() == Laurent()
    assert Laurent({1: 3}).bar() == Laurent({-1: 3})
    assert f.at_one() == 2
    assert (f * f).at_one() == 4
    assert f.is_nonnegative() and not Laurent({0: -1}).is_nonnegative()


@pytest.mark.parametrize("R", [F5, RationalField()])
def test_linalg_inverse_and_rank(R):
    M = [[R(1), R(2), R(0)], [R(0), R(1), R(3)], [R(1), R(0), R(1)]]
    Minv = linalg.inverse(M, R)
    assert linalg.matmul(M, Minv, R) == linalg.identity(3, R)
    assert linalg.rank([[R(1), R(2)], [R(2), R(4)]], R) == 1
    with pytest.raises(ArithmeticError):
        linalg.inverse([[R(1), R(2)], [R(2), R(4)]], R)


def test_linalg_solve_and_nullspace():
    R = RationalField()
    M = [[R(1), R(1)], [R(1), R(-1)]]
    X = linalg.solve(M, [[R(3)], [R(1)]], R)
    assert X == [[Fraction(2)], [Fraction(1)]]
    assert linalg.solve([[R(1)], [R(1)]], [[R(1)], [R(2)]], R) is None
    N = linalg.nullspace([[R(1), R(2), R(3)]], R)
    assert len(N) == 2
    for v in N:
        assert linalg.matvec([[R(1), R(2), R(3)]], v, R) == [0]
