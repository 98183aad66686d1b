from fractions import Fraction

import pytest

from hermsf.scalars import ExactScalar, MINUS_ONE, ONE, ZERO


def test_basic_identities():
    u = ExactScalar.u_power(1)
    q = ExactScalar.q_power(1)
    assert u * u == q
    assert q ** 3 == ExactScalar.q_power(3)
    assert (q / q).is_one()
    assert (ONE - ONE).is_zero()
    assert -ONE == MINUS_ONE


def test_normalization_invariants():
    # den monic, reduced, zero canonical
    s = ExactScalar((2, 4), (2,))
    assert s == ExactScalar((1, 2))
    z = ExactScalar((0,), (1, 5))
    assert z.is_zero() and z.den == (Fraction(1),)
    # common u-power cancellation
    t = ExactScalar((0, 0, 3), (0, 6))
    assert t == ExactScalar.u_power(1, Fraction(1, 2))
    # polynomial gcd reduction: (1 - q^2)/(1 - q) = 1 + q  (in u: deg 4 / deg 2)
    r = ExactScalar((1, 0, 0, 0, -1), (1, 0, -1))
    assert r == ExactScalar((1, 0, 1))


def test_division_and_inverse():
    q = ExactScalar.q_power(1)
    half = ONE / (ONE + q)
    assert (half * (ONE + q)).is_one()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ExactScalar((1,), ())


def test_sqrt():
    assert ExactScalar.q_power(2).sqrt() == ExactScalar.q_power(1)
    assert ExactScalar.q_power(-1).sqrt() == ExactScalar.u_power(-1)
    assert ExactScalar.q_power(1, Fraction(9, 4)).sqrt() == ExactScalar.u_power(
        1, Fraction(3, 2)
    )
    assert (-ExactScalar.q_power(1)).sqrt() is None
    assert ExactScalar.u_power(1).sqrt() is None
    assert (ONE + ExactScalar.q_power(1)).sqrt() is None


def test_evaluation():
    s = ExactScalar.u_power(-3)
    assert s.evaluate(Fraction(2)) == Fraction(1, 8)
    a, b = ExactScalar.u_power(3).evaluate_sqrt(3)
    assert (a, b) == (0, 3)
    a, b = (ONE + ExactScalar.q_power(-1)).evaluate_sqrt(3)
    assert (a, b) == (Fraction(4, 3), 0)
    with pytest.raises(ZeroDivisionError):
        (ONE / (ONE - ExactScalar.q_power(1))).evaluate(Fraction(1))


def test_pretty():
    assert ExactScalar.q_power(-1).pretty() == "q^-1"
    assert ExactScalar.u_power(1).pretty() == "q^1/2"
    assert (ONE + ExactScalar.q_power(-1)).pretty() == "q^-1 + 1"


def test_hash_and_eq():
    a = ExactScalar.q_power(2)
    b = ExactScalar.u_power(4)
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
