from fractions import Fraction

import pytest

from hermsf.gamma import gamma_factor
from hermsf.laurent import FactoredForm, FactorizedRatFunc, LaurentPoly, MonomialMap
from hermsf.scalars import ExactScalar, ONE
from hermsf.spherical import (
    SphericalInput,
    check_polynomial_invariance,
    invariance_factor,
    invariance_factor_ff,
    n1_identification,
    poincare_normalizer,
    rank1_zeta_closed,
    sn_invariance_factor_ff,
    spherical_at_base,
    spherical_n1_closed,
    weight_factor,
    weight_factor_root_form,
)
from hermsf.weyl import act_on_poly, simple_reflection, simple_reflection_tags


def test_input_validation():
    with pytest.raises(ValueError):
        SphericalInput(2, (0, 1), 0)  # not weakly decreasing
    with pytest.raises(ValueError):
        SphericalInput(2, (1, 0), 1)  # lambda_n < e0
    with pytest.raises(ValueError):
        SphericalInput(2, (1,), 0)  # wrong length


def test_weight_factor_forms_agree():
    for n in (1, 2, 3, 4):
        assert weight_factor(n).equals(weight_factor_root_form(n))


def test_weight_factor_n1():
    g = weight_factor(1)
    # (1 - q^-1 X1^2)/(1 - X1^2); vanishes at X1 = u
    assert g.eval_numeric(Fraction(2), [Fraction(2)]) == 0
    assert g.eval_numeric(Fraction(2), [Fraction(3)]) == (
        (1 - Fraction(9, 4)) / (1 - 9)
    )


def test_poincare_normalizer():
    assert poincare_normalizer(1) == ONE + ExactScalar.q_power(-1)
    # direct instantiation at n=2
    q = ExactScalar.q_power
    expect = (
        (ONE + q(-1)) * (ONE - q(-2)) * (ONE + q(-3)) * (ONE - q(-4))
        / (ONE - q(-2)) ** 2
    )
    assert poincare_normalizer(2) == expect
    assert poincare_normalizer(1).evaluate_sqrt(3) == (Fraction(4, 3), Fraction(0))


def test_n1_values():
    # lambda = 0 gives the constant 1
    v = spherical_at_base(SphericalInput(1, (0,), 0))
    assert v.value.equals(FactorizedRatFunc.one(1))
    # the calibrated identification is q^s -> X1^(-1) for both e0
    for e0 in (0, 1):
        mp = n1_identification(e0)
        assert (mp.signs, mp.upows, mp.rows) == ((1,), (0,), ((-1,),))


def test_n1_consistency_range():
    for e0 in (0, 1):
        mp = n1_identification(e0)
        for lam in range(e0, e0 + 4):
            closed = spherical_n1_closed(lam, 0, e0).substitute(mp)
            direct = spherical_at_base(SphericalInput(1, (lam,), e0)).value
            assert closed.equals(direct), (lam, e0)


def test_n1_closed_form_shape():
    # lam=1, e=0, e0=0: -q^(-1/2)(q^s + q^(-s))/(1+q^-1)
    v = spherical_n1_closed(1, 0, 0)
    x = Fraction(3)
    u0 = Fraction(2)  # q = 4
    got = v.eval_numeric(u0, [x])
    expect = -Fraction(1, 2) * (x + 1 / x) / (1 + Fraction(1, 4))
    assert got == expect
    # functional equation value(s) = |2|^(-2s) value(-s)
    inv = MonomialMap(1, 1, (1,), (0,), ((-1,),))
    for lam, e, e0 in [(0, 0, 0), (1, 0, 0), (2, 1, 0), (3, 0, 1), (2, 0, 1)]:
        v = spherical_n1_closed(lam, e, e0)
        refl = v.substitute(inv)
        mult = FactorizedRatFunc(LaurentPoly.term(1, (2 * e0,)))
        assert v.equals(mult * refl), (lam, e, e0)
    with pytest.raises(ValueError):
        spherical_n1_closed(1, 1, 0)  # 2e > lam - e0
    # distinct coset representatives give distinct values
    assert not spherical_n1_closed(2, 0, 0).equals(spherical_n1_closed(2, 1, 0))


def test_rank1_zeta():
    # lam=0, m=0, fpow=0, e0=0 collapses to 1
    assert rank1_zeta_closed(0, 0, 0, 0).equals(FactorizedRatFunc.one(1))
    # printed instantiation lam=1: inner kernel over (1+q^-1)(q^s-q^-s)
    v = rank1_zeta_closed(0, 1, 0, 0)
    u0, x = Fraction(2), Fraction(3)
    q = u0 * u0
    expect = (x ** 2 * (1 - 1 / (q * x ** 2)) - x ** -2 * (1 - x ** 2 / q)) / (
        (1 + 1 / q) * (x - 1 / x)
    )
    assert v.eval_numeric(u0, [x]) == expect
    # functional equation: zeta(s) = |2|^(-2s) |f|^(2s) zeta(-s)
    inv = MonomialMap(1, 1, (1,), (0,), ((-1,),))
    for lam in range(5):
        for m, fpow, e0 in [(0, 0, 0), (1, 1, 0), (0, 2, 1), (1, 0, 1)]:
            v = rank1_zeta_closed(m, lam, fpow, e0)
            mult = FactorizedRatFunc(LaurentPoly.term(1, (2 * e0 - 2 * fpow,)))
            assert v.equals(mult * v.substitute(inv)), (lam, m, fpow, e0)
    with pytest.raises(ValueError):
        rank1_zeta_closed(0, -1, 0, 0)


def test_fe_small():
    for n, lam, e0 in [(1, (2,), 0), (2, (1, 0), 0), (2, (2, 1), 1)]:
        v = spherical_at_base(SphericalInput(n, lam, e0))
        for tag in simple_reflection_tags(n):
            s = simple_reflection(tag, n)
            rhs = gamma_factor(s, e0).value * act_on_poly(s, v.raw)
            assert v.raw.equals(rhs), (n, lam, e0, tag)


def test_invariance_factor_shape():
    # n=2, e0=0: (1+X1/X2)(1+X1X2)/((1-q^-1 X1/X2)(1-q^-1 X1X2))
    f = invariance_factor(2, 0)
    u0 = Fraction(3)
    xs = [Fraction(2), Fraction(5)]
    q = u0 * u0
    t1, t2 = Fraction(2, 5), Fraction(10)
    expect = (1 + t1) * (1 + t2) / ((1 - t1 / q) * (1 - t2 / q))
    assert f.eval_numeric(u0, xs) == expect
    # n=1: only the long root; trivial for e0=0, X1^e0 otherwise
    assert invariance_factor(1, 0).equals(FactorizedRatFunc.one(1))
    assert invariance_factor(1, 1).num == LaurentPoly.variable(1, 0)


def test_polynomial_invariance_cases():
    for n, lam, e0 in [(1, (0,), 0), (2, (1, 1), 0), (2, (2, 1), 0), (2, (2, 1), 1)]:
        v = spherical_at_base(SphericalInput(n, lam, e0))
        assert check_polynomial_invariance(v).passed, (n, lam, e0)


def test_polynomial_invariance_negative_control():
    # even-parity lambda keeps genuine poles without F
    v = spherical_at_base(SphericalInput(2, (2, 0), 0))
    rep = check_polynomial_invariance(v, factor=FactoredForm.one(2))
    assert not rep.holomorphic and rep.residual_factors
    # odd-parity lambda is pole-free bare but fails W-invariance
    v = spherical_at_base(SphericalInput(2, (2, 1), 0))
    rep = check_polynomial_invariance(v, factor=FactoredForm.one(2))
    assert rep.holomorphic and not rep.invariant
    # dropping the long-root monomial breaks a dyadic case
    v = spherical_at_base(SphericalInput(2, (1, 1), 1))
    rep = check_polynomial_invariance(v, factor=invariance_factor_ff(2, 0))
    assert not rep.passed


def test_sn_partial_invariance():
    # multiplying by the difference-root part alone cancels every
    # difference-type denominator factor and is fixed by the symmetric group
    for lam, e0 in [((1, 0), 0), ((2, 1), 0), ((1, 1), 1)]:
        v = spherical_at_base(SphericalInput(2, lam, e0))
        prod = v.raw * sn_invariance_factor_ff(2).expand()
        for fac, _ in prod.den:
            assert sum(fac.exps) != 0, (lam, e0, fac)  # no difference-type factor
        s1 = simple_reflection("s1", 2)
        assert act_on_poly(s1, prod).equals(prod), (lam, e0)
