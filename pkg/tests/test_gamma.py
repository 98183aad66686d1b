from hermsf.gamma import (
    gamma_factor,
    gamma_from_word,
    gamma_rho_closed,
    gamma_rho_closed_ff,
    root_factor,
)
from hermsf.laurent import BinomialFactor, FactorizedRatFunc, LaurentPoly
from hermsf.scalars import ExactScalar, ONE
from hermsf.weyl import (
    Root,
    WeylElem,
    act_on_poly,
    enumerate_weyl,
    reduced_word,
    rho_element,
    simple_reflection,
)


def test_root_factor_long():
    # non-dyadic: |2| = 1
    assert root_factor(Root((0, 2)), 0, 2).equals(FactorizedRatFunc.one(2))
    # dyadic: X_n^-2
    f = root_factor(Root((0, 2)), 1, 2)
    assert f.is_poly() and f.num == LaurentPoly(2, {(0, -2): ONE})


def test_root_factor_short():
    f = root_factor(Root((1, -1)), 0, 2)
    qm1 = ExactScalar.q_power(-1)
    expect = FactorizedRatFunc(
        LaurentPoly(2, {(0, 0): ONE, (1, -1): -qm1}),
        [(BinomialFactor(2, (1, -1), ONE, -qm1), 1)],
    )
    assert f.equals(expect)


def test_gamma_examples():
    assert gamma_factor(WeylElem.identity(2), 0).factored.is_one()
    tau = simple_reflection("t", 2)
    g = gamma_factor(tau, 1)
    assert g.value.is_poly() and g.value.num == LaurentPoly(2, {(0, -2): ONE})
    s1 = simple_reflection("s1", 2)
    assert gamma_factor(s1, 0).value.equals(root_factor(Root((1, -1)), 0, 2))


def test_cocycle_word():
    # empty word
    g = gamma_from_word([], 0, 2)
    assert g.factored.is_one() and g.sigma.is_identity()
    # non-reduced [t, t] collapses to 1
    g = gamma_from_word(["t", "t"], 1, 2)
    assert g.sigma.is_identity() and g.factored.is_one()
    # reduced word of rho agrees with both the product and the closed form
    for n in (2, 3):
        for e0 in (0, 1):
            rho = rho_element(n)
            g = gamma_from_word(reduced_word(rho), e0, n)
            assert g.sigma == rho
            assert g.factored.equals(gamma_factor(rho, e0).factored)
            assert g.factored.equals(gamma_rho_closed_ff(n, e0))


def test_reduced_word_independence():
    # two distinct reduced words of the same element give equal Gamma
    n = 2
    w1 = ("s1", "t", "s1", "t")
    w2 = ("t", "s1", "t", "s1")
    from hermsf.weyl import word_to_element

    assert word_to_element(w1, n) == word_to_element(w2, n)
    assert gamma_from_word(w1, 1, n).factored.equals(gamma_from_word(w2, 1, n).factored)


def test_rho_closed_small():
    assert gamma_rho_closed(1, 0).equals(FactorizedRatFunc.one(1))
    g = gamma_rho_closed(1, 1)
    assert g.num == LaurentPoly(1, {(-2,): ONE})
    qm1 = ExactScalar.q_power(-1)
    expect = FactorizedRatFunc(
        LaurentPoly(2, {(0, 0): ONE, (1, 1): -qm1}),
        [(BinomialFactor(2, (1, 1), ONE, -qm1), 1)],
    )
    assert gamma_rho_closed(2, 0).equals(expect)


def test_inverse_cocycle():
    # Gamma_sigma(z) * Gamma_{sigma^-1}(sigma z) = 1
    for n in (2, 3):
        for e0 in (0, 1):
            for sigma in enumerate_weyl(n):
                lhs = gamma_factor(sigma, e0).factored
                rhs = act_on_poly(sigma, gamma_factor(sigma.inverse(), e0).factored)
                assert (lhs * rhs).is_one() or (lhs * rhs).equals(
                    gamma_factor(WeylElem.identity(n), e0).factored
                )


def test_gamma_equals_invariance_ratio():
    # Gamma_s = g_{-a}/g_a for the simple reflections, both root lengths
    from hermsf.laurent import FactoredForm

    def g_alpha(vec, e0, n):
        r = Root(tuple(vec))
        if r.kind == "long":
            i = [abs(x) for x in vec].index(2)
            exps = [0] * n
            exps[i] = e0 if vec[i] > 0 else -e0
            return FactoredForm.from_monomial(n, tuple(exps))
        num = BinomialFactor(n, tuple(vec), ONE, ONE)
        den = BinomialFactor(n, tuple(vec), ExactScalar.q_power(-1, -1), ONE)
        return FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)

    n = 2
    for tag, alpha in (("s1", (1, -1)), ("t", (0, 2))):
        s = simple_reflection(tag, n)
        neg = tuple(-x for x in alpha)
        for e0 in (0, 1):
            lhs = gamma_factor(s, e0).factored
            rhs = g_alpha(neg, e0, n) / g_alpha(alpha, e0, n)
            assert lhs.equals(rhs), (tag, e0)
