"""Gamma factors of the Weyl-group functional equations.

Gamma_sigma(z) multiplies the spherical function in
omega(z) = Gamma_sigma(z) * omega(sigma z); it is a product of one rational
factor per root in the inversion set of sigma, satisfies the cocycle
Gamma_{s2 o s1}(z) = Gamma_{s2}(s1 z) * Gamma_{s1}(z), and for the special
element rho: z -> (-z_n, ..., -z_1) collapses to an explicit closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .laurent import BinomialFactor, FactoredForm, FactorizedRatFunc
from .scalars import ExactScalar, ONE
from .weyl import (
    Root,
    WeylElem,
    act_on_poly,
    inversion_set,
    rho_element,
    simple_reflection,
    simple_root,
)


def root_factor_ff(alpha: Root, e0: int, n: int) -> FactoredForm:
    """Per-root multiplier f_alpha at t = <alpha, z>.

    Short roots give (1 - q^(t-1)) / (q^t - q^(-1)); long roots give |2|^t,
    a pure monomial since |2| = q^(-e0).
    """
    if alpha.kind == "long":
        i = alpha.vec.index(2)
        exps = [0] * n
        exps[i] = -2 * e0
        return FactoredForm.from_monomial(n, tuple(exps))
    m = alpha.vec
    num = BinomialFactor(n, m, ExactScalar.q_power(-1, -1), ONE)  # 1 - q^-1 X^alpha
    den = BinomialFactor(n, m, ONE, ExactScalar.q_power(-1, -1))  # X^alpha - q^-1
    return FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)


def root_factor(alpha: Root, e0: int, n: int) -> FactorizedRatFunc:
    return root_factor_ff(alpha, e0, n).expand()


@dataclass
class GammaFactor:
    """Gamma_sigma(z) with the Weyl element and dyadic valuation attached."""

    sigma: WeylElem
    e0: int
    factored: FactoredForm
    _value: Optional[FactorizedRatFunc] = field(default=None, repr=False)

    @property
    def value(self) -> FactorizedRatFunc:
        if self._value is None:
            self._value = self.factored.expand()
        return self._value


@lru_cache(maxsize=None)
def gamma_factor(sigma: WeylElem, e0: int) -> GammaFactor:
    """Product of root factors over the inversion set of sigma."""
    n = sigma.n
    ff = FactoredForm.one(n)
    for alpha in inversion_set(sigma):
        ff = ff * root_factor_ff(alpha, e0, n)
    return GammaFactor(sigma, e0, ff)


def gamma_from_word(word, e0: int, n: int) -> GammaFactor:
    """Gamma of a (not necessarily reduced) generator word via the cocycle.

    The word multiplies right-to-left; with tau the suffix already processed,
    each step applies Gamma_{s o tau}(z) = Gamma_s(tau(z)) * Gamma_tau(z).
    For a reduced word this reproduces gamma_factor of the product.
    """
    tau = WeylElem.identity(n)
    ff = FactoredForm.one(n)
    for tag in reversed(list(word)):
        s = simple_reflection(tag, n)
        step = root_factor_ff(simple_root(tag, n), e0, n)
        ff = act_on_poly(tau, step) * ff
        tau = s.compose(tau)
    return GammaFactor(tau, e0, ff)


def gamma_rho_closed_ff(n: int, e0: int) -> FactoredForm:
    """Closed form of Gamma_rho for rho: z -> (-z_n, ..., -z_1):

        |2|^(2(z_1+...+z_n)) * prod_{i<j} (1 - q^(z_i+z_j-1)) / (q^(z_i+z_j) - q^(-1))
    """
    ff = FactoredForm.from_monomial(n, (-2 * e0,) * n)
    qinv = ExactScalar.q_power(-1)
    for i in range(n):
        for j in range(i + 1, n):
            m = [0] * n
            m[i] = m[j] = 1
            num = BinomialFactor(n, tuple(m), -qinv, ONE)
            den = BinomialFactor(n, tuple(m), ONE, -qinv)
            ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    return ff


def gamma_rho_closed(n: int, e0: int) -> FactorizedRatFunc:
    if n < 1:
        raise ValueError("n must be >= 1")
    return gamma_rho_closed_ff(n, e0).expand()


def gamma_rho(n: int, e0: int) -> GammaFactor:
    """Gamma at rho computed from the inversion-set product."""
    return gamma_factor(rho_element(n), e0)
