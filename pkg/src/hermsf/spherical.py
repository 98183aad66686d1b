"""The explicit spherical function at the distinguished base point.

The value is a normalized sum over the Weyl group of
weight(sigma z) * Gamma_sigma(z) * q^(-<lambda, sigma z>), with an overall
sign and a half-integer power of q realized through u = q**(1/2).  The same
module carries the holomorphy/invariance factor F(z), the rank-one closed
forms, and the calibrated variable identification used to cross-check the
Weyl sum against the rank-one integral formula.

Convention note: the exponent bookkeeping was fixed by direct evaluation of
the base-point integrand and validated against the rank-one closed form
(itself validated by brute-force p-adic integration): the Weyl sum carries
q^(-<lambda, sigma(z)>) together with a q^(-sum_i lambda_i (n-i+1/2))
prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .laurent import (
    BinomialFactor,
    FactoredForm,
    FactorizedRatFunc,
    LaurentPoly,
    MonomialMap,
    mono_add,
    mono_neg,
)
from .scalars import ExactScalar, ONE
from .weyl import (
    WeylElem,
    act_on_poly,
    enumerate_weyl,
    inversion_set,
    long_positive_roots,
    short_positive_roots,
)

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class SphericalInput:
    """(n, weakly decreasing integer vector lambda, e0 = valuation of 2)."""

    n: int
    lam: tuple
    e0: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if len(self.lam) != self.n:
            raise ValueError("lambda must have length n")
        if any(self.lam[i] < self.lam[i + 1] for i in range(self.n - 1)):
            raise ValueError("lambda must be weakly decreasing")
        if self.e0 < 0:
            raise ValueError("e0 must be >= 0")
        if self.lam[-1] < self.e0:
            raise ValueError("lambda_n must be >= e0")


@dataclass(frozen=True)
class SphericalValue:
    """Weyl sum kept as prefactor * raw.

    ``raw`` carries only u-monomial coefficient denominators, which keeps the
    functional-equation and invariance suites on cheap arithmetic; ``value``
    folds the scalar prefactor in.
    """

    raw: FactorizedRatFunc
    prefactor: ExactScalar
    input: SphericalInput

    @property
    def value(self) -> FactorizedRatFunc:
        return _folded_value(self.input.n, tuple(self.input.lam), self.input.e0)


# ---------------------------------------------------------------------------
# The weight factor gamma(z) and the normalizer Q


def weight_factor_ff(n: int) -> FactoredForm:
    """Root-indexed form: short roots contribute
    (1 - q^(2<a,z>-2)) / (1 - q^(2<a,z>)), long roots
    (1 - q^(<a,z>-1)) / (1 - q^(<a,z>))."""
    ff = FactoredForm.one(n)
    for a in short_positive_roots(n):
        m2 = tuple(2 * x for x in a.vec)
        num = BinomialFactor(n, m2, ExactScalar.q_power(-2, -1), ONE)
        den = BinomialFactor(n, m2, -ONE, ONE)
        ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    for a in long_positive_roots(n):
        num = BinomialFactor(n, a.vec, ExactScalar.q_power(-1, -1), ONE)
        den = BinomialFactor(n, a.vec, -ONE, ONE)
        ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    return ff


def weight_factor(n: int) -> FactorizedRatFunc:
    """The printed i<j product form of the weight gamma(z)."""
    ff = FactoredForm.one(n)
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (-1, 1):
                m = [0] * n
                m[i], m[j] = 2, 2 * sj
                entries.append(tuple(m))
    for i in range(n):
        m = [0] * n
        m[i] = 2
        entries.append(tuple(m))
    for m in entries:
        shift = -2 if sum(abs(x) for x in m) == 4 else -1
        num = BinomialFactor(n, m, ExactScalar.q_power(shift, -1), ONE)
        den = BinomialFactor(n, m, -ONE, ONE)
        ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    return ff.expand()


def weight_factor_root_form(n: int) -> FactorizedRatFunc:
    return weight_factor_ff(n).expand()


def poincare_normalizer(n: int) -> ExactScalar:
    """Q = prod_{i=1}^{2n} (1 - (-1)^i q^(-i)) / (1 - q^(-2))^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = ONE
    for i in range(1, 2 * n + 1):
        num = num * (ONE - ExactScalar.q_power(-i, (-1) ** i))
    return num / (ONE - ExactScalar.q_power(-2)) ** n


# ---------------------------------------------------------------------------
# Internal fast expansion (coefficients as sparse u-Laurent dicts)


def _umono(c: ExactScalar):
    m = c.as_u_monomial()
    if m is None:
        raise AssertionError("hot-path coefficient is not a u-monomial")
    return m  # (Fraction, uexp)


def _expand_binomials(n: int, binomials) -> dict:
    """Expand prod (c_a X^m + c_b) into {exps: {uexp: Fraction}}."""
    acc = {(0,) * n: {0: _F1}}
    for f in binomials:
        va, ka = _umono(f.coeff_a)
        cb = f.coeff_b.as_u_monomial() if f.coeff_b else None
        out: dict = {}
        for m, ud in acc.items():
            tgt = mono_add(m, f.exps)
            slot = out.setdefault(tgt, {})
            for k, v in ud.items():
                kk = k + ka
                nv = slot.get(kk, _F0) + v * va
                if nv:
                    slot[kk] = nv
                elif kk in slot:
                    del slot[kk]
            if cb is not None:
                vb, kb = cb
                slot = out.setdefault(m, {})
                for k, v in ud.items():
                    kk = k + kb
                    nv = slot.get(kk, _F0) + v * vb
                    if nv:
                        slot[kk] = nv
                    elif kk in slot:
                        del slot[kk]
        acc = {m: ud for m, ud in out.items() if ud}
    return acc


def _udict_scalar(ud: dict) -> ExactScalar:
    k0 = min(ud)
    coeffs = [_F0] * (max(ud) - k0 + 1)
    for k, v in ud.items():
        coeffs[k - k0] = v
    if k0 >= 0:
        return ExactScalar(tuple([_F0] * k0 + coeffs))
    return ExactScalar(tuple(coeffs), (_F0,) * (-k0) + (_F1,))


def _udict_poly(n: int, acc: dict) -> LaurentPoly:
    terms = {}
    for m, ud in acc.items():
        c = _udict_scalar(ud)
        if c:
            terms[m] = c
    return LaurentPoly(n, terms)


@lru_cache(maxsize=None)
def _weight_data(n: int):
    """(expanded numerator, denominator atoms, unit (Fraction, uexp), unit exps)."""
    ff = weight_factor_ff(n)
    pos = []
    neg = []
    for f, k in ff.factors.items():
        (pos if k > 0 else neg).extend([f] * abs(k))
    num_exp = _expand_binomials(n, pos)
    return num_exp, tuple(neg), _umono(ff.unit), ff.unit_exps


@lru_cache(maxsize=None)
def _den_unit(sigma: WeylElem, n: int):
    """Unit relating prod(atom(sigma z)) to prod(atom) over the weight atoms."""
    atoms = _weight_data(n)[1]
    ff = FactoredForm.one(n)
    for a in atoms:
        img = BinomialFactor(n, sigma.act_on_exps(a.exps), a.coeff_a, a.coeff_b)
        ff = ff * FactoredForm.from_binomial(img)
    base: dict = {}
    for a in atoms:
        base[a] = base.get(a, 0) + 1
    if ff.factors != base:
        raise AssertionError("weight denominator atoms are not Weyl-stable")
    return _umono(ff.unit), ff.unit_exps


# ---------------------------------------------------------------------------
# The explicit value at the base point


@lru_cache(maxsize=None)
def _sigma_products(n: int):
    """Per sigma: the lambda- and e0-independent product

        weight_num(sigma z) * prod_{a in inv, short} (1 - q^-1 X^a)
                            * prod_{a not in inv, short} (X^a - q^-1)

    as {exps: ((uexp, Fraction), ...)}, with all scalar units folded in,
    plus the base exponent offset and the long-root inversion indicator.
    """
    num_exp, _den_atoms, (wuv, wuk), wunit_exps = _weight_data(n)
    shorts = short_positive_roots(n)
    q1 = ExactScalar.q_power(1)
    qm1 = ExactScalar.q_power(-1)
    out = []
    for sigma in enumerate_weyl(n):
        inv = set(inversion_set(sigma))
        mid_binomials = []
        n_inv_short = 0
        for a in shorts:
            if a in inv:
                # 1 - q^-1 X^a = -q^-1 (X^a - q)
                mid_binomials.append(BinomialFactor(n, a.vec, ONE, -q1))
                n_inv_short += 1
            else:
                mid_binomials.append(BinomialFactor(n, a.vec, ONE, -qm1))
        mid = _expand_binomials(n, mid_binomials)
        (duv, duk), du_exps = _den_unit(sigma, n)
        sv = wuv * Fraction((-1) ** n_inv_short) / duv
        sk = wuk - duk - 2 * n_inv_short
        prod: dict = {}
        for m1, ud1 in num_exp.items():
            rm = sigma.act_on_exps(m1)
            for m2, ud2 in mid.items():
                tgt = mono_add(rm, m2)
                slot = prod.setdefault(tgt, {})
                for k1, v1 in ud1.items():
                    for k2, v2 in ud2.items():
                        kk = k1 + k2 + sk
                        nv = slot.get(kk, _F0) + v1 * v2 * sv
                        if nv:
                            slot[kk] = nv
                        elif kk in slot:
                            del slot[kk]
        frozen = {
            m: tuple(ud.items()) for m, ud in prod.items() if ud
        }
        base_off = mono_add(sigma.act_on_exps(wunit_exps), mono_neg(du_exps))
        long_vec = [0] * n
        for a in inv:
            if a.kind == "long":
                long_vec[a.vec.index(2)] = 1
        out.append((sigma, frozen, base_off, tuple(long_vec)))
    return tuple(out)


@lru_cache(maxsize=None)
def _spherical_at_base(n: int, lam: tuple, e0: int):
    _num_exp, den_atoms, _wu, _we = _weight_data(n)
    shorts = short_positive_roots(n)
    qm1 = ExactScalar.q_power(-1)
    gamma_den = [BinomialFactor(n, a.vec, ONE, -qm1) for a in shorts]

    total: dict = {}
    for sigma, prod, base_off, long_vec in _sigma_products(n):
        off = mono_add(mono_neg(sigma.act_on_exps(lam)), base_off)
        if e0:
            off = mono_add(off, tuple(-2 * e0 * x for x in long_vec))
        for m, upairs in prod.items():
            tgt = mono_add(m, off)
            slot = total.setdefault(tgt, {})
            for k, v in upairs:
                nv = slot.get(k, _F0) + v
                if nv:
                    slot[k] = nv
                elif k in slot:
                    del slot[k]

    num = _udict_poly(n, {m: ud for m, ud in total.items() if ud})
    den = [(a, 1) for a in den_atoms] + [(f, 1) for f in gamma_den]
    raw = FactorizedRatFunc(num, den)
    sgn = sum(l * (n - i + 1) for i, l in enumerate(lam, start=1))
    upow = -sum(l * (2 * (n - i) + 1) for i, l in enumerate(lam, start=1))
    pref = ExactScalar.u_power(upow, Fraction((-1) ** sgn)) / poincare_normalizer(n)
    return raw, pref


@lru_cache(maxsize=None)
def _folded_value(n: int, lam: tuple, e0: int) -> FactorizedRatFunc:
    raw, pref = _spherical_at_base(n, lam, e0)
    return raw.mul_scalar(pref)


def spherical_at_base(params: SphericalInput) -> SphericalValue:
    """Explicit spherical function at the base point x_T, T = diag(pi^lambda)."""
    raw, pref = _spherical_at_base(params.n, tuple(params.lam), params.e0)
    return SphericalValue(raw, pref, params)


# ---------------------------------------------------------------------------
# Invariance factors F(z) and the S_n part


def invariance_factor_ff(n: int, e0: int) -> FactoredForm:
    """F(z): short roots give (1 + X^a)/(1 - q^-1 X^a); long roots give
    |2|^(-<a,z>/2) = X_i^(e0)."""
    ff = FactoredForm.from_monomial(n, (e0,) * n)
    for a in short_positive_roots(n):
        num = BinomialFactor(n, a.vec, ONE, ONE)
        den = BinomialFactor(n, a.vec, ExactScalar.q_power(-1, -1), ONE)
        ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    return ff


def invariance_factor(n: int, e0: int) -> FactorizedRatFunc:
    return invariance_factor_ff(n, e0).expand()


def sn_invariance_factor_ff(n: int) -> FactoredForm:
    """The difference-root part prod_{i<j} (1 + X_i/X_j)/(1 - q^-1 X_i/X_j)."""
    ff = FactoredForm.one(n)
    for a in short_positive_roots(n):
        if sum(a.vec) != 0:
            continue
        num = BinomialFactor(n, a.vec, ONE, ONE)
        den = BinomialFactor(n, a.vec, ExactScalar.q_power(-1, -1), ONE)
        ff = ff * FactoredForm.from_binomial(num) * FactoredForm.from_binomial(den, -1)
    return ff


@dataclass
class InvarianceReport:
    holomorphic: bool
    invariant: bool
    residual_factors: tuple
    failing_sigma: Optional[WeylElem]

    @property
    def passed(self) -> bool:
        return self.holomorphic and self.invariant


def check_polynomial_invariance(
    value: SphericalValue, factor: Optional[FactoredForm] = None
) -> InvarianceReport:
    """Multiply by F(z) (or a supplied factor), then check that every
    denominator factor cancels and the result is fixed by all of W."""
    n = value.input.n
    if factor is None:
        factor = invariance_factor_ff(n, value.input.e0)
    prod = value.raw * factor.expand()  # scalar prefactor affects neither claim
    if prod.den:
        return InvarianceReport(False, False, prod.den, None)
    for sigma in enumerate_weyl(n):
        if act_on_poly(sigma, prod.num) != prod.num:
            return InvarianceReport(True, False, (), sigma)
    return InvarianceReport(True, True, (), None)


# ---------------------------------------------------------------------------
# Rank-one closed forms (variable X = q^s)


def _accumulate(n: int, pairs) -> LaurentPoly:
    terms: dict = {}
    for exps, c in pairs:
        cur = terms.get(exps)
        cur = c if cur is None else cur + c
        if cur:
            terms[exps] = cur
        elif exps in terms:
            del terms[exps]
    return LaurentPoly(n, terms)


def _rank1_kernel(m_shift: int) -> LaurentPoly:
    """X^(M+1)(1 - q^-1 X^-2) - X^-(M+1)(1 - q^-1 X^2) for M = m_shift."""
    qm1 = ExactScalar.q_power(-1)
    M = m_shift
    return _accumulate(
        1,
        [
            ((M + 1,), ONE),
            ((M - 1,), -qm1),
            ((-M - 1,), -ONE),
            ((-M + 1,), qm1),
        ],
    )


def spherical_n1_closed(lam: int, e: int, e0: int) -> FactorizedRatFunc:
    """Closed form of the rank-one spherical function at the coset of x_e:

        (-1)^lam q^(e - lam/2) |2|^(-s) / (1 + q^-1)
        * [X^(M+1)(1 - q^-1 X^-2) - X^-(M+1)(1 - q^-1 X^2)] / (X - X^-1)

    with M = lam - 2e - e0 and |2|^(-s) = X^e0.
    """
    if lam < e0:
        raise ValueError("lam must be >= e0")
    if 2 * e > lam - e0:
        raise ValueError("need 2e <= lam - e0")
    inner = _rank1_kernel(lam - 2 * e - e0)
    pref = ExactScalar.u_power(2 * e - lam, Fraction((-1) ** lam)) / (
        ONE + ExactScalar.q_power(-1)
    )
    num = inner.mul_term((e0 + 1,), pref)
    den = [(BinomialFactor(1, (2,), ONE, -ONE), 1)]
    return FactorizedRatFunc(num, den)


def rank1_zeta_closed(m: int, lam: int, fpow: int, e0: int) -> FactorizedRatFunc:
    """Closed form of the rank-one average over the compact unitary group:

        q^(m/2)/(1+q^-1) * |f/2|^s
        * [X^(lam+1)(1 - q^-1 X^-2) - X^-(lam+1)(1 - q^-1 X^2)] / (X - X^-1)

    with |f/2|^s = X^(e0-fpow), since v(f/2) = fpow - e0.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    inner = _rank1_kernel(lam)
    pref = ExactScalar.u_power(m) / (ONE + ExactScalar.q_power(-1))
    num = inner.mul_term((e0 - fpow + 1,), pref)
    den = [(BinomialFactor(1, (2,), ONE, -ONE), 1)]
    return FactorizedRatFunc(num, den)


# ---------------------------------------------------------------------------
# Calibrated identification between X = q^s and the Weyl-sum variable X_1


_CANDIDATES = tuple(
    (sign, a, b) for b in (-1, 1) for sign in (1, -1) for a in (0, -1, 1)
)


@lru_cache(maxsize=None)
def n1_identification(e0: int) -> MonomialMap:
    """Substitution q^s -> sign * u^a * X_1^b making the rank-one closed form
    match the Weyl sum; calibrated on lam = e0, e = 0 (then lam = e0 + 1 to
    break the symmetric-case ambiguity) and frozen thereafter."""
    survivors = []
    for sign, a, b in _CANDIDATES:
        mp = MonomialMap(1, 1, (sign,), (a,), ((b,),))
        ok = True
        for lam in (e0, e0 + 1):
            closed = spherical_n1_closed(lam, 0, e0).substitute(mp)
            direct = spherical_at_base(SphericalInput(1, (lam,), e0)).value
            if not closed.equals(direct):
                ok = False
                break
        if ok:
            survivors.append((sign, a, b))
    if not survivors:
        raise AssertionError(
            "no monomial identification matches the rank-one closed form"
        )
    sign, a, b = survivors[0]
    return MonomialMap(1, 1, (sign,), (a,), ((b,),))
