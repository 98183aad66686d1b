"""Brute-force verifiers over an odd residue characteristic.

Two independent oracles cross-check the symbolic layer at q = p:

* exact Haar-weighted integration over the rank-one compact unitary group
  modulo pi^N, for the rank-one spherical function; cells are enumerated from
  the two-chart coset parametrization with volumes 1/(1+q^-1) and
  q^-1/(1+q^-1);
* exact cyclotomic character sums over shells of the rank-one hermitian
  space, for the Siegel series.

Everything is exact: quotient-ring elements are residue pairs a + b*sqrt(eps)
mod p^N, character sums live in Z[x]/Phi_{p^m}(x), and comparisons against
the symbolic closed forms happen in Q(sqrt(p)).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .laurent import FactorizedRatFunc, LaurentPoly, MonomialMap
from .scalars import ExactScalar
from .siegel import SVarFunc, siegel_series_n1
from .spherical import spherical_n1_closed

DEFAULT_CELL_BUDGET = 10_000_000


class BudgetError(RuntimeError):
    """Cell enumeration would exceed the configured budget."""


def cell_budget() -> int:
    raw = os.environ.get("HS_BUDGET", "")
    try:
        return int(raw) if raw else DEFAULT_CELL_BUDGET
    except ValueError:
        return DEFAULT_CELL_BUDGET


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def smallest_nonresidue(p: int) -> int:
    for eps in range(2, p):
        if pow(eps, (p - 1) // 2, p) == p - 1:
            return eps
    raise ValueError(f"no quadratic non-residue found mod {p}")


@dataclass(frozen=True)
class OracleConfig:
    p: int
    N: int
    epsilon: int = 0  # 0 means: pick the smallest non-residue

    def __post_init__(self):
        if self.p == 2 or not _is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        eps = self.epsilon or smallest_nonresidue(self.p)
        if pow(eps, (self.p - 1) // 2, self.p) != self.p - 1:
            raise ValueError("epsilon must be a quadratic non-residue mod p")
        object.__setattr__(self, "epsilon", eps)

    @property
    def modulus(self) -> int:
        return self.p ** self.N


@dataclass(frozen=True)
class QuotientRingElem:
    """a + b*sqrt(eps) in the unramified quadratic extension mod pi^N."""

    a: int
    b: int
    cfg: OracleConfig

    def __post_init__(self):
        m = self.cfg.modulus
        object.__setattr__(self, "a", self.a % m)
        object.__setattr__(self, "b", self.b % m)

    def __add__(self, other: "QuotientRingElem") -> "QuotientRingElem":
        return QuotientRingElem(self.a + other.a, self.b + other.b, self.cfg)

    def __mul__(self, other: "QuotientRingElem") -> "QuotientRingElem":
        eps = self.cfg.epsilon
        return QuotientRingElem(
            self.a * other.a + eps * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.cfg,
        )

    def conj(self) -> "QuotientRingElem":
        return QuotientRingElem(self.a, -self.b, self.cfg)

    def norm(self) -> int:
        """N(x) = a^2 - eps b^2 mod p^N."""
        return (self.a * self.a - self.cfg.epsilon * self.b * self.b) % self.cfg.modulus

    def valuation(self) -> int:
        """min(v_p(a), v_p(b)), capped at N (cap means: zero mod pi^N)."""
        return min(_vp(self.a, self.cfg), _vp(self.b, self.cfg))


def _vp(x: int, cfg: OracleConfig) -> int:
    if x % cfg.modulus == 0:
        return cfg.N
    v = 0
    while x % cfg.p == 0:
        x //= cfg.p
        v += 1
    return v


# ---------------------------------------------------------------------------
# Cell enumeration over the rank-one compact unitary group


@dataclass(frozen=True)
class Cell:
    chart: int  # 1 or 2
    u: int
    v: int
    weight: Fraction


def enumerate_u11_cells(cfg: OracleConfig):
    """Weighted cells covering the group: two charts, each fibered over
    (u, v) mod p^N; chart volumes 1/(1+q^-1) and q^-1/(1+q^-1), total 1.

    The integrands used here do not depend on the unit diagonal coordinate,
    so cells carry only the (u, v) part; weights are exact rationals.
    """
    p, N = cfg.p, cfg.N
    count = 2 * p ** (2 * N)
    budget = cell_budget()
    if count > budget:
        max_n = 1
        while 2 * p ** (2 * (max_n + 1)) <= budget:
            max_n += 1
        raise BudgetError(
            f"cell count {count} exceeds budget {budget}; largest admissible N is {max_n}"
        )
    q = Fraction(p)
    w1 = (1 / (1 + q ** -1)) / p ** (2 * N)
    w2 = (q ** -1 / (1 + q ** -1)) / p ** (2 * N)
    for u in range(p ** N):
        for v in range(p ** N):
            yield Cell(1, u, v, w1)
            yield Cell(2, u, v, w2)


# ---------------------------------------------------------------------------
# Rank-one spherical function by integration


def spherical_n1_by_integration(cfg: OracleConfig, lam: int, e: int) -> SVarFunc:
    """Integrate chi(f(hx_e)) |f(hx_e)|^(s - 1/2) over the group by cells.

    The representative is x_e = pi^e (1, pi^(lam-2e)/2); on the first chart
    f(h x_e) = pi^(2e-lam) N(u sqrt(eps) + (1+uv) pi^(lam-2e)/2) up to units,
    on the second chart it is a unit multiple of pi^(2e-lam).  Requires
    N >= lam - 2e + 2 so valuations are determined mod pi^N.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if 2 * e > lam:
        raise ValueError("need 2e <= lam")
    if cfg.N < lam - 2 * e + 2:
        raise ValueError(
            f"precision insufficient: need N >= {lam - 2 * e + 2}, got {cfg.N}"
        )
    p, N = cfg.p, cfg.N
    m = cfg.modulus
    inv2 = pow(2, -1, m)
    d = lam - 2 * e
    pi_pow = pow(p, d, m)
    acc: dict = {}
    for cell in enumerate_u11_cells(cfg):
        if cell.chart == 1:
            x = QuotientRingElem((1 + cell.u * cell.v) * inv2 * pi_pow, cell.u, cfg)
            valp = x.valuation()
            if valp >= N:
                raise ValueError("valuation saturated at N; increase precision")
        else:
            x = QuotientRingElem(1, cell.v * inv2 * pi_pow, cfg)
            valp = x.valuation()
        val = (2 * e - lam) + 2 * valp
        acc[val] = acc.get(val, Fraction(0)) + cell.weight
    # sum of weight * (-1)^val * q^(val/2) * (q^-s)^val
    terms = {}
    for val, w in sorted(acc.items()):
        coeff = ExactScalar.u_power(val, w * (-1) ** (val % 2))
        terms[(2 * val,)] = coeff
    return SVarFunc(FactorizedRatFunc(LaurentPoly(1, terms)))


# ---------------------------------------------------------------------------
# Cyclotomic integers and the rank-one Siegel series by character sums


class CyclotomicInt:
    """Element of Z[x]/Phi_{p^m}(x); exact arithmetic, no floating point."""

    __slots__ = ("p", "m", "coeffs")

    def __init__(self, p: int, m: int, coeffs=None):
        self.p = p
        self.m = m
        deg = self.degree()
        vec = [0] * deg
        if coeffs:
            for k, c in enumerate(coeffs):
                vec[k] = c
        self.coeffs = tuple(vec)

    def degree(self) -> int:
        return self.p ** (self.m - 1) * (self.p - 1)

    @staticmethod
    def root_power(p: int, m: int, k: int) -> "CyclotomicInt":
        """x^k reduced mod Phi_{p^m}(x) and x^(p^m) = 1."""
        vec = [0] * (p ** (m - 1) * (p - 1))
        CyclotomicInt._add_power(vec, p, m, k % p ** m, 1)
        return CyclotomicInt(p, m, vec)

    @staticmethod
    def _add_power(vec: list, p: int, m: int, k: int, c: int):
        deg = p ** (m - 1) * (p - 1)
        if k < deg:
            vec[k] += c
        else:
            # x^((p-1)p^(m-1) + r) = -sum_{j<p-1} x^(j p^(m-1) + r)
            r = k - deg
            for j in range(p - 1):
                vec[r + j * p ** (m - 1)] -= c

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        assert (self.p, self.m) == (other.p, other.m)
        return CyclotomicInt(
            self.p, self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        assert (self.p, self.m) == (other.p, other.m)
        pm = self.p ** self.m
        vec = [0] * self.degree()
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    CyclotomicInt._add_power(vec, self.p, self.m, (i + j) % pm, a * b)
        return CyclotomicInt(self.p, self.m, vec)

    def as_integer(self):
        """The rational integer this element equals, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInt)
            and (self.p, self.m, self.coeffs) == (other.p, other.m, other.coeffs)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.coeffs))


def shell_character_sum(p: int, e: int, lam: int) -> int:
    """sum over units a mod p^e of psi(a pi^(lam-e)), psi of conductor O.

    For e <= lam the character is trivial on the shell (the sum counts
    units); otherwise the sum reduces in Z[x]/Phi_{p^(e-lam)}(x) to a
    rational integer.
    """
    if e < 1:
        return 1
    m = e - lam
    if m <= 0:
        return p ** e - p ** (e - 1)
    vec = [0] * (p ** (m - 1) * (p - 1))
    pm = p ** m
    # units mod p^e project onto residues mod p^m with multiplicity p^(e-m),
    # except multiples of p which are excluded
    mult = p ** (e - m)
    for a in range(pm):
        if a % p:
            CyclotomicInt._add_power(vec, p, m, a, mult)
    ci = CyclotomicInt(p, m, vec)
    val = ci.as_integer()
    if val is None:
        raise AssertionError("complete character sum did not reduce to an integer")
    return val


def siegel_n1_by_charsum(cfg: OracleConfig, lam: int) -> SVarFunc:
    """b(pi^lam; s) summed shell by shell with exact character sums.

    Shells e > lam + 1 vanish by complete-sum cancellation; the first such
    shell is checked explicitly so the truncation is exact.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if lam > 3:
        raise ValueError("lam <= 3 keeps the cyclotomic degree within budget")
    p = cfg.p
    terms = {(0,): ExactScalar.from_int(1)}
    for e in range(1, lam + 2):
        s = shell_character_sum(p, e, lam)
        if s:
            terms[(2 * e,)] = ExactScalar.from_int(s)
    if shell_character_sum(p, lam + 2, lam) != 0:
        raise AssertionError("shell beyond lam+1 failed to vanish")
    return SVarFunc(FactorizedRatFunc(LaurentPoly(1, terms)))


# ---------------------------------------------------------------------------
# Comparison of symbolic values with oracle values at q = p


def _laurent_at_sqrt(poly: LaurentPoly, p: int) -> dict:
    return {m: c.evaluate_sqrt(p) for m, c in poly.terms.items()}


def _pair_mul(x, y, p):
    return (x[0] * y[0] + p * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def equal_at_prime(a: FactorizedRatFunc, b: FactorizedRatFunc, p: int) -> bool:
    """Exact equality of two univariate values after specializing q -> p
    (coefficients compared in Q(sqrt p))."""
    if a.nvars != 1 or b.nvars != 1:
        raise ValueError("equal_at_prime compares univariate values")
    na = a.num
    for f, mult in b.den:
        fp = f.to_poly()
        for _ in range(mult):
            na = na * fp
    nb = b.num
    for f, mult in a.den:
        fp = f.to_poly()
        for _ in range(mult):
            nb = nb * fp
    da = _laurent_at_sqrt(na, p)
    db = _laurent_at_sqrt(nb, p)
    keys = set(da) | set(db)
    zero = (Fraction(0), Fraction(0))
    return all(da.get(k, zero) == db.get(k, zero) for k in keys)


def check_spherical_oracle(cfg: OracleConfig, lam: int, e: int) -> bool:
    """Oracle integration equals the rank-one closed form at q = p."""
    got = spherical_n1_by_integration(cfg, lam, e)
    want = spherical_n1_closed(lam, e, 0).substitute(
        MonomialMap(1, 1, (1,), (0,), ((-2,),))  # X = q^s -> V^(-2)
    )
    return equal_at_prime(got.value, want, cfg.p)


def check_siegel_oracle(cfg: OracleConfig, lam: int) -> bool:
    """Oracle character sums equal the shell formula at q = p."""
    got = siegel_n1_by_charsum(cfg, lam)
    want = siegel_series_n1(lam)
    return equal_at_prime(got.value, want.value, cfg.p)
