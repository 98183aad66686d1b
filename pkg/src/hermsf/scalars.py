"""Coefficient field for everything: rational functions in u, where u**2 = q.

q is the residue field cardinality and stays symbolic throughout; half-integer
powers of q (``q**(1/2) = u``) are what force the field to be Q(u) rather than
Q(q).  An :class:`ExactScalar` is a reduced fraction num/den of dense
polynomials in u with Fraction coefficients, den monic.  All arithmetic is
exact; there is no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Poly = tuple  # dense, little-endian by degree in u, no trailing zeros

_F0 = Fraction(0)
_F1 = Fraction(1)


def _strip(seq) -> Poly:
    coeffs = [c if type(c) is Fraction else Fraction(c) for c in seq]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _strip_t(lst: list) -> Poly:
    while lst and not lst[-1]:
        lst.pop()
    return tuple(lst)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _strip_t(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _strip_t(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_F0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, cb in enumerate(b):
            a[k + i] -= c * cb
        a.pop()
    return _strip_t(q), _strip_t(a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
        if b:
            b = tuple(c / b[-1] for c in b)  # keep monic to bound growth
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def _valuation(a: Poly) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    return 0


class ExactScalar:
    """Element of Q(u) with u**2 = q, kept reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(_F1,)):
        num = _strip(num)
        den = _strip(den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            self.num, self.den = (), (_F1,)
            return
        # cancel common powers of u
        shift = min(_valuation(num), _valuation(den))
        if shift:
            num = num[shift:]
            den = den[shift:]
        den_nonzero = sum(1 for c in den if c)
        if len(den) == 1:
            lc = den[0]
            self.num = tuple(c / lc for c in num)
            self.den = (_F1,)
            return
        if den_nonzero > 1 and len(num) > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
        lc = den[-1]
        if lc != 1:
            num = tuple(c / lc for c in num)
            den = tuple(c / lc for c in den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(v) -> "ExactScalar":
        return ExactScalar((Fraction(v),))

    @staticmethod
    def from_fraction(v: Fraction) -> "ExactScalar":
        return ExactScalar((Fraction(v),))

    @staticmethod
    def u_power(k: int, coeff=_F1) -> "ExactScalar":
        """coeff * u**k for any integer k."""
        if k >= 0:
            return ExactScalar((_F0,) * k + (Fraction(coeff),))
        return ExactScalar((Fraction(coeff),), (_F0,) * (-k) + (_F1,))

    @staticmethod
    def q_power(k: int, coeff=_F1) -> "ExactScalar":
        """coeff * q**k for any integer k."""
        return ExactScalar.u_power(2 * k, coeff)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (_F1,) and self.den == (_F1,)

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return ExactScalar(_padd(self.num, other.num), self.den)
        return ExactScalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __neg__(self) -> "ExactScalar":
        r = object.__new__(ExactScalar)
        r.num = _pneg(self.num)
        r.den = self.den
        return r

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        if not self.num or not other.num:
            return ZERO
        if self.den == (_F1,) and other.den == (_F1,):
            r = object.__new__(ExactScalar)
            r.num = _pmul(self.num, other.num)
            r.den = (_F1,)
            return r
        return ExactScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other: "ExactScalar") -> "ExactScalar":
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        return ExactScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def inverse(self) -> "ExactScalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return ExactScalar(self.den, self.num)

    def __pow__(self, k: int) -> "ExactScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactScalar)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def as_u_monomial(self):
        """Return (coeff, k) with self == coeff * u**k, or None."""
        if not self.num:
            return None
        if sum(1 for c in self.num if c) != 1:
            return None
        i = _valuation(self.num)
        dn = sum(1 for c in self.den if c)
        if dn != 1:
            return None
        j = _valuation(self.den)
        return (self.num[i] / self.den[j], i - j)

    def sqrt(self):
        """Exact square root if self is a square u-monomial, else None."""
        m = self.as_u_monomial()
        if m is None:
            return None
        c, k = m
        if c < 0 or k % 2:
            return None
        rn, rd = math.isqrt(c.numerator), math.isqrt(c.denominator)
        if rn * rn != c.numerator or rd * rd != c.denominator:
            return None
        return ExactScalar.u_power(k // 2, Fraction(rn, rd))

    # -- evaluation ---------------------------------------------------

    def evaluate(self, u0: Fraction) -> Fraction:
        """Value at a rational u0 (u0 != 0)."""
        u0 = Fraction(u0)
        num = _phorner(self.num, u0)
        den = _phorner(self.den, u0)
        if den == 0:
            raise ZeroDivisionError("scalar denominator vanishes at u0")
        return num / den

    def evaluate_sqrt(self, p: int) -> tuple[Fraction, Fraction]:
        """Value at u = sqrt(p) as (a, b) meaning a + b*sqrt(p)."""
        an, bn = _pair_eval(self.num, p)
        ad, bd = _pair_eval(self.den, p)
        norm = ad * ad - p * bd * bd
        if norm == 0:
            raise ZeroDivisionError("scalar denominator vanishes at sqrt(p)")
        return ((an * ad - p * bn * bd) / norm, (bn * ad - an * bd) / norm)

    # -- display ------------------------------------------------------

    def __repr__(self) -> str:
        return f"ExactScalar({self.pretty()})"

    def pretty(self) -> str:
        """Render as a sum of c*q^(k) and c*q^(k+1/2) terms."""
        if not self.num:
            return "0"
        mono = self.as_u_monomial()
        if mono is not None:
            return _term_pretty(mono[0], mono[1])
        if sum(1 for c in self.den if c) == 1:
            # monomial denominator: fold into negative exponents
            j = _valuation(self.den)
            scale = self.den[j]
            return _poly_pretty(self.num, shift=-j, scale=1 / scale)
        num = _poly_pretty(self.num)
        if self.den == (_F1,):
            return num
        return f"({num})/({_poly_pretty(self.den)})"


def _phorner(p: Poly, x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pair_eval(p: Poly, prime: int) -> tuple[Fraction, Fraction]:
    a = _F0
    b = _F0
    pw = _F1
    for k, c in enumerate(p):
        if c:
            if k % 2 == 0:
                a += c * pw
            else:
                b += c * pw
        if k % 2 == 1:
            pw *= prime
    return a, b


def _term_pretty(c: Fraction, k: int) -> str:
    if k == 0:
        return str(c)
    exp = Fraction(k, 2)
    e = str(exp) if exp.denominator == 1 else f"{exp.numerator}/{exp.denominator}"
    if c == 1:
        return f"q^{e}"
    if c == -1:
        return f"-q^{e}"
    return f"{c}*q^{e}"


def _poly_pretty(p: Poly, shift: int = 0, scale: Fraction = _F1) -> str:
    parts = [_term_pretty(c * scale, k + shift) for k, c in enumerate(p) if c]
    out = parts[0]
    for t in parts[1:]:
        out += " + " + t if not t.startswith("-") else " - " + t[1:]
    return out


ZERO = ExactScalar(())
ONE = ExactScalar((_F1,))
MINUS_ONE = ExactScalar((-_F1,))
