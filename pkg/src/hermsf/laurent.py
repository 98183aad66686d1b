"""Multivariate Laurent polynomials and factor-tracked rational functions.

Variables X_1..X_n stand for q**z_1..q**z_n; a monomial is its integer
exponent vector.  Rational functions are kept as a Laurent-polynomial
numerator over a multiset of binomial denominator factors, with exact
cancellation by long division.  No general multivariate gcd is ever needed:
every denominator produced in this problem domain is a product of binomials
``X^m + c``, and equality is decided by cross multiplication.

:class:`FactoredForm` is the fully multiplicative companion representation
(unit times a signed multiset of canonical binomial atoms); Gamma factors,
weight factors and zeta products live there, and convert to
:class:`FactorizedRatFunc` at module boundaries.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .scalars import ExactScalar, ONE, ZERO, MINUS_ONE

Monomial = tuple  # tuple[int, ...]


class PoleError(ZeroDivisionError):
    """A denominator factor vanished (under substitution or evaluation)."""


def mono_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_neg(a: Monomial) -> Monomial:
    return tuple(-x for x in a)


def mono_scale(a: Monomial, k: int) -> Monomial:
    return tuple(k * x for x in a)


def grlex_key(m: Monomial):
    return (sum(m), m)


def mono_is_positive(m: Monomial) -> bool:
    """m > 0 in graded-lex order (ties by lex); the zero vector is not positive."""
    s = sum(m)
    if s != 0:
        return s > 0
    for x in m:
        if x:
            return x > 0
    return False


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError("monomial length does not match nvars")
                if c:
                    clean[m] = c
        self.terms = clean

    # -- constructors --

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars)

    @staticmethod
    def constant(nvars: int, c: ExactScalar) -> "LaurentPoly":
        return LaurentPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def one(nvars: int) -> "LaurentPoly":
        return LaurentPoly.constant(nvars, ONE)

    @staticmethod
    def term(nvars: int, exps: Monomial, c: ExactScalar = ONE) -> "LaurentPoly":
        return LaurentPoly(nvars, {tuple(exps): c})

    @staticmethod
    def variable(nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * nvars
        exps[i] = power
        return LaurentPoly.term(nvars, tuple(exps))

    # -- predicates --

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: ONE}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_single_term(self):
        """Return (exps, coeff) if exactly one term, else None."""
        if len(self.terms) == 1:
            return next(iter(self.terms.items()))
        return None

    # -- arithmetic --

    def _check(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        r = object.__new__(LaurentPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    def __neg__(self) -> "LaurentPoly":
        r = object.__new__(LaurentPoly)
        r.nvars = self.nvars
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_add(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        r = object.__new__(LaurentPoly)
        r.nvars = self.nvars
        r.terms = out
        return r

    def mul_term(self, exps: Monomial, coeff: ExactScalar) -> "LaurentPoly":
        if not coeff:
            return LaurentPoly.zero(self.nvars)
        r = object.__new__(LaurentPoly)
        r.nvars = self.nvars
        r.terms = {mono_add(m, exps): c * coeff for m, c in self.terms.items()}
        return r

    def mul_scalar(self, coeff: ExactScalar) -> "LaurentPoly":
        return self.mul_term((0,) * self.nvars, coeff)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            single = self.is_single_term()
            if single is None:
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            m, c = single
            return LaurentPoly.term(self.nvars, mono_scale(m, k), c ** k)
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries --

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def min_exps(self) -> Monomial:
        if not self.terms:
            return (0,) * self.nvars
        cols = zip(*self.terms.keys())
        return tuple(min(col) for col in cols)

    def evaluate(self, u0: Fraction, xs) -> Fraction:
        u0 = Fraction(u0)
        xs = [Fraction(x) for x in xs]
        if len(xs) != self.nvars:
            raise ValueError("point length does not match nvars")
        if any(x == 0 for x in xs):
            raise ValueError("evaluation point must have nonzero coordinates")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c.evaluate(u0)
            for x, e in zip(xs, m):
                v *= x ** e
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"X{i + 1}^{e}" for i, e in enumerate(m) if e
            ) or "1"
            bits.append(f"({c.pretty()})*{mono}")
        return "LaurentPoly(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# Binomial factors


@dataclass(frozen=True)
class BinomialFactor:
    """A binomial ``coeff_a * X^exps + coeff_b`` with coeff_a nonzero.

    Canonical atoms (as stored in denominators) have coeff_a == 1, exps
    graded-lex positive, coeff_b nonzero, and are not a difference of squares.
    """

    nvars: int
    exps: Monomial
    coeff_a: ExactScalar
    coeff_b: ExactScalar

    def to_poly(self) -> LaurentPoly:
        terms = {}
        if self.coeff_a:
            terms[self.exps] = self.coeff_a
        zero = (0,) * self.nvars
        if self.coeff_b:
            terms[zero] = terms.get(zero, ZERO) + self.coeff_b
        return LaurentPoly(self.nvars, terms)

    def evaluate(self, u0: Fraction, xs) -> Fraction:
        return self.to_poly().evaluate(u0, xs)


def binomial(nvars: int, exps, coeff_a=ONE, coeff_b=MINUS_ONE) -> BinomialFactor:
    if not coeff_a:
        raise ValueError("coeff_a must be nonzero")
    return BinomialFactor(nvars, tuple(exps), coeff_a, coeff_b)


def canonize_binomial(f: BinomialFactor):
    """Rewrite f as unit * product of canonical atoms.

    Returns (unit_coeff, unit_exps, atoms) where atoms is a list of canonical
    BinomialFactor (coeff_a == 1, positive exps, fully split differences of
    squares).  If f is a single term the atom list is empty.
    """
    n = f.nvars
    zero = (0,) * n
    if not f.coeff_b:
        return f.coeff_a, f.exps, []
    if f.exps == zero:
        return f.coeff_a + f.coeff_b, zero, []
    if mono_is_positive(f.exps):
        unit_c, unit_m = f.coeff_a, zero
        atom = BinomialFactor(n, f.exps, ONE, f.coeff_b / f.coeff_a)
    else:
        # c_a X^m + c_b = c_b X^m (X^-m + c_a/c_b)
        unit_c, unit_m = f.coeff_b, f.exps
        atom = BinomialFactor(n, mono_neg(f.exps), ONE, f.coeff_a / f.coeff_b)
    atoms = []
    stack = [atom]
    while stack:
        a = stack.pop()
        root = (-a.coeff_b).sqrt()
        if root is not None and all(e % 2 == 0 for e in a.exps) and any(a.exps):
            half = tuple(e // 2 for e in a.exps)
            stack.append(BinomialFactor(n, half, ONE, -root))
            stack.append(BinomialFactor(n, half, ONE, root))
        else:
            atoms.append(a)
    atoms.sort(key=lambda b: (grlex_key(b.exps), b.coeff_b.num, b.coeff_b.den))
    return unit_c, unit_m, atoms


# ---------------------------------------------------------------------------
# Exact division by a binomial


def exact_divide(p: LaurentPoly, f: BinomialFactor):
    """Divide p by the binomial f exactly; return the quotient or None.

    Division is multivariate long division under graded-lex order after
    shifting both operands to true polynomials; a nonzero remainder is
    detected as soon as a leading term fails to divide.
    """
    if not f.coeff_a:
        raise ValueError("division by zero binomial")
    n = p.nvars
    if f.nvars != n:
        raise ValueError("nvars mismatch")
    if p.is_zero():
        return LaurentPoly.zero(n)
    if not f.coeff_b:
        # pure term: always divides
        return p.mul_term(mono_neg(f.exps), f.coeff_a.inverse())
    unit_c, unit_m, atoms = canonize_binomial(f)
    if not atoms:  # collapsed to a scalar times monomial
        if not unit_c:
            raise ValueError("division by zero binomial")
        return p.mul_term(mono_neg(unit_m), unit_c.inverse())
    q = p
    for atom in atoms:
        q = _divide_by_atom(q, atom)
        if q is None:
            return None
    return q.mul_term(mono_neg(unit_m), unit_c.inverse())


def _divide_by_atom(p: LaurentPoly, atom: BinomialFactor):
    n = p.nvars
    m = atom.exps
    c = atom.coeff_b
    sp = p.min_exps()
    mf = tuple(min(e, 0) for e in m)
    lead = tuple(a - b for a, b in zip(m, mf))   # leading exps of shifted divisor
    trail = mono_neg(mf)                          # trailing exps (coeff c)
    work = {tuple(a - b for a, b in zip(t, sp)): v for t, v in p.terms.items()}
    heap = [(-s, tuple(-x for x in t)) for t, v in work.items() for s in (sum(t),)]
    heapq.heapify(heap)
    quot: dict = {}
    while work:
        while heap:
            s, negt = heap[0]
            t = tuple(-x for x in negt)
            if t in work:
                break
            heapq.heappop(heap)
        else:
            break
        coeff = work.pop(t)
        heapq.heappop(heap)
        qm = tuple(a - b for a, b in zip(t, lead))
        if any(x < 0 for x in qm):
            return None
        quot[qm] = coeff
        # subtract coeff * X^qm * (X^lead + c X^trail): X^lead part cancels t
        tt = mono_add(qm, trail)
        prev = work.get(tt)
        nv = -(coeff * c) if prev is None else prev - coeff * c
        if nv:
            if prev is None:
                heapq.heappush(heap, (-sum(tt), tuple(-x for x in tt)))
            work[tt] = nv
        elif prev is not None:
            del work[tt]
    shift = tuple(a - b for a, b in zip(sp, mf))
    return LaurentPoly(n, {mono_add(t, shift): v for t, v in quot.items()})


# ---------------------------------------------------------------------------
# Monomial substitutions


@dataclass(frozen=True)
class MonomialMap:
    """Per-variable image X_i -> sign_i * u**upow_i * prod_j Y_j**rows[i][j].

    Signs realize q**(pi*sqrt(-1)/log q) = -1 exactly, keeping all arithmetic
    over the rationals.
    """

    nvars_in: int
    nvars_out: int
    signs: tuple
    upows: tuple
    rows: tuple  # tuple of Monomial, one per input variable

    def __post_init__(self):
        if len(self.signs) != self.nvars_in or len(self.upows) != self.nvars_in:
            raise ValueError("map component count mismatch")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        for r in self.rows:
            if len(r) != self.nvars_out:
                raise ValueError("row length mismatch")

    @staticmethod
    def identity(nvars: int) -> "MonomialMap":
        rows = tuple(
            tuple(1 if i == j else 0 for j in range(nvars)) for i in range(nvars)
        )
        return MonomialMap(nvars, nvars, (1,) * nvars, (0,) * nvars, rows)

    def image_of_monomial(self, m: Monomial):
        """Return (coeff, exps) with X^m mapping to coeff * Y^exps."""
        sign = 1
        upow = 0
        out = [0] * self.nvars_out
        for i, e in enumerate(m):
            if not e:
                continue
            if self.signs[i] == -1 and e % 2:
                sign = -sign
            upow += self.upows[i] * e
            row = self.rows[i]
            for j in range(self.nvars_out):
                out[j] += e * row[j]
        return ExactScalar.u_power(upow, Fraction(sign)), tuple(out)


def substitute_poly(p: LaurentPoly, mp: MonomialMap) -> LaurentPoly:
    if p.nvars != mp.nvars_in:
        raise ValueError("nvars mismatch")
    out = LaurentPoly.zero(mp.nvars_out)
    acc: dict = {}
    for m, c in p.terms.items():
        coeff, exps = mp.image_of_monomial(m)
        v = c * coeff
        s = acc.get(exps)
        s = v if s is None else s + v
        if s:
            acc[exps] = s
        elif exps in acc:
            del acc[exps]
    out.terms = acc
    return out


# ---------------------------------------------------------------------------
# Factor-tracked rational functions


class FactorizedRatFunc:
    """num / prod(atom**mult); maximal cancellation performed on construction."""

    __slots__ = ("nvars", "num", "den")

    def __init__(self, num: LaurentPoly, den=(), cancel: bool = True):
        self.nvars = num.nvars
        merged: dict = {}
        adjust = ONE
        adjust_m = (0,) * self.nvars
        for entry in den:
            f, mult = entry if isinstance(entry, tuple) else (entry, 1)
            if mult == 0:
                continue
            if f.nvars != self.nvars:
                raise ValueError("nvars mismatch in denominator factor")
            unit_c, unit_m, atoms = canonize_binomial(f)
            if not unit_c:
                raise ZeroDivisionError("zero denominator factor")
            if not atoms and not any(unit_m):
                adjust = adjust * unit_c ** mult
                adjust_m = mono_add(adjust_m, (0,) * self.nvars)
                continue
            adjust = adjust * unit_c ** mult
            adjust_m = mono_add(adjust_m, mono_scale(unit_m, mult))
            for a in atoms:
                merged[a] = merged.get(a, 0) + mult
        if not adjust:
            raise ZeroDivisionError("zero denominator factor")
        num = num.mul_term(mono_neg(adjust_m), adjust.inverse())
        if num.is_zero():
            merged = {}
        elif cancel and merged:
            for atom in list(merged.keys()):
                while merged.get(atom, 0) > 0:
                    q = _divide_by_atom(num, atom)
                    if q is None:
                        break
                    num = q
                    merged[atom] -= 1
                if merged.get(atom) == 0:
                    del merged[atom]
        self.num = num
        self.den = tuple(
            sorted(
                merged.items(),
                key=lambda kv: (grlex_key(kv[0].exps), kv[0].coeff_b.num, kv[0].coeff_b.den),
            )
        )

    # -- constructors --

    @staticmethod
    def from_poly(p: LaurentPoly) -> "FactorizedRatFunc":
        return FactorizedRatFunc(p)

    @staticmethod
    def from_scalar(nvars: int, c: ExactScalar) -> "FactorizedRatFunc":
        return FactorizedRatFunc(LaurentPoly.constant(nvars, c))

    @staticmethod
    def one(nvars: int) -> "FactorizedRatFunc":
        return FactorizedRatFunc(LaurentPoly.one(nvars))

    @staticmethod
    def zero(nvars: int) -> "FactorizedRatFunc":
        return FactorizedRatFunc(LaurentPoly.zero(nvars))

    # -- predicates --

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.den

    def __bool__(self):
        return not self.is_zero()

    # -- helpers --

    def den_poly(self) -> LaurentPoly:
        p = LaurentPoly.one(self.nvars)
        for f, mult in self.den:
            fp = f.to_poly()
            for _ in range(mult):
                p = p * fp
        return p

    def _check(self, other: "FactorizedRatFunc"):
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    # -- ring operations --

    def __add__(self, other: "FactorizedRatFunc") -> "FactorizedRatFunc":
        self._check(other)
        da = dict(self.den)
        db = dict(other.den)
        lcm = dict(da)
        for f, m in db.items():
            lcm[f] = max(lcm.get(f, 0), m)
        na = self.num
        for f, m in lcm.items():
            extra = m - da.get(f, 0)
            for _ in range(extra):
                na = na * f.to_poly()
        nb = other.num
        for f, m in lcm.items():
            extra = m - db.get(f, 0)
            for _ in range(extra):
                nb = nb * f.to_poly()
        return FactorizedRatFunc(na + nb, tuple(lcm.items()))

    def __neg__(self) -> "FactorizedRatFunc":
        r = object.__new__(FactorizedRatFunc)
        r.nvars = self.nvars
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other: "FactorizedRatFunc") -> "FactorizedRatFunc":
        return self + (-other)

    def __mul__(self, other: "FactorizedRatFunc") -> "FactorizedRatFunc":
        self._check(other)
        merged = dict(self.den)
        for f, m in other.den:
            merged[f] = merged.get(f, 0) + m
        return FactorizedRatFunc(self.num * other.num, tuple(merged.items()))

    def mul_poly(self, p: LaurentPoly) -> "FactorizedRatFunc":
        return FactorizedRatFunc(self.num * p, self.den)

    def mul_scalar(self, c: ExactScalar) -> "FactorizedRatFunc":
        return FactorizedRatFunc(self.num.mul_scalar(c), self.den, cancel=False)

    def inverse(self) -> "FactorizedRatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        num = LaurentPoly.one(self.nvars)
        for f, m in self.den:
            fp = f.to_poly()
            for _ in range(m):
                num = num * fp
        single = self.num.is_single_term()
        if single is not None:
            m, c = single
            return FactorizedRatFunc(num.mul_term(mono_neg(m), c.inverse()))
        terms = self.num.sorted_terms()
        if len(terms) == 2:
            (m1, c1), (m2, c2) = terms
            rel = tuple(a - b for a, b in zip(m2, m1))
            fac = BinomialFactor(self.nvars, rel, c2, c1)
            return FactorizedRatFunc(num.mul_term(mono_neg(m1), ONE), [(fac, 1)])
        raise ValueError(
            "cannot invert: numerator has more than two terms and is not "
            "a tracked binomial product"
        )

    def __truediv__(self, other: "FactorizedRatFunc") -> "FactorizedRatFunc":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        try:
            return self * other.inverse()
        except ValueError:
            pass
        # last resort: exact polynomial division of cross products
        p = self.num
        for f, m in other.den:
            fp = f.to_poly()
            for _ in range(m):
                p = p * fp
        q = _general_exact_divide(p, other.num)
        if q is None:
            raise ValueError("quotient is not a tracked rational function")
        return FactorizedRatFunc(q, self.den)

    def __pow__(self, k: int) -> "FactorizedRatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        result = FactorizedRatFunc.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons --

    def equals(self, other: "FactorizedRatFunc") -> bool:
        """Exact equality as rational functions (cross multiplication)."""
        self._check(other)
        da = dict(self.den)
        db = dict(other.den)
        common = {f: min(m, db.get(f, 0)) for f, m in da.items() if f in db}
        na = self.num
        for f, m in db.items():
            extra = m - common.get(f, 0)
            for _ in range(extra):
                na = na * f.to_poly()
        nb = other.num
        for f, m in da.items():
            extra = m - common.get(f, 0)
            for _ in range(extra):
                nb = nb * f.to_poly()
        return na == nb

    def __eq__(self, other):
        return isinstance(other, FactorizedRatFunc) and self.equals(other)

    def __hash__(self):
        raise TypeError("FactorizedRatFunc is not hashable")

    # -- substitution / evaluation --

    def substitute(self, mp: MonomialMap) -> "FactorizedRatFunc":
        num = substitute_poly(self.num, mp)
        den = []
        for f, m in self.den:
            coeff, exps = mp.image_of_monomial(f.exps)
            img = BinomialFactor(mp.nvars_out, exps, f.coeff_a * coeff, f.coeff_b)
            if not any(exps):
                c = img.coeff_a + img.coeff_b
                if not c:
                    raise PoleError(
                        f"pole under specialization: factor {f} maps to zero"
                    )
                num = num.mul_scalar((c ** m).inverse())
            else:
                den.append((img, m))
        return FactorizedRatFunc(num, den)

    def eval_numeric(self, u0: Fraction, xs) -> Fraction:
        u0 = Fraction(u0)
        if u0 == 0:
            raise ValueError("u0 must be nonzero")
        total = self.num.evaluate(u0, xs)
        for f, m in self.den:
            v = f.evaluate(u0, xs)
            if v == 0:
                raise PoleError(f"pole at point: factor {f} vanishes")
            total /= v ** m
        return total

    def __repr__(self):
        if not self.den:
            return f"FactorizedRatFunc({self.num!r})"
        return f"FactorizedRatFunc({self.num!r} / {self.den!r})"


def _general_exact_divide(p: LaurentPoly, d: LaurentPoly):
    """Exact division of p by an arbitrary nonzero Laurent polynomial d."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    single = d.is_single_term()
    if single is not None:
        m, c = single
        return p.mul_term(mono_neg(m), c.inverse())
    terms = d.sorted_terms()
    if len(terms) == 2:
        (m1, c1), (m2, c2) = terms
        rel = tuple(a - b for a, b in zip(m2, m1))
        q = exact_divide(p, BinomialFactor(p.nvars, rel, c2, c1))
        if q is None:
            return None
        return q.mul_term(mono_neg(m1), ONE)
    # full multivariate reduction by a single divisor under graded-lex
    n = p.nvars
    sp = p.min_exps()
    sd = d.min_exps()
    work = {tuple(a - b for a, b in zip(t, sp)): v for t, v in p.terms.items()}
    divisor = {tuple(a - b for a, b in zip(t, sd)): v for t, v in d.terms.items()}
    dlead = max(divisor, key=grlex_key)
    dlc = divisor[dlead]
    quot: dict = {}
    while work:
        t = max(work, key=grlex_key)
        coeff = work.pop(t)
        qm = tuple(a - b for a, b in zip(t, dlead))
        if any(x < 0 for x in qm):
            return None
        qc = coeff / dlc
        quot[qm] = qc
        for dm, dc in divisor.items():
            if dm == dlead:
                continue
            tt = mono_add(qm, dm)
            prev = work.get(tt)
            nv = -(qc * dc) if prev is None else prev - qc * dc
            if nv:
                work[tt] = nv
            elif prev is not None:
                del work[tt]
    shift = tuple(a - b for a, b in zip(sp, sd))
    return LaurentPoly(n, {mono_add(t, shift): v for t, v in quot.items()})


# ---------------------------------------------------------------------------
# Fully factored products (unit * prod atoms**k)


class FactoredForm:
    """A nonzero rational function kept as unit * X^exps * prod atom**k.

    Products, inverses, Weyl actions and monomial substitutions stay in this
    form, so cocycle checks over large Weyl groups cost dictionary merges
    instead of polynomial expansion.
    """

    __slots__ = ("nvars", "unit", "unit_exps", "factors")

    def __init__(self, nvars: int, unit: ExactScalar = ONE, unit_exps=None, factors=None):
        if not unit:
            raise ValueError("FactoredForm represents nonzero functions only")
        self.nvars = nvars
        self.unit = unit
        self.unit_exps = tuple(unit_exps) if unit_exps is not None else (0,) * nvars
        self.factors = dict(factors) if factors else {}

    @staticmethod
    def one(nvars: int) -> "FactoredForm":
        return FactoredForm(nvars)

    @staticmethod
    def from_scalar(nvars: int, c: ExactScalar) -> "FactoredForm":
        return FactoredForm(nvars, unit=c)

    @staticmethod
    def from_monomial(nvars: int, exps, c: ExactScalar = ONE) -> "FactoredForm":
        return FactoredForm(nvars, unit=c, unit_exps=tuple(exps))

    @staticmethod
    def from_binomial(f: BinomialFactor, power: int = 1) -> "FactoredForm":
        unit_c, unit_m, atoms = canonize_binomial(f)
        if not unit_c:
            raise ValueError("zero binomial in FactoredForm")
        factors = {}
        for a in atoms:
            factors[a] = factors.get(a, 0) + power
        return FactoredForm(
            f.nvars, unit=unit_c ** power, unit_exps=mono_scale(unit_m, power), factors=factors
        )

    def __mul__(self, other: "FactoredForm") -> "FactoredForm":
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")
        factors = dict(self.factors)
        for f, k in other.factors.items():
            nk = factors.get(f, 0) + k
            if nk:
                factors[f] = nk
            elif f in factors:
                del factors[f]
        return FactoredForm(
            self.nvars,
            unit=self.unit * other.unit,
            unit_exps=mono_add(self.unit_exps, other.unit_exps),
            factors=factors,
        )

    def inverse(self) -> "FactoredForm":
        return FactoredForm(
            self.nvars,
            unit=self.unit.inverse(),
            unit_exps=mono_neg(self.unit_exps),
            factors={f: -k for f, k in self.factors.items()},
        )

    def __truediv__(self, other: "FactoredForm") -> "FactoredForm":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FactoredForm":
        return FactoredForm(
            self.nvars,
            unit=self.unit ** k,
            unit_exps=mono_scale(self.unit_exps, k),
            factors={f: m * k for f, m in self.factors.items()} if k else {},
        )

    def is_one(self) -> bool:
        return self.unit.is_one() and not any(self.unit_exps) and not self.factors

    def structurally_equal(self, other: "FactoredForm") -> bool:
        return (
            self.nvars == other.nvars
            and self.unit == other.unit
            and self.unit_exps == other.unit_exps
            and self.factors == other.factors
        )

    def equals(self, other: "FactoredForm") -> bool:
        """Equality as rational functions; fast multiset path, expansion fallback."""
        if self.structurally_equal(other):
            return True
        ratio = self / other
        if ratio.is_one():
            return True
        return ratio.expand().equals(FactorizedRatFunc.one(self.nvars))

    def substitute(self, mp: MonomialMap) -> "FactoredForm":
        coeff, exps = mp.image_of_monomial(self.unit_exps)
        out = FactoredForm(mp.nvars_out, unit=self.unit * coeff, unit_exps=exps)
        for f, k in self.factors.items():
            c, e = mp.image_of_monomial(f.exps)
            img = BinomialFactor(mp.nvars_out, e, f.coeff_a * c, f.coeff_b)
            if not any(e):
                const = img.coeff_a + img.coeff_b
                if not const:
                    if k < 0:
                        raise PoleError(
                            f"pole under specialization: factor {f} maps to zero"
                        )
                    raise ValueError(
                        f"factor {f} maps to zero; image is the zero function"
                    )
                out = out * FactoredForm.from_scalar(mp.nvars_out, const ** k)
            else:
                out = out * FactoredForm.from_binomial(img, k)
        return out

    def expand(self) -> FactorizedRatFunc:
        num = LaurentPoly.term(self.nvars, self.unit_exps, self.unit)
        den = []
        for f, k in self.factors.items():
            if k > 0:
                fp = f.to_poly()
                for _ in range(k):
                    num = num * fp
            else:
                den.append((f, -k))
        return FactorizedRatFunc(num, den)

    def eval_numeric(self, u0: Fraction, xs) -> Fraction:
        u0 = Fraction(u0)
        xs = [Fraction(x) for x in xs]
        total = self.unit.evaluate(u0)
        for x, e in zip(xs, self.unit_exps):
            total *= x ** e
        for f, k in self.factors.items():
            v = f.evaluate(u0, xs)
            if v == 0:
                if k < 0:
                    raise PoleError(f"pole at point: factor {f} vanishes")
                return Fraction(0)
            total *= v ** k
        return total

    def __repr__(self):
        return (
            f"FactoredForm(unit={self.unit.pretty()}, exps={self.unit_exps}, "
            f"factors={self.factors!r})"
        )
