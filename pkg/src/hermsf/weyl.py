"""Type C_n root system and its Weyl group as signed permutations.

W = S_n x (C_2)^n acts on the spectral variables by
(sigma z)_i = signs_i * z_{perm_i}.  Positive roots are e_i +/- e_j (i < j,
short) and 2 e_i (long); simple reflections are the adjacent transpositions
s1..s{n-1} and the last-sign flip t.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .laurent import (
    BinomialFactor,
    FactoredForm,
    FactorizedRatFunc,
    LaurentPoly,
)


@dataclass(frozen=True)
class Root:
    vec: tuple
    """Exponent vector: +-e_i +- e_j (short) or +-2 e_i (long)."""

    def __post_init__(self):
        v = self.vec
        nz = [(i, x) for i, x in enumerate(v) if x]
        ok = (len(nz) == 1 and abs(nz[0][1]) == 2) or (
            len(nz) == 2 and abs(nz[0][1]) == 1 and abs(nz[1][1]) == 1
        )
        if not ok:
            raise ValueError(f"not a C_n root vector: {v}")

    @property
    def kind(self) -> str:
        return "long" if any(abs(x) == 2 for x in self.vec) else "short"

    def is_negative(self) -> bool:
        for x in self.vec:
            if x:
                return x < 0
        raise AssertionError("zero vector is not a root")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            out.append(Root(tuple(v)))
            v = [0] * n
            v[i], v[j] = 1, 1
            out.append(Root(tuple(v)))
    for i in range(n):
        v = [0] * n
        v[i] = 2
        out.append(Root(tuple(v)))
    return tuple(out)


def short_positive_roots(n: int) -> tuple:
    return tuple(r for r in positive_roots(n) if r.kind == "short")


def long_positive_roots(n: int) -> tuple:
    return tuple(r for r in positive_roots(n) if r.kind == "long")


@dataclass(frozen=True)
class WeylElem:
    perm: tuple   # 1-based images: (sigma z)_i = signs_i * z_{perm_i}
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm is not a permutation of 1..n")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a vector of +-1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "WeylElem":
        return WeylElem(tuple(range(1, n + 1)), (1,) * n)

    def is_identity(self) -> bool:
        return self == WeylElem.identity(self.n)

    def compose(self, other: "WeylElem") -> "WeylElem":
        """self o other: other acts first, (self o other)(z) = self(other(z))."""
        p1, s1 = other.perm, other.signs
        p2, s2 = self.perm, self.signs
        perm = tuple(p1[p2[i] - 1] for i in range(self.n))
        signs = tuple(s2[i] * s1[p2[i] - 1] for i in range(self.n))
        return WeylElem(perm, signs)

    def inverse(self) -> "WeylElem":
        n = self.n
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i] - 1] = i + 1
            signs[self.perm[i] - 1] = self.signs[i]
        return WeylElem(tuple(perm), tuple(signs))

    def act_on_exps(self, m: tuple) -> tuple:
        """Image of a monomial exponent vector under z -> sigma(z).

        q^<m, sigma z> = q^<m', z> with m'[perm_i - 1] = signs_i * m[i].
        """
        out = [0] * self.n
        for i, e in enumerate(m):
            if e:
                out[self.perm[i] - 1] = self.signs[i] * e
        return tuple(out)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "signs": list(self.signs)}


def enumerate_weyl(n: int):
    """All 2^n n! elements, identity first, lexicographic (perm, signs)."""
    if not 1 <= n <= 6:
        raise ValueError("enumerate_weyl supports 1 <= n <= 6")
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(WeylElem(perm, signs))
    return out


# ---------------------------------------------------------------------------
# Simple reflections; words are sequences of tags "s1".."s{n-1}", "t",
# multiplied right-to-left (the last tag acts on z first).


def simple_reflection_tags(n: int) -> tuple:
    return tuple(f"s{i}" for i in range(1, n)) + ("t",)


def simple_reflection(tag: str, n: int) -> WeylElem:
    if tag == "t":
        signs = [1] * n
        signs[n - 1] = -1
        return WeylElem(tuple(range(1, n + 1)), tuple(signs))
    if tag.startswith("s"):
        i = int(tag[1:])
        if 1 <= i <= n - 1:
            perm = list(range(1, n + 1))
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            return WeylElem(tuple(perm), (1,) * n)
    raise ValueError(f"unknown simple reflection tag {tag!r} for n={n}")

def simple_root(tag: str, n: int) -> Root:
    if tag == "t":
        v = [0] * n
        v[n - 1] = 2
        return Root(tuple(v))
    i = int(tag[1:])
    v = [0] * n
    v[i - 1], v[i] = 1, -1
    return Root(tuple(v))


def word_to_element(word, n: int) -> WeylElem:
    """Product of tags, rightmost applied first."""
    sigma = WeylElem.identity(n)
    for tag in word:
        sigma = sigma.compose(simple_reflection(tag, n))
    return sigma


def rho_element(n: int) -> WeylElem:
    """z -> (-z_n, ..., -z_1)."""
    return WeylElem(tuple(range(n, 0, -1)), (-1,) * n)


def longest_sign_flip(n: int) -> WeylElem:
    """z -> -z."""
    return WeylElem(tuple(range(1, n + 1)), (-1,) * n)


# ---------------------------------------------------------------------------
# Root action, inversion sets, reduced words


def act_on_root(sigma: WeylElem, alpha: Root) -> Root:
    """The root beta with <beta, z> = <alpha, sigma^{-1}(z)> identically."""
    v = alpha.vec
    out = tuple(sigma.signs[j] * v[sigma.perm[j] - 1] for j in range(sigma.n))
    return Root(out)


def inversion_set(sigma: WeylElem) -> tuple:
    return tuple(
        a for a in positive_roots(sigma.n) if act_on_root(sigma, a).is_negative()
    )


def length(sigma: WeylElem) -> int:
    return len(inversion_set(sigma))


def reduced_word(sigma: WeylElem) -> tuple:
    """Reduced expression; the product of the returned tags (rightmost first)
    equals sigma.  Greedy descent: repeatedly strip a simple reflection whose
    simple root lies in the inversion set."""
    n = sigma.n
    tags = simple_reflection_tags(n)
    collected = []
    cur = sigma
    while not cur.is_identity():
        for tag in tags:
            if act_on_root(cur, simple_root(tag, n)).is_negative():
                collected.append(tag)
                cur = cur.compose(simple_reflection(tag, n))
                break
        else:
            raise AssertionError("non-identity element with empty descent set")
    return tuple(reversed(collected))


# ---------------------------------------------------------------------------
# Action on polynomials and rational functions (z -> sigma(z) substitution)


def act_on_poly(sigma: WeylElem, f):
    """Replace z by sigma(z) in f (LaurentPoly / FactorizedRatFunc / FactoredForm).

    This substitution action satisfies act(s1, act(s2, f)) = act(s2 o s1, f).
    """
    if isinstance(f, LaurentPoly):
        return LaurentPoly(
            f.nvars, {sigma.act_on_exps(m): c for m, c in f.terms.items()}
        )
    if isinstance(f, FactorizedRatFunc):
        num = act_on_poly(sigma, f.num)
        den = []
        for fac, mult in f.den:
            img = BinomialFactor(
                fac.nvars, sigma.act_on_exps(fac.exps), fac.coeff_a, fac.coeff_b
            )
            den.append((img, mult))
        # the action is a ring automorphism, so maximal cancellation is preserved
        return FactorizedRatFunc(num, den, cancel=False)
    if isinstance(f, FactoredForm):
        out = FactoredForm(
            f.nvars, unit=f.unit, unit_exps=sigma.act_on_exps(f.unit_exps)
        )
        for fac, k in f.factors.items():
            img = BinomialFactor(
                fac.nvars, sigma.act_on_exps(fac.exps), fac.coeff_a, fac.coeff_b
            )
            out = out * FactoredForm.from_binomial(img, k)
        return out
    raise TypeError(f"cannot act on {type(f).__name__}")
