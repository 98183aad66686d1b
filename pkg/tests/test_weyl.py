import random

import pytest

from hermsf.laurent import LaurentPoly
from hermsf.scalars import ExactScalar, ONE
from hermsf.weyl import (
    Root,
    WeylElem,
    act_on_poly,
    act_on_root,
    enumerate_weyl,
    inversion_set,
    long_positive_roots,
    positive_roots,
    reduced_word,
    rho_element,
    simple_reflection,
    simple_root,
    word_to_element,
)


def test_enumeration_counts():
    assert len(enumerate_weyl(1)) == 2
    assert len(enumerate_weyl(2)) == 8
    assert len(enumerate_weyl(3)) == 48
    assert enumerate_weyl(3)[0].is_identity()
    # deterministic order
    assert enumerate_weyl(2) == enumerate_weyl(2)
    with pytest.raises(ValueError):
        enumerate_weyl(7)
    with pytest.raises(ValueError):
        enumerate_weyl(0)


def test_root_counts():
    for n in range(1, 7):
        assert len(positive_roots(n)) == n * n
        assert len(long_positive_roots(n)) == n


def test_root_validation():
    with pytest.raises(ValueError):
        Root((1, 1, 1))
    with pytest.raises(ValueError):
        Root((3, 0))
    assert Root((1, -1)).kind == "short"
    assert Root((0, 2)).kind == "long"


def test_act_on_root():
    tau = simple_reflection("t", 2)
    assert act_on_root(tau, Root((0, 2))).vec == (0, -2)
    assert act_on_root(tau, Root((1, -1))).vec == (1, 1)
    ident = WeylElem.identity(2)
    for a in positive_roots(2):
        assert act_on_root(ident, a) == a
    # the pairing is preserved: <sigma(a), sigma(z)> = <a, z>, checked
    # symbolically through the monomial action
    rng = random.Random(3)
    W = enumerate_weyl(3)
    for _ in range(25):
        s = rng.choice(W)
        a = rng.choice(positive_roots(3))
        lhs = act_on_poly(s, LaurentPoly.term(3, act_on_root(s, a).vec))
        assert lhs == LaurentPoly.term(3, a.vec)


def test_inversion_sets():
    assert inversion_set(WeylElem.identity(3)) == ()
    tau = simple_reflection("t", 2)
    assert [r.vec for r in inversion_set(tau)] == [(0, 2)]
    rho = rho_element(2)
    assert sorted(r.vec for r in inversion_set(rho)) == [(0, 2), (1, 1), (2, 0)]
    # rho inverts exactly {e_i + e_j : i <= j} in general
    for n in (2, 3, 4):
        inv = {r.vec for r in inversion_set(rho_element(n))}
        expect = set()
        for i in range(n):
            for j in range(i, n):
                v = [0] * n
                v[i] += 1
                v[j] += 1
                expect.add(tuple(v))
        assert inv == expect


def test_reduced_words():
    assert reduced_word(WeylElem.identity(3)) == ()
    tau = simple_reflection("t", 3)
    assert reduced_word(tau) == ("t",)
    assert len(reduced_word(rho_element(2))) == 3
    for n in (2, 3, 4):
        for sigma in enumerate_weyl(min(n, 3)) if n <= 3 else enumerate_weyl(4)[:60]:
            w = reduced_word(sigma)
            assert word_to_element(w, sigma.n) == sigma
            assert len(w) == len(inversion_set(sigma))


def test_inversion_recursion():
    # inv(sigma) = { (suffix after k)(alpha_k) } along any reduced word
    for sigma in enumerate_weyl(3):
        w = reduced_word(sigma)
        seen = set()
        suffix = WeylElem.identity(3)
        for tag in reversed(w):
            seen.add(act_on_root(suffix, simple_root(tag, 3)).vec)
            suffix = suffix.compose(simple_reflection(tag, 3))
        assert seen == {r.vec for r in inversion_set(sigma)}


def test_group_axioms_and_action():
    rng = random.Random(11)
    W = enumerate_weyl(3)
    f = LaurentPoly(3, {(1, 2, -1): ExactScalar.u_power(1), (0, 1, 0): ONE})
    for _ in range(30):
        s1, s2, s3 = (rng.choice(W) for _ in range(3))
        assert s1.compose(s2).compose(s3) == s1.compose(s2.compose(s3))
        assert s1.compose(s1.inverse()).is_identity()
        # substitution action composes contravariantly
        assert act_on_poly(s1, act_on_poly(s2, f)) == act_on_poly(s2.compose(s1), f)
    tau = simple_reflection("t", 2)
    assert act_on_poly(tau, LaurentPoly.variable(2, 1)) == LaurentPoly.variable(2, 1, -1)
    s1 = simple_reflection("s1", 2)
    assert act_on_poly(s1, LaurentPoly(2, {(1, -1): ONE})) == LaurentPoly(2, {(-1, 1): ONE})
    assert act_on_poly(tau, LaurentPoly.one(2)) == LaurentPoly.one(2)


def test_serialization():
    s = WeylElem((2, 1), (1, -1))
    assert s.to_json() == {"perm": [2, 1], "signs": [1, -1]}
    assert word_to_element(["s1", "t"], 2) == simple_reflection("s1", 2).compose(
        simple_reflection("t", 2)
    )
