import random
from fractions import Fraction

import pytest

from hermsf.oracle import (
    BudgetError,
    CyclotomicInt,
    OracleConfig,
    QuotientRingElem,
    check_siegel_oracle,
    check_spherical_oracle,
    enumerate_u11_cells,
    shell_character_sum,
    siegel_n1_by_charsum,
    smallest_nonresidue,
    spherical_n1_by_integration,
)


def test_config_validation():
    cfg = OracleConfig(3, 2)
    assert cfg.epsilon == 2
    assert OracleConfig(5, 1).epsilon in (2, 3)
    with pytest.raises(ValueError):
        OracleConfig(2, 2)
    with pytest.raises(ValueError):
        OracleConfig(9, 2)
    with pytest.raises(ValueError):
        OracleConfig(3, 0)
    with pytest.raises(ValueError):
        OracleConfig(3, 2, epsilon=1)  # 1 is a square


def test_quotient_ring():
    cfg = OracleConfig(3, 3)
    rng = random.Random(5)
    for _ in range(200):
        v1, v2 = rng.randint(0, 2), rng.randint(0, 2)
        x = QuotientRingElem(rng.randrange(1, 27, 3) * 3 ** v1 % 27 or 3 ** v1,
                             0, cfg)
        # build unit * pi^v elements explicitly
        ua = rng.choice([1, 2, 4, 5, 7, 8])
        ub = rng.randint(0, 26)
        x = QuotientRingElem(ua * 3 ** v1, ub * 3 ** v1, cfg)
        y = QuotientRingElem(ua, ub * 3, cfg)  # valuation 0 (a-part unit)
        assert y.valuation() == 0
        if x.valuation() + y.valuation() < cfg.N:
            assert (x * y).valuation() == x.valuation() + y.valuation()
        nx, ny = x.norm(), y.norm()
        assert (x * y).norm() == nx * ny % 27
    # conjugation
    z = QuotientRingElem(4, 5, cfg)
    assert z.conj().a == 4 and z.conj().b == 22
    assert (z * z.conj()).b == 0  # norm is rational
    assert (z * z.conj()).a == z.norm()


def test_nonresidue():
    assert smallest_nonresidue(3) == 2
    assert smallest_nonresidue(5) == 2
    assert smallest_nonresidue(7) == 3


def test_cell_masses():
    cfg = OracleConfig(3, 2)
    cells = list(enumerate_u11_cells(cfg))
    assert len(cells) == 2 * 3 ** 4
    assert sum(c.weight for c in cells) == 1
    m1 = sum(c.weight for c in cells if c.chart == 1)
    m2 = sum(c.weight for c in cells if c.chart == 2)
    assert m1 == Fraction(3, 4)  # 1/(1+q^-1) at q=3
    assert m2 == Fraction(1, 4)  # q^-1/(1+q^-1) at q=3
    assert all(c.weight > 0 for c in cells)


def test_budget(monkeypatch):
    monkeypatch.setenv("HS_BUDGET", "1000")
    with pytest.raises(BudgetError, match="largest admissible N"):
        list(enumerate_u11_cells(OracleConfig(3, 4)))


def test_precision_guards():
    cfg = OracleConfig(3, 2)
    with pytest.raises(ValueError, match="precision insufficient"):
        spherical_n1_by_integration(cfg, 2, 0)  # needs N >= 4
    with pytest.raises(ValueError):
        spherical_n1_by_integration(cfg, 1, 1)  # 2e > lam


def test_spherical_oracle_small():
    # lam=0: the closed form is the constant 1; oracle must agree at q=p
    for p in (3, 5):
        cfg = OracleConfig(p, 2)
        got = spherical_n1_by_integration(cfg, 0, 0)
        assert got.value.eval_numeric(Fraction(1), [Fraction(1)]) == 1  # all shells sum
        assert check_spherical_oracle(cfg, 0, 0)
    # lam=1 and lam=2 against the closed forms
    assert check_spherical_oracle(OracleConfig(3, 3), 1, 0)
    assert check_spherical_oracle(OracleConfig(3, 2), 2, 1)


def test_spherical_oracle_lift_independence():
    a = spherical_n1_by_integration(OracleConfig(3, 3), 1, 0)
    b = spherical_n1_by_integration(OracleConfig(3, 4), 1, 0)
    assert a.value.equals(b.value)


def test_cyclotomic():
    # sum over all residues of a nontrivial character vanishes
    p, m = 3, 2
    total = CyclotomicInt(p, m)
    for a in range(p ** m):
        total = total + CyclotomicInt.root_power(p, m, a)
    assert total.as_integer() == 0
    # multiplication: x^4 * x^5 = x^9 = 1 in level p^2 = 9
    x4 = CyclotomicInt.root_power(p, m, 4)
    x5 = CyclotomicInt.root_power(p, m, 5)
    assert (x4 * x5).as_integer() == 1
    # a nontrivial root power is not rational
    assert CyclotomicInt.root_power(p, m, 1).as_integer() is None


def test_shell_character_sums():
    # complete shells: unit counts, the boundary -p^lam, then zero
    assert shell_character_sum(3, 1, 2) == 2
    assert shell_character_sum(3, 2, 2) == 6
    assert shell_character_sum(3, 3, 2) == -9
    assert shell_character_sum(3, 4, 2) == 0
    assert shell_character_sum(5, 2, 1) == -5


def test_siegel_oracle():
    for lam in range(4):
        assert check_siegel_oracle(OracleConfig(3, 1), lam), lam
    for lam in range(3):
        assert check_siegel_oracle(OracleConfig(5, 1), lam), lam
    got = siegel_n1_by_charsum(OracleConfig(3, 1), 0)
    # 1 - q^{-s} at q=3: coefficients 1, -1
    terms = got.value.num.terms
    assert terms[(0,)].evaluate(Fraction(1)) == 1
    assert terms[(2,)].evaluate(Fraction(1)) == -1
    with pytest.raises(ValueError):
        siegel_n1_by_charsum(OracleConfig(3, 1), 4)
