"""Acceptance suite: every criterion at its stated (exact) tolerance.

All identities are exact symbolic equalities, so the tolerance is zero
throughout; each test prints its one-line pass/fail summary.
"""

from hermsf import verify


def _run(name, **kwargs):
    report = verify.run_suite(name, **kwargs)
    print()
    print(report.summary())
    detail = "; ".join(
        f"{f.case}: {f.left} != {f.right}" for f in report.failures[:3]
    )
    assert report.passed, f"{name} failed on {len(report.failures)} cases: {detail}"
    return report


def test_a01_cocycle():
    # all Weyl pairs for n in {2,3}; 200 random pairs at n=4; e0 in {0,1}
    rep = _run("cocycle")
    assert rep.cases == 2 * (8 * 8 + 48 * 48) + 2 * 200


def test_a02_rho_closed_form():
    rep = _run("rho-closed")
    assert rep.cases == 8  # n <= 4, e0 in {0,1}


def test_a03_spherical_functional_equations():
    # omega(z) = Gamma_sigma(z) omega(sigma z) for every simple reflection,
    # n <= 3, e0 <= lambda_n, lambda_1 <= 3, e0 in {0,1}
    rep = _run("spherical-fe")
    assert rep.cases == sum(
        n_tags * n_lams
        for n_tags, n_lams in ((1, 4 + 3), (2, 10 + 6), (3, 20 + 10))
    )


def test_a04_polynomial_invariance():
    rep = _run("polynomial-invariance")
    assert rep.cases == (4 + 3) + (10 + 6) + (20 + 10) + 3  # + negative controls


def test_a05_rank1_consistency():
    rep = _run("n1-consistency")
    assert rep.cases == 8


def test_a06_integration_oracle():
    rep = _run("oracle-spherical")
    assert rep.cases >= 10


def test_a07_siegel_rank1():
    rep = _run("siegel-n1")
    assert rep.cases == 13


def test_a08_siegel_chain():
    rep = _run("siegel-chain")
    assert rep.cases == 8 + 12


def test_a09_rank1_zeta_functional_equation():
    rep = _run("zeta-rank1")
    assert rep.cases == 5 * 2 * 2 * 2


def test_a10_algebra_properties():
    rep = _run("algebra-props")
    assert rep.cases >= 500 + 600 + 200 + 200


def test_weight_factor_forms():
    # supporting invariant: both constructions of the weight factor agree
    _run("weight-forms")
