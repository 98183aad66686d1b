"""Exact spherical functions on p-adic U(n,n) and hermitian Siegel series.

Everything is computed as an identity of multivariate Laurent rational
functions over Q(u), u**2 = q, with brute-force p-adic integration oracles
cross-checking the rank-one layer.
"""

from .scalars import ExactScalar, ONE, ZERO
from .laurent import (
    BinomialFactor,
    FactoredForm,
    FactorizedRatFunc,
    LaurentPoly,
    MonomialMap,
    PoleError,
    exact_divide,
)
from .weyl import (
    Root,
    WeylElem,
    act_on_poly,
    act_on_root,
    enumerate_weyl,
    inversion_set,
    positive_roots,
    reduced_word,
    rho_element,
    simple_reflection,
    word_to_element,
)
from .gamma import (
    GammaFactor,
    gamma_factor,
    gamma_from_word,
    gamma_rho_closed,
    root_factor,
)
from .spherical import (
    SphericalInput,
    SphericalValue,
    check_polynomial_invariance,
    invariance_factor,
    n1_identification,
    poincare_normalizer,
    rank1_zeta_closed,
    spherical_at_base,
    spherical_n1_closed,
    weight_factor,
)
from .siegel import (
    SVarFunc,
    check_siegel_fe_n1,
    fe_multiplier,
    fe_multiplier_from_rho,
    matrix_algebra_zeta,
    matrix_zeta_ratio,
    siegel_series_n1,
    verify_fe_chain,
)
from .oracle import (
    CyclotomicInt,
    OracleConfig,
    QuotientRingElem,
    enumerate_u11_cells,
    siegel_n1_by_charsum,
    spherical_n1_by_integration,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
