"""Canonical JSON interchange for factor-tracked rational functions.

Schema::

    {"nvars": n,
     "num": [{"exps": [...], "coeff": {"num_u": [...], "den_u": [...]}}, ...],
     "den": [{"exps": [...], "coeffA": {...}, "coeffB": {...}, "mult": m}, ...]}

Numerator terms are sorted by exponent vector in graded-lex order; integer
coefficient arrays are little-endian by degree in u, in lowest terms with a
primitive positive-leading denominator.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from .laurent import BinomialFactor, FactorizedRatFunc, LaurentPoly, grlex_key
from .scalars import ExactScalar


def scalar_to_json(c: ExactScalar) -> dict:
    num = list(c.num) if c.num else [Fraction(0)]
    den = list(c.den)
    lcm = 1
    for f in num + den:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    num_i = [int(f * lcm) for f in num]
    den_i = [int(f * lcm) for f in den]
    g = 0
    for x in num_i + den_i:
        g = gcd(g, abs(x))
    if g > 1:
        num_i = [x // g for x in num_i]
        den_i = [x // g for x in den_i]
    if den_i[-1] < 0:
        num_i = [-x for x in num_i]
        den_i = [-x for x in den_i]
    return {"num_u": num_i, "den_u": den_i}


def scalar_from_json(obj: dict) -> ExactScalar:
    return ExactScalar(
        [Fraction(x) for x in obj["num_u"]], [Fraction(x) for x in obj["den_u"]]
    )


def ratfunc_to_json(f: FactorizedRatFunc) -> dict:
    num = [
        {"exps": list(m), "coeff": scalar_to_json(c)}
        for m, c in sorted(f.num.terms.items(), key=lambda kv: grlex_key(kv[0]))
    ]
    den = [
        {
            "exps": list(fac.exps),
            "coeffA": scalar_to_json(fac.coeff_a),
            "coeffB": scalar_to_json(fac.coeff_b),
            "mult": mult,
        }
        for fac, mult in f.den
    ]
    return {"nvars": f.nvars, "num": num, "den": den}


def ratfunc_from_json(obj: dict) -> FactorizedRatFunc:
    nvars = obj["nvars"]
    terms = {}
    for t in obj["num"]:
        exps = tuple(t["exps"])
        c = scalar_from_json(t["coeff"])
        if c:
            terms[exps] = c
    den = [
        (
            BinomialFactor(
                nvars,
                tuple(t["exps"]),
                scalar_from_json(t["coeffA"]),
                scalar_from_json(t["coeffB"]),
            ),
            t["mult"],
        )
        for t in obj["den"]
    ]
    return FactorizedRatFunc(LaurentPoly(nvars, terms), den)


def dumps(f: FactorizedRatFunc) -> str:
    return json.dumps(ratfunc_to_json(f), separators=(",", ":"))
