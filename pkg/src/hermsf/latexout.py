"""One-way LaTeX rendering.

Monomials in the X variables render as q to a linear form in the z_i, with
half-integer constants coming from u = q^(1/2); binomial denominator factors
render in the same style.  There is no parser.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import BinomialFactor, FactorizedRatFunc, LaurentPoly, grlex_key
from .scalars import ExactScalar


def _fmt_q_exponent(linear, const: Fraction) -> str:
    """Render q^(sum c_i z_i + const); linear is the exponent vector."""
    bits = []
    for i, c in enumerate(linear, start=1):
        if not c:
            continue
        var = f"z_{i}"
        if c == 1:
            bits.append(("+", var))
        elif c == -1:
            bits.append(("-", var))
        else:
            bits.append(("+" if c > 0 else "-", f"{abs(c)}{var}"))
    if const:
        if const.denominator == 1:
            s = str(abs(const))
        else:
            s = f"{abs(const.numerator)}/{const.denominator}"
        bits.append(("+" if const > 0 else "-", s))
    if not bits:
        return "1"
    sign, first = bits[0]
    out = ("-" if sign == "-" else "") + first
    for sign, b in bits[1:]:
        out += sign + b
    return f"q^{{{out}}}"


def _term_latex(exps, coeff: ExactScalar) -> str:
    mono = coeff.as_u_monomial()
    if mono is None:
        body = _fmt_q_exponent(exps, Fraction(0))
        return f"({coeff.pretty()}){body if body != '1' else ''}" or "1"
    c, k = mono
    sign = "-" if c < 0 else ""
    mag = abs(c)
    body = _fmt_q_exponent(exps, Fraction(k, 2))
    if mag == 1:
        return sign + body
    if body == "1":
        return f"{sign}{mag}"
    return f"{sign}{mag} {body}"


def poly_latex(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = [
        _term_latex(m, c)
        for m, c in sorted(p.terms.items(), key=lambda kv: grlex_key(kv[0]))
    ]
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def factor_latex(f: BinomialFactor) -> str:
    lead = _term_latex(f.exps, f.coeff_a)
    if not f.coeff_b:
        return lead
    tail = _term_latex((0,) * f.nvars, f.coeff_b)
    if tail.startswith("-"):
        return f"{lead} - {tail[1:]}"
    return f"{lead} + {tail}"


def ratfunc_latex(f: FactorizedRatFunc) -> str:
    num = poly_latex(f.num)
    if not f.den:
        return num
    dens = []
    for fac, mult in f.den:
        s = factor_latex(fac)
        dens.append(f"({s})^{{{mult}}}" if mult > 1 else s)
    if len(dens) == 1 and len(f.den) == 1:
        return f"\\frac{{{num}}}{{{dens[0]}}}"
    return f"\\frac{{{num}}}{{{''.join('(' + d + ')' for d in dens)}}}"
