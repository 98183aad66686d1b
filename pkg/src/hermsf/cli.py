"""Command-line surface.

Verbs: gamma, spherical, siegel, oracle, verify.  Standard output carries the
artifact (byte-deterministic for fixed inputs); diagnostics go to standard
error.  Exit codes: 0 success/verified, 1 verification mismatch, 2 invalid
input, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gamma import gamma_from_word
from .laurent import FactorizedRatFunc
from .latexout import ratfunc_latex
from .oracle import (
    BudgetError,
    OracleConfig,
    check_siegel_oracle,
    check_spherical_oracle,
    siegel_n1_by_charsum,
    spherical_n1_by_integration,
)
from .serialize import ratfunc_to_json
from .siegel import (
    SiegelVerificationError,
    check_siegel_fe_n1,
    fe_multiplier,
    fe_multiplier_from_rho,
    matrix_zeta_ratio,
    siegel_series_n1,
    verify_fe_chain,
)
from .spherical import (
    SphericalInput,
    invariance_factor_ff,
    spherical_at_base,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class InputError(ValueError):
    pass


def _parse_lambda(text: str, *, weakly_decreasing: bool = True) -> tuple:
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse lambda {text!r}")
    if weakly_decreasing and any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError("lambda must be weakly decreasing")
    return lam


def _emit(obj: dict, latex: str, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    elif fmt == "latex":
        sys.stdout.write(latex + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _cmd_gamma(args) -> int:
    word = args.sigma.split() if args.sigma else []
    g = gamma_from_word(word, args.e0, args.n)
    obj = {
        "sigma": g.sigma.to_json(),
        "e0": args.e0,
        "gamma": ratfunc_to_json(g.value),
    }
    _emit(obj, ratfunc_latex(g.value), args.format)
    return EXIT_OK


def _cmd_spherical(args) -> int:
    lam = _parse_lambda(args.lam)
    params = SphericalInput(args.n, lam, args.e0)
    value = spherical_at_base(params)
    f_omega = value.value * invariance_factor_ff(args.n, args.e0).expand()
    obj = {
        "nvars": args.n,
        "lambda": list(lam),
        "e0": args.e0,
        "omega": ratfunc_to_json(value.value),
        "f_times_omega": ratfunc_to_json(f_omega),
    }
    latex = (
        "\\omega = " + ratfunc_latex(value.value)
        + "\\qquad F\\,\\omega = " + ratfunc_latex(f_omega)
    )
    _emit(obj, latex, args.format)
    return EXIT_OK


def _cmd_siegel(args) -> int:
    if args.action == "b1":
        lam = _parse_lambda(args.lam, weakly_decreasing=False)
        if len(lam) != 1 or lam[0] < 0:
            raise InputError("b1 expects a single nonnegative lambda")
        b = siegel_series_n1(lam[0])
        _emit(ratfunc_to_json(b.value), ratfunc_latex(b.value), args.format)
        return EXIT_OK
    if args.action == "chain":
        try:
            matrix_zeta_ratio(args.n)
            fe_multiplier_from_rho(args.n, args.e0)
            chain = verify_fe_chain(args.n, args.e0)
        except SiegelVerificationError as exc:
            print(f"chain verification failed: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        ok = all(chain.values())
        _emit({"n": args.n, "e0": args.e0, "checks": chain}, repr(chain), args.format)
        return EXIT_OK if ok else EXIT_MISMATCH
    if args.action == "fe":
        lam = _parse_lambda(args.lam)
        if len(lam) != args.n or any(x < 0 for x in lam):
            raise InputError("fe expects n nonnegative lambda entries")
        checks = {}
        if args.n == 1:
            checks["rank1-fe"] = check_siegel_fe_n1(lam[0], args.e0)
        fe = fe_multiplier(args.n, lam, args.e0)
        inv = fe.value * fe.at_reflected_s(args.n).value
        checks["involution"] = inv.equals(FactorizedRatFunc.one(1))
        try:
            chain = verify_fe_chain(args.n, args.e0)
            checks.update(chain)
        except SiegelVerificationError:
            checks["chain"] = False
        obj = {
            "n": args.n,
            "lambda": list(lam),
            "e0": args.e0,
            "fe_multiplier": ratfunc_to_json(fe.value),
            "checks": checks,
        }
        _emit(obj, ratfunc_latex(fe.value), args.format)
        return EXIT_OK if all(checks.values()) else EXIT_MISMATCH
    raise InputError(f"unknown siegel action {args.action!r}")


def _cmd_oracle(args) -> int:
    cfg = OracleConfig(args.p, args.N)
    if args.action == "omega1":
        lam = _parse_lambda(args.lam, weakly_decreasing=False)
        if len(lam) != 1:
            raise InputError("omega1 expects a single lambda")
        value = spherical_n1_by_integration(cfg, lam[0], args.e)
        _emit(ratfunc_to_json(value.value), ratfunc_latex(value.value), args.format)
        if args.check:
            ok = check_spherical_oracle(cfg, lam[0], args.e)
            print(f"closed-form match: {ok}", file=sys.stderr)
            return EXIT_OK if ok else EXIT_MISMATCH
        return EXIT_OK
    if args.action == "siegel1":
        lam = _parse_lambda(args.lam, weakly_decreasing=False)
        if len(lam) != 1 or lam[0] < 0:
            raise InputError("siegel1 expects a single nonnegative lambda")
        value = siegel_n1_by_charsum(cfg, lam[0])
        _emit(ratfunc_to_json(value.value), ratfunc_latex(value.value), args.format)
        if args.check:
            ok = check_siegel_oracle(cfg, lam[0])
            print(f"closed-form match: {ok}", file=sys.stderr)
            return EXIT_OK if ok else EXIT_MISMATCH
        return EXIT_OK
    raise InputError(f"unknown oracle action {args.action!r}")


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.n is not None:
        if args.suite in ("cocycle", "rho-closed", "siegel-chain"):
            kwargs["n_max"] = args.n
        elif args.suite in ("spherical-fe", "polynomial-invariance"):
            kwargs["n_max"] = args.n
    reports = []
    for name in names:
        rep = run_suite(name, **(kwargs if name == args.suite else {}))
        reports.append(rep)
        print(rep.summary(), file=sys.stderr)
    payload = [
        {k: v for k, v in r.to_json().items() if k != "wall_time"} for r in reports
    ]
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hermsf",
        description=(
            "Exact spherical functions on p-adic U(n,n): Gamma factors, "
            "Weyl-sum values, hermitian Siegel series identities, and "
            "brute-force integration oracles."
        ),
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gamma", help="emit a Gamma factor from a generator word")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--sigma", type=str, default="",
                   help='generator word, e.g. "s1 s2 t" (rightmost acts first)')
    g.add_argument("--e0", type=int, default=0)
    g.add_argument("--format", choices=("json", "latex", "text"), default="json")
    g.set_defaults(fn=_cmd_gamma)

    s = sub.add_parser("spherical", help="emit omega and F*omega at the base point")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=str, required=True,
                   help="comma-separated weakly decreasing integers")
    s.add_argument("--e0", type=int, default=0)
    s.add_argument("--format", choices=("json", "latex", "text"), default="json")
    s.set_defaults(fn=_cmd_spherical)

    z = sub.add_parser("siegel", help="Siegel series values and identities")
    z.add_argument("action", choices=("fe", "b1", "chain"))
    z.add_argument("--n", type=int, default=1)
    z.add_argument("--lambda", dest="lam", type=str, default="0")
    z.add_argument("--e0", type=int, default=0)
    z.add_argument("--format", choices=("json", "latex", "text"), default="json")
    z.set_defaults(fn=_cmd_siegel)

    o = sub.add_parser("oracle", help="brute-force rank-one verifiers (odd p)")
    o.add_argument("action", choices=("omega1", "siegel1"))
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--N", type=int, default=2)
    o.add_argument("--lambda", dest="lam", type=str, required=True)
    o.add_argument("--e", type=int, default=0)
    o.add_argument("--check", action="store_true",
                   help="exit 0 iff the oracle matches the closed form")
    o.add_argument("--format", choices=("json", "latex", "text"), default="json")
    o.set_defaults(fn=_cmd_oracle)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--n", type=int, default=None)
    v.set_defaults(fn=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
