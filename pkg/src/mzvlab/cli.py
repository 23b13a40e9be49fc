"""Command-line front end: ``mzv <command> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

import mpmath

from .index_algebra import (
    IndexCombination,
    index_shuffle,
    m_i_n,
    parse_index,
    sigma,
    stuffle,
)
from .numeric_eval import (
    BigReal,
    EvalConfig,
    NonAdmissibleIndexError,
    eval_admissible,
    pi_value,
    zeta_star_numeric,
)
from .regularization import regularize
from .relations import DEFAULT_EXTRA_GENERATORS, InsufficientPrecisionError, integer_relation, load_generators
from .smzv import t_adic_smzv, t_adic_smzv_symbolic
from .suites import UnknownSuiteError, run_suite, suite_names

PSLQ_MIN_DIGITS = 20


class CliError(Exception):
    pass


# -- value expressions for pslq ----------------------------------------------

_FACTOR = re.compile(r"^(?:(pi)|zeta\(([\d,\s]*)\)|([+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|[+-]?\.\d+))(?:\^(\d+))?$")


def _split_product(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_value(text: str, cfg: EvalConfig) -> BigReal:
    """Evaluate ``pi``, ``pi^4``, ``zeta(3,5)``, decimals and ``*``-products."""
    acc = BigReal.exact(1, cfg.work_bits)
    for factor in _split_product(text):
        m = _FACTOR.match(factor)
        if not m:
            raise CliError(f"cannot parse value factor {factor!r}")
        is_pi, zargs, number, power = m.groups()
        if is_pi:
            x = pi_value(cfg)
        elif zargs is not None:
            k = parse_index(zargs)
            if not k:
                raise CliError("zeta() needs at least one argument")
            x = eval_admissible(k, cfg)
        else:
            with mpmath.workprec(cfg.work_bits):
                v = mpmath.mpf(number)
            # a typed decimal is taken as exact at working precision
            x = BigReal(v, mpmath.mpf(0), cfg.work_bits)
        acc = acc * (x ** int(power) if power else x)
    return acc


# -- commands ----------------------------------------------------------------

def _cfg(args) -> EvalConfig:
    if args.precision < 1:
        raise CliError("--precision must be positive")
    return EvalConfig(precision_digits=args.precision)


def _index(text: str):
    try:
        return parse_index(text)
    except ValueError as exc:
        raise CliError(f"malformed index {text!r}: {exc}") from exc


def _emit_combination(args, x: IndexCombination) -> None:
    print(x.to_json() if args.json else str(x))


def cmd_eval(args) -> int:
    cfg = _cfg(args)
    k = _index(args.index)
    try:
        x = zeta_star_numeric(k, cfg) if args.regularized else eval_admissible(k, cfg)
    except NonAdmissibleIndexError as exc:
        raise CliError(f"{exc}; pass --regularized for zeta*") from exc
    s = x.to_decimal(cfg.precision_digits)
    if args.json:
        print(json.dumps({"index": list(k), "regularized": args.regularized, "digits": cfg.precision_digits, "value": s}))
    else:
        print(s)
    return 0


def cmd_stuffle(args) -> int:
    _emit_combination(args, stuffle(_index(args.a), _index(args.b)))
    return 0


def cmd_shuffle(args) -> int:
    _emit_combination(args, index_shuffle(_index(args.a), _index(args.b)))
    return 0


def cmd_sigma(args) -> int:
    _emit_combination(args, sigma(args.n, _index(args.index)))
    return 0


def cmd_min(args) -> int:
    _emit_combination(args, m_i_n(args.m, args.n, _index(args.index)))
    return 0


def cmd_reg(args) -> int:
    p = regularize(_index(args.index))
    print(p.to_json() if args.json else str(p))
    return 0


def cmd_smzv(args) -> int:
    if args.order < 1:
        raise CliError("--order must be positive")
    k = _index(args.index)
    if args.symbolic:
        series = t_adic_smzv_symbolic(k, args.order)
        if args.json:
            print(series.to_json())
        else:
            for j, c in enumerate(series.coeffs):
                print(f"t^{j}: {c}")
        return 0
    cfg = _cfg(args)
    series = t_adic_smzv(k, args.order, cfg)
    if args.json:
        print(series.to_json(cfg.precision_digits))
    else:
        for j, c in enumerate(series.coeffs):
            print(f"t^{j}: {c.to_decimal(cfg.precision_digits)}")
    return 0


def cmd_pslq(args) -> int:
    cfg = _cfg(args)
    if cfg.precision_digits < PSLQ_MIN_DIGITS:
        raise CliError(f"pslq needs --precision >= {PSLQ_MIN_DIGITS}")
    values = [parse_value(v, cfg) for v in args.values]
    try:
        rel = integer_relation(values, cfg, max_coeff=args.max_coeff, min_digits=PSLQ_MIN_DIGITS)
    except InsufficientPrecisionError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        print(json.dumps({"values": args.values, "relation": rel}))
    elif rel is None:
        print("no relation found")
    else:
        terms = [f"{c}*[{v}]" for c, v in zip(rel, args.values) if c]
        print(" + ".join(terms).replace("+ -", "- ") + " = 0")
        print(" ".join(str(c) for c in rel))
    return 0 if rel is not None else 1


def cmd_verify(args) -> int:
    cfg = _cfg(args)
    extras = DEFAULT_EXTRA_GENERATORS + load_generators(args.basis) if args.basis else None
    names = suite_names() if args.suite == "all" else [args.suite]
    ok = True
    reports = []
    for name in names:
        try:
            report = run_suite(name, cfg, extras=extras)
        except UnknownSuiteError as exc:
            raise CliError(str(exc.args[0])) from exc
        ok &= report.passed
        reports.append(report)
    if args.json:
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps({r.suite: r.to_json_obj() for r in reports}, indent=2))
    else:
        for r in reports:
            print("\n".join(r.summary_lines()))
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=60, help="decimal digits (default 60)")
    common.add_argument("--order", type=int, default=3, help="truncation order for smzv (default 3)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--basis", help="JSON file with extra pi^2-basis generators")

    parser = argparse.ArgumentParser(prog="mzv", description="Multiple zeta values, stuffle algebra and t-adic SMZVs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate zeta(k)")
    p.add_argument("index")
    p.add_argument("--regularized", action="store_true", help="evaluate zeta* (allows trailing 1s)")
    p.set_defaults(func=cmd_eval)

    for name, func, helptext in (("stuffle", cmd_stuffle, "stuffle product a * b"),
                                 ("shuffle", cmd_shuffle, "index shuffle of a and b")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=func)

    p = sub.add_parser("sigma", parents=[common], help="sigma_n(k)")
    p.add_argument("n", type=int)
    p.add_argument("index")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("min", parents=[common], help="mI_n(k)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("index")
    p.set_defaults(func=cmd_min)

    p = sub.add_parser("reg", parents=[common], help="stuffle regularization of k")
    p.add_argument("index")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("smzv", parents=[common], help="t-adic symmetric MZV up to t^(order-1)")
    p.add_argument("index")
    p.add_argument("--symbolic", action="store_true", help="print admissible combinations instead of numbers")
    p.set_defaults(func=cmd_smzv)

    p = sub.add_parser("pslq", parents=[common], help="integer relation among values")
    p.add_argument("values", nargs="+", help="e.g. 'zeta(2)' 'pi^2' '0.5*zeta(3)'")
    p.add_argument("--max-coeff", type=int, default=10**6)
    p.set_defaults(func=cmd_pslq)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="one of: " + ", ".join(suite_names() + ["all"]))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"mzv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
