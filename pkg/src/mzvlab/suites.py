"""
Named verification suites.

Each suite is a list of cases. A case is one of

* exact: two :class:`IndexCombination` objects compared for equality,
* numeric: two reals compared to ``10^-(P-10)``,
* congruence: two reals whose difference must be certified in the ``pi^2``
  ideal, then rechecked with all values recomputed at ``P + 20`` digits.

Cases run sequentially and deterministically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

import mpmath

from .index_algebra import (
    I,
    IndexCombination,
    as_combination,
    compositions,
    format_index,
    index_shuffle,
    indices_up_to_weight,
    m_i_n,
    repeat_pattern,
    reverse,
    sigma,
    stuffle,
)
from .numeric_eval import (
    BigReal,
    EvalConfig,
    eval_admissible,
    eval_combination,
    pi_value,
    zeta_numeric,
    zeta_star_numeric,
)
from .regularization import zeta_star_m_symbolic, zeta_star_symbolic
from .relations import (
    acceptance_threshold,
    pi2_basis,
    recheck_certificate,
    verify_congruence_mod_pi2,
)
from .smzv import (
    main_rhs,
    smzv_coefficient_symbolic,
    stadic_coefficient,
    t_adic_smzv,
    t_adic_smzv_definitional,
    thm11_rhs,
    thm13_rhs,
    thm13_rhs_mod_pi2,
)

RECHECK_EXTRA_DIGITS = 20


class UnknownSuiteError(KeyError):
    pass


@dataclass
class CaseResult:
    case: str
    status: str  # "pass" or "fail"
    residual: str
    certificate: Optional[dict] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        out = {"case": self.case, "status": self.status, "residual": self.residual, "certificate": self.certificate}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    suite: str
    precision_digits: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def to_json_obj(self) -> list[dict]:
        return [c.to_json_obj() for c in self.cases]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.cases:
            line = f"[{c.status.upper()}] {c.case}  residual={c.residual}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        n_ok = sum(c.passed for c in self.cases)
        lines.append(f"{self.suite}: {n_ok}/{len(self.cases)} cases passed")
        return lines


# -- case helpers ----------------------------------------------------------

class _Ctx:
    def __init__(self, cfg: EvalConfig, extras):
        self.cfg = cfg
        self.extras = extras
        self.hi = cfg.with_precision(cfg.precision_digits + RECHECK_EXTRA_DIGITS)
        self.tol = acceptance_threshold(cfg)

    def at_least(self, digits: int) -> "_Ctx":
        if self.cfg.precision_digits >= digits:
            return self
        return _Ctx(self.cfg.with_precision(digits), self.extras)


def _fmt(x) -> str:
    return mpmath.nstr(x, 3)


def exact_case(name: str, lhs, rhs) -> CaseResult:
    diff = as_combination(lhs) - as_combination(rhs)
    if not diff:
        return CaseResult(name, "pass", "0")
    return CaseResult(name, "fail", str(len(diff.terms)), detail=f"lhs - rhs = {diff}")


def exhaustive_case(name: str, checks: Iterable[tuple[str, Callable[[], tuple]]]) -> CaseResult:
    """Many exact equalities reported as one case; residual = number failing."""
    n = bad = 0
    first = ""
    for label, thunk in checks:
        n += 1
        lhs, rhs = thunk()
        if lhs != rhs:
            bad += 1
            if not first:
                first = f"first failure at {label}: lhs - rhs = {lhs - rhs}"
    detail = f"{n} instances" + (f"; {first}" if first else "")
    return CaseResult(name, "pass" if bad == 0 else "fail", str(bad), detail=detail)


def numeric_case(name: str, ctx: _Ctx, compute: Callable[[EvalConfig], tuple], tol=None) -> CaseResult:
    lhs, rhs = compute(ctx.cfg)
    tol = ctx.tol if tol is None else tol
    res = abs((lhs - rhs).value)
    return CaseResult(name, "pass" if res <= tol else "fail", _fmt(res), detail=f"tolerance {_fmt(tol)}")


def congruence_case(name: str, ctx: _Ctx, weight: int, compute: Callable[[EvalConfig], tuple]) -> CaseResult:
    basis = pi2_basis(weight, ctx.extras)
    lhs, rhs = compute(ctx.cfg)
    cert = verify_congruence_mod_pi2(lhs, rhs, weight, ctx.cfg, basis=basis, target_id=name)
    if cert.ok:
        lhs_hi, rhs_hi = compute(ctx.hi)
        rechecked = recheck_certificate(cert, lhs_hi, rhs_hi, ctx.hi, basis=basis, threshold=ctx.tol)
    else:
        rechecked = False
    status = "pass" if cert.ok and rechecked else "fail"
    detail = cert.status
    if cert.ok and not rechecked:
        detail += f"; recheck at {ctx.hi.precision_digits} digits failed"
    return CaseResult(name, status, _fmt(cert.residual), certificate=cert.to_json_obj(), detail=detail)


# -- numeric building blocks -----------------------------------------------

def _z(k, cfg):
    return eval_admissible(k, cfg)


def _zs(k, cfg):
    return zeta_star_numeric(k, cfg)


def _z1(k, cfg):
    return eval_combination(zeta_star_m_symbolic(1, k), cfg)


def _zeta(s: int, cfg):
    return zeta_numeric(s, cfg)


def _zero(cfg):
    return BigReal.zero(cfg.work_bits)


def _one(cfg):
    return BigReal.exact(1, cfg.work_bits)


def _ev(x, cfg):
    return eval_combination(x, cfg)


def _neg4(e: int) -> Fraction:
    return Fraction(-4) ** e


def _sum(terms, cfg):
    acc = _zero(cfg)
    for t in terms:
        acc = acc + t
    return acc


def _pairs(total: int):
    return [(a, total - a) for a in range(total + 1)] if total >= 0 else []


def _idx(k) -> str:
    return format_index(tuple(k))


def _OT(n):
    return repeat_pattern(1, 3, n)


def _TO(n):
    return repeat_pattern(3, 1, n)


# -- symbolic lemmas -------------------------------------------------------

def suite_lemma2_1(ctx: _Ctx) -> Iterator[CaseResult]:
    idx = indices_up_to_weight(5)
    for n in range(5):
        checks = (
            (f"k={_idx(k)}, l={_idx(l)}",
             lambda k=k, l=l: (
                 sigma(n, stuffle(k, l)),
                 _sum_ic(stuffle(sigma(i, k), sigma(n - i, l)) for i in range(n + 1)),
             ))
            for k in idx for l in idx
        )
        yield exhaustive_case(f"sigma_{n}(k*l) = sum_i sigma_i(k)*sigma_(n-i)(l), weights <= 5", checks)
    checks = (
        (f"k={k}, l={l}, c={c}",
         lambda k=k, l=l, c=c: (
             sum(math.comb(k + a - 1, a) * math.comb(l + c - a - 1, c - a) for a in range(c + 1)),
             math.comb(k + l + c - 1, c),
         ))
        for k in range(1, 7) for l in range(1, 7) for c in range(9)
    )
    yield exhaustive_case("binomial convolution, 1 <= k,l <= 6, c <= 8", checks)


def _sum_ic(parts) -> IndexCombination:
    acc = IndexCombination.zero()
    for p in parts:
        acc = acc + p
    return acc


def suite_lemma2_2(ctx: _Ctx) -> Iterator[CaseResult]:
    idx = indices_up_to_weight(6)
    for n in range(4):
        checks = (
            (f"k={_idx(k)}",
             lambda k=k: (_sum_ic(m_i_n(i, n - i, k) for i in range(n + 1)), sigma(n, I(0, k))))
            for k in idx
        )
        yield exhaustive_case(f"sum_i iI(n-i)(k) = sigma_{n}(I_0(k)), weight <= 6", checks)


def suite_lemma2_3(ctx: _Ctx) -> Iterator[CaseResult]:
    idx = [k for k in indices_up_to_weight(8) if sum(k) % 2 == 0]
    yield exhaustive_case(
        "I_2(k) + 1I1(k) + I_2(rev k) = sigma_2(I_0(k)), even weight <= 8",
        ((f"k={_idx(k)}",
          lambda k=k: (I(2, k) + m_i_n(1, 1, k) + I(2, reverse(k)), sigma(2, I(0, k))))
         for k in idx),
    )
    yield exhaustive_case(
        "2I0(k) = I_2(rev k), even weight <= 8",
        ((f"k={_idx(k)}", lambda k=k: (m_i_n(2, 0, k), I(2, reverse(k)))) for k in idx),
    )


def _b1a_rhs(a: int, b: int, n: int) -> IndexCombination:
    return _sum_ic(stuffle((a * i + b,), (a,) * (n - i)) * (-1) ** i for i in range(n + 1))


def _b2a_rhs(a: int, b: int, n: int) -> IndexCombination:
    return _sum_ic(
        stuffle((a * i + b, a * j + b), (a,) * (n - i - j)) * (-1) ** (i + j)
        for i in range(n + 1) for j in range(n + 1 - i)
    )


def suite_lemma2_4(ctx: _Ctx) -> Iterator[CaseResult]:
    rng = [(a, b, n) for a in range(1, 4) for b in range(1, 4) for n in range(6)]
    yield exhaustive_case(
        "(b) sh ({a}^n) = sum (-1)^i (ai+b)*({a}^(n-i)), a,b <= 3, n <= 5",
        ((f"a={a}, b={b}, n={n}", lambda a=a, b=b, n=n: (index_shuffle((b,), (a,) * n), _b1a_rhs(a, b, n)))
         for a, b, n in rng),
    )
    yield exhaustive_case(
        "(b,b) sh ({a}^n) = sum (-1)^(i+j) (ai+b,aj+b)*({a}^(n-i-j)), a,b <= 3, n <= 5",
        ((f"a={a}, b={b}, n={n}", lambda a=a, b=b, n=n: (index_shuffle((b, b), (a,) * n), _b2a_rhs(a, b, n)))
         for a, b, n in rng),
    )


def sigma2_repeat_formula(k: int, n: int) -> IndexCombination:
    """Expansion of ``sigma_2({k}^n)`` through stuffles with ``{k}^m``."""
    first = _sum_ic(stuffle((k * (i + 1) + 2,), (k,) * (n - i - 1)) * (-1) ** i for i in range(n))
    second = _sum_ic(
        stuffle((k * (i + 1) + 1, k * (j + 1) + 1), (k,) * (n - i - j - 2)) * (-1) ** (i + j)
        for i in range(n - 1) for j in range(n - 1 - i)
    )
    return first * Fraction((k + 1) * k, 2) + second * (k * k)


def suite_lemma2_5(ctx: _Ctx) -> Iterator[CaseResult]:
    yield exhaustive_case(
        "sigma_2({k}^n) expansion, k <= 4, 1 <= n <= 4",
        ((f"k={k}, n={n}", lambda k=k, n=n: (sigma(2, (k,) * n), sigma2_repeat_formula(k, n)))
         for k in range(1, 5) for n in range(1, 5)),
    )


def suite_lemma2_7(ctx: _Ctx) -> Iterator[CaseResult]:
    yield exhaustive_case(
        "I_0({a,b}^n) = (-1)^n ({a+b}^n), odd a,b <= 5, n <= 4",
        ((f"a={a}, b={b}, n={n}",
          lambda a=a, b=b, n=n: (I(0, repeat_pattern(a, b, n)), IndexCombination({(a + b,) * n: (-1) ** n})))
         for a in (1, 3, 5) for b in (1, 3, 5) for n in range(5)),
    )


# -- sigma_2 of I_0 for {a,b}^n ----------------------------------------

def lemma28_lhs_symbolic(a: int, b: int, n: int) -> IndexCombination:
    k = repeat_pattern(a, b, n)
    return zeta_star_symbolic(I(2, k) + m_i_n(1, 1, k) + I(2, repeat_pattern(b, a, n)))


def lemma28_rhs(a: int, b: int, n: int, cfg: EvalConfig) -> BigReal:
    s = a + b
    acc = _sum((_zeta(s * n1 + 1, cfg) * _zeta(s * n2 + 1, cfg) for n1, n2 in _pairs(n)), cfg)
    return acc * Fraction(s * s, 2)


def suite_lemma2_8(ctx: _Ctx) -> Iterator[CaseResult]:
    for a, b in ((1, 3), (3, 1)):
        for n in range(3):
            s = a + b
            k = repeat_pattern(a, b, n)
            yield exact_case(
                f"sigma_2(I_0({{{a},{b}}}^{n})) = (-1)^n sigma_2({{{s}}}^{n}) expansion",
                sigma(2, I(0, k)),
                sigma2_repeat_formula(s, n) * (-1) ** n,
            )
            yield congruence_case(
                f"zeta*(sigma_2(I_0({{{a},{b}}}^{n}))) == (a+b)^2/2 sum zeta*(..)zeta*(..) mod pi^2",
                ctx, s * n + 2,
                lambda cfg, k=k, a=a, b=b, n=n: (_ev(zeta_star_symbolic(sigma(2, I(0, k))), cfg), lemma28_rhs(a, b, n, cfg)),
            )
            yield congruence_case(
                f"a={a}, b={b}, n={n}: I_2 + 1I1 + I_2(reversed) == (a+b)^2/2 sum mod pi^2",
                ctx, s * n + 2,
                lambda cfg, a=a, b=b, n=n: (_ev(lemma28_lhs_symbolic(a, b, n), cfg), lemma28_rhs(a, b, n, cfg)),
            )


# -- closed forms ----------------------------------------------------------

def zeta_four_closed(n: int, cfg: EvalConfig) -> BigReal:
    return pi_value(cfg) ** (4 * n) * Fraction(2 ** (2 * n + 1), math.factorial(4 * n + 2))


def zeta_star_13_1_closed(n: int, cfg: EvalConfig) -> BigReal:
    acc = _sum((_zeta(4 * j + 1, cfg) * _z((4,) * (n - j), cfg) * (-1) ** j for j in range(1, n + 1)), cfg)
    return acc * Fraction(2, 4**n)


def suite_closed_forms(ctx: _Ctx) -> Iterator[CaseResult]:
    yield numeric_case("zeta(1,2) = zeta(3)", ctx, lambda cfg: (_z((1, 2), cfg), _z((3,), cfg)))
    for n in range(4):
        yield numeric_case(
            f"zeta({{4}}^{n}) = 2^(2n+1) pi^(4n)/(4n+2)!", ctx,
            lambda cfg, n=n: (_z((4,) * n, cfg), zeta_four_closed(n, cfg)),
        )
    for n in range(4):
        yield numeric_case(
            f"zeta({{1,3}}^{n}) = 4^-n zeta({{4}}^{n})", ctx,
            lambda cfg, n=n: (_z(_OT(n), cfg), _z((4,) * n, cfg) * Fraction(1, 4**n)),
        )
    for n in range(4):
        yield numeric_case(
            f"zeta*({{1,3}}^{n},1) = 2/4^n sum (-1)^j zeta(4j+1) zeta({{4}}^(n-j))", ctx,
            lambda cfg, n=n: (_zs(_OT(n) + (1,), cfg), zeta_star_13_1_closed(n, cfg)),
        )
    for n in range(1, 4):
        yield congruence_case(
            f"zeta({{4}}^{n}) == 0 mod pi^2", ctx, 4 * n,
            lambda cfg, n=n: (_z((4,) * n, cfg), _zero(cfg)),
        )
    for n in range(1, 4):
        yield congruence_case(
            f"zeta*({{1,3}}^{n},1) == 2(-4)^-n zeta({4 * n + 1}) mod pi^2", ctx, 4 * n + 1,
            lambda cfg, n=n: (_zs(_OT(n) + (1,), cfg), _zeta(4 * n + 1, cfg) * (2 * _neg4(-n))),
        )


# -- I_1 of {1,3}^n -------------------------------------------------------

def lemma210_rhs(n: int, cfg: EvalConfig) -> BigReal:
    acc = _sum(
        (_zeta(4 * i + 1, cfg) * _z1(_TO(n - i) + (3,), cfg) * (2 * _neg4(-i)) for i in range(n + 1)), cfg
    )
    return acc + _zeta(4 * n + 5, cfg) * (2 * (_neg4(-n - 1) - 2))


def i1_expansion(n: int, cfg: EvalConfig) -> BigReal:
    """``zeta^*(I_1({1,3}^(n+1)))`` expanded through depth-one pieces."""
    acc = _z1(_TO(n + 1), cfg)
    for i in range(1, n + 2):
        acc = acc + _z(_OT(i), cfg) * _z1(_TO(n + 1 - i), cfg)
        acc = acc - _zs(_OT(i - 1) + (1,), cfg) * _z1(_TO(n + 1 - i) + (3,), cfg)
    return acc


def suite_lemma2_10(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        w = 4 * n + 5
        yield numeric_case(
            f"n={n}: zeta*(I_1({{1,3}}^{n + 1})) prefix/suffix expansion", ctx,
            lambda cfg, n=n: (_ev(smzv_coefficient_symbolic(_OT(n + 1), 1), cfg), i1_expansion(n, cfg)),
        )
        yield congruence_case(
            f"n={n}: zeta*(I_1({{1,3}}^{n + 1})) == 2((-4)^-(n+1) - 2) zeta({w}) mod pi^2", ctx, w,
            lambda cfg, n=n: (
                _ev(smzv_coefficient_symbolic(_OT(n + 1), 1), cfg),
                _zeta(4 * n + 5, cfg) * (2 * (_neg4(-n - 1) - 2)),
            ),
        )
        yield congruence_case(
            f"n={n}: zeta*_1({{3,1}}^{n + 1}) == sum 2(-4)^-i zeta*(4i+1) zeta*_1({{3,1}}^(n-i),3) + ... mod pi^2",
            ctx, w,
            lambda cfg, n=n: (_z1(_TO(n + 1), cfg), lemma210_rhs(n, cfg)),
        )


# -- 1I1 of {1,3}^n --------------------------------------------------------

def prop211_rhs(n: int, cfg: EvalConfig) -> BigReal:
    acc = _sum(
        (_zeta(4 * a + 1, cfg) * _zeta(4 * b + 1, cfg) * (_neg4(-n) - _neg4(-a) - _neg4(-b)) for a, b in _pairs(n)),
        cfg,
    )
    return acc * -4


def prop211_product_form(n: int, cfg: EvalConfig) -> BigReal:
    """Coefficient of ``u^(4n+2)`` in the product of prefix and suffix series."""
    acc = _sum((_z1(_TO(a), cfg) * _z1(_OT(b), cfg) for a, b in _pairs(n)), cfg)
    return acc - _sum((_z1(_OT(a) + (1,), cfg) * _z1(_TO(b) + (3,), cfg) for a, b in _pairs(n - 1)), cfg)


def z1_13_1_closed(n: int, cfg: EvalConfig) -> BigReal:
    """Closed form of ``zeta^*_1({1,3}^n, 1)`` through even zeta values and ``zeta({4}^m)``."""
    first = _sum(
        (_zeta(4 * i + 2, cfg) * _z((4,) * (n - i), cfg) * ((-1) ** (n - i) * (4 * i + 1)) for i in range(n + 1)),
        cfg,
    )
    second = _zero(cfg)
    for n1 in range(n + 1):
        for n2 in range(n - n1 + 1):
            n3 = n - n1 - n2
            second = second + _zeta(4 * n1 + 1, cfg) * _zeta(4 * n2 + 1, cfg) * _z((4,) * n3, cfg) * (-1) ** n3
    return first * _neg4(-n) + second * _neg4(1 - n)


def suite_prop2_11(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        yield congruence_case(
            f"n={n}: zeta*(1I1({{1,3}}^{n})) == -4 sum ((-4)^-n - (-4)^-n1 - (-4)^-n2) zeta*zeta* mod pi^2",
            ctx, 4 * n + 2,
            lambda cfg, n=n: (_ev(stadic_coefficient(1, 1, _OT(n)), cfg), prop211_rhs(n, cfg)),
        )
        yield numeric_case(
            f"n={n}: zeta*(1I1({{1,3}}^{n})) = generating-function product coefficient", ctx,
            lambda cfg, n=n: (_ev(stadic_coefficient(1, 1, _OT(n)), cfg), prop211_product_form(n, cfg)),
        )
    for n in range(4):
        yield numeric_case(
            f"zeta*_1({{1,3}}^{n}) = -zeta*({{1,3}}^{n},1)", ctx,
            lambda cfg, n=n: (_z1(_OT(n), cfg), -_zs(_OT(n) + (1,), cfg)),
        )
    for n in range(1, 3):
        yield congruence_case(
            f"zeta*_1({{1,3}}^{n}) == -2(-4)^-n zeta({4 * n + 1}) mod pi^2", ctx, 4 * n + 1,
            lambda cfg, n=n: (_z1(_OT(n), cfg), _zeta(4 * n + 1, cfg) * (-2 * _neg4(-n))),
        )
    for n in range(3):
        yield numeric_case(
            f"zeta*_1({{1,3}}^{n},1) closed form", ctx,
            lambda cfg, n=n: (_z1(_OT(n) + (1,), cfg), z1_13_1_closed(n, cfg)),
        )
        yield congruence_case(
            f"zeta*_1({{1,3}}^{n},1) == -4 (-4)^-n sum zeta*zeta* mod pi^2", ctx, 4 * n + 2,
            lambda cfg, n=n: (
                _z1(_OT(n) + (1,), cfg),
                _sum((_zeta(4 * a + 1, cfg) * _zeta(4 * b + 1, cfg) for a, b in _pairs(n)), cfg) * (-4 * _neg4(-n)),
            ),
        )


# -- SMZV closed forms -----------------------------------------------------

def suite_thm1_1(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        for j in range(2):
            yield numeric_case(
                f"n={n}, t^{j}: zeta*_S2({{1,3}}^{n}) closed form", ctx,
                lambda cfg, n=n, j=j: (t_adic_smzv(_OT(n), 2, cfg)[j], thm11_rhs(n, cfg)[j]),
            )


def suite_thm1_3(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        for j in range(3):
            yield numeric_case(
                f"n={n}, t^{j}: zeta*_S3({{3,1}}^{n}) closed form", ctx,
                lambda cfg, n=n, j=j: (t_adic_smzv(_TO(n), 3, cfg)[j], thm13_rhs(n, cfg)[j]),
            )
    for n in range(3):
        for j in range(3):
            yield congruence_case(
                f"n={n}, t^{j}: zeta*_S3({{3,1}}^{n}) reduction mod pi^2", ctx, 4 * n + j,
                lambda cfg, n=n, j=j: (t_adic_smzv(_TO(n), 3, cfg)[j], _ev(thm13_rhs_mod_pi2(n)[j], cfg)),
            )


def suite_main(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        for j in range(3):
            yield congruence_case(
                f"n={n}, t^{j}: zeta*_S3({{1,3}}^{n}) main formula with t^1 factor 2((-4)^-n - 4), mod pi^2", ctx, 4 * n + j,
                lambda cfg, n=n, j=j: (t_adic_smzv(_OT(n), 3, cfg)[j], main_rhs(n, cfg)[j]),
            )
    for n in range(3):
        yield congruence_case(
            f"n={n}, t^1: zeta*_S3({{1,3}}^{n}) with t^1 factor 2((-4)^-n - 2), mod pi^2", ctx, 4 * n + 1,
            lambda cfg, n=n: (t_adic_smzv(_OT(n), 3, cfg)[1], main_rhs(n, cfg, corrected=True)[1]),
        )
    for n in range(3):
        yield numeric_case(
            f"n={n}, t^0: difference is 2(-4)^n pi^(4n)/(4n+2)! - delta", ctx,
            lambda cfg, n=n: (
                t_adic_smzv(_OT(n), 3, cfg)[0] - main_rhs(n, cfg)[0],
                pi_value(cfg) ** (4 * n) * Fraction(2 * (-4) ** n, math.factorial(4 * n + 2)) - _one(cfg) * (n == 0),
            ),
        )


def i2_31_split(n: int, cfg: EvalConfig) -> BigReal:
    """Sum over ``zeta*(2n1+1) zeta*(2n2+1)``, n1+n2 = 2n, scaled by 2(-4)^-n."""
    return _sum((_zeta(2 * a + 1, cfg) * _zeta(2 * b + 1, cfg) for a, b in _pairs(2 * n)), cfg) * (2 * _neg4(-n))


def i2_31_grouped(n: int, cfg: EvalConfig) -> BigReal:
    """Same quantity with the sum split by residue of the indices mod 4."""
    ones = _sum((_zeta(4 * a + 1, cfg) * _zeta(4 * b + 1, cfg) for a, b in _pairs(n)), cfg)
    threes = _sum((_zeta(4 * a + 3, cfg) * _zeta(4 * b + 3, cfg) for a, b in _pairs(n - 1)), cfg)
    return (ones + threes) * (2 * _neg4(-n))


def _odd_pairs(n: int, cfg: EvalConfig, f) -> BigReal:
    return _sum((_zeta(4 * a + 1, cfg) * _zeta(4 * b + 1, cfg) * f(a, b) for a, b in _pairs(n)), cfg)


def last_first_form(n: int, cfg: EvalConfig) -> BigReal:
    eight = _odd_pairs(n, cfg, lambda a, b: 8)
    four = _odd_pairs(n, cfg, lambda a, b: 4 * (_neg4(-n) - _neg4(-a) - _neg4(-b)))
    threes = _sum((_zeta(4 * a + 3, cfg) * _zeta(4 * b + 3, cfg) for a, b in _pairs(n - 1)), cfg)
    return eight + four - _odd_pairs(n, cfg, lambda a, b: 2 * _neg4(-n)) - threes * (2 * _neg4(-n))


def last_second_form(n: int, cfg: EvalConfig) -> BigReal:
    prod = _odd_pairs(n, cfg, lambda a, b: 2 * (_neg4(-a) - 2) * (_neg4(-b) - 2))
    threes = _sum((_zeta(4 * a + 3, cfg) * _zeta(4 * b + 3, cfg) for a, b in _pairs(n - 1)), cfg)
    return prod - threes * (2 * _neg4(-n))


def closure_value(n: int, cfg: EvalConfig) -> BigReal:
    """``zeta*(I_2({1,3}^n))`` assembled from the three earlier congruences."""
    return lemma28_rhs(1, 3, n, cfg) - prop211_rhs(n, cfg) - i2_31_split(n, cfg)


def suite_proof_chain(ctx: _Ctx) -> Iterator[CaseResult]:
    for n in range(3):
        k = _OT(n)
        yield numeric_case(
            f"n={n}: zeta*(I_0({{1,3}}^{n})) = 2(-4)^n pi^(4n)/(4n+2)!", ctx,
            lambda cfg, k=k, n=n: (
                _ev(smzv_coefficient_symbolic(k, 0), cfg),
                pi_value(cfg) ** (4 * n) * Fraction(2 * (-4) ** n, math.factorial(4 * n + 2)),
            ),
        )
        yield numeric_case(
            f"n={n}: zeta*(I_1({{1,3}}^{n})) = order-2 closed form t^1", ctx,
            lambda cfg, k=k, n=n: (_ev(smzv_coefficient_symbolic(k, 1), cfg), thm11_rhs(n, cfg)[1]),
        )
        yield congruence_case(
            f"n={n}: zeta*(I_1({{1,3}}^{n})) == 2((-4)^-n - 2) zeta*({4 * n + 1}) mod pi^2", ctx, 4 * n + 1,
            lambda cfg, k=k, n=n: (
                _ev(smzv_coefficient_symbolic(k, 1), cfg), _zeta(4 * n + 1, cfg) * (2 * (_neg4(-n) - 2))
            ),
        )
        yield congruence_case(
            f"n={n}: zeta*(I_2({{3,1}}^{n})) == 2(-4)^-n sum zeta*(2n1+1) zeta*(2n2+1) mod pi^2", ctx, 4 * n + 2,
            lambda cfg, n=n: (_ev(smzv_coefficient_symbolic(_TO(n), 2), cfg), i2_31_split(n, cfg)),
        )
        yield numeric_case(
            f"n={n}: regrouping of the {{3,1}} t^2 sum by residue mod 4", ctx,
            lambda cfg, n=n: (i2_31_split(n, cfg), i2_31_grouped(n, cfg)),
        )
        yield congruence_case(
            f"n={n}: I_2({{1,3}}^{n}) + 1I1({{1,3}}^{n}) + I_2({{3,1}}^{n}) == 8 sum mod pi^2", ctx, 4 * n + 2,
            lambda cfg, n=n: (_ev(lemma28_lhs_symbolic(1, 3, n), cfg), lemma28_rhs(1, 3, n, cfg)),
        )
        yield numeric_case(
            f"n={n}: both expressions for zeta*(I_2({{1,3}}^{n})) agree", ctx,
            lambda cfg, n=n: (last_first_form(n, cfg), last_second_form(n, cfg)),
        )
        yield numeric_case(
            f"n={n}: assembled value equals the final expression", ctx,
            lambda cfg, n=n: (closure_value(n, cfg), last_second_form(n, cfg)),
        )
        yield congruence_case(
            f"n={n}: zeta*(I_2({{1,3}}^{n})) == assembled value mod pi^2", ctx, 4 * n + 2,
            lambda cfg, k=k, n=n: (_ev(smzv_coefficient_symbolic(k, 2), cfg), closure_value(n, cfg)),
        )


# -- exceptional coefficients ---------------------------------------------

def _product(cfg: EvalConfig, *indices) -> BigReal:
    acc = _one(cfg)
    for k in indices:
        acc = acc * _z(k, cfg)
    return acc


def s3_1313_t2_expected(cfg: EvalConfig) -> BigReal:
    return (
        _product(cfg, (2,), (3,), (5,)) * Fraction(1, 2)
        + _product(cfg, (2,), (3, 5))
        - _product(cfg, (3,), (3,), (4,)) * Fraction(1, 2)
        - _product(cfg, (3,), (7,)) * Fraction(1, 4)
        + _product(cfg, (5,), (5,)) * Fraction(81, 8)
        - _product(cfg, (10,)) * Fraction(103, 10)
    )


def s4_3131_t3_expected(cfg: EvalConfig) -> BigReal:
    return (
        _product(cfg, (11,)) * Fraction(605, 4)
        + _product(cfg, (3,), (3,), (5,)) * Fraction(19, 4)
        + _product(cfg, (3,), (3, 5)) * 2
        - _product(cfg, (3, 3, 5)) * 2
    )


def s4_1313_t3_expected(cfg: EvalConfig) -> BigReal:
    return (
        _product(cfg, (11,)) * Fraction(-845, 4)
        - _product(cfg, (3,), (3,), (5,)) * Fraction(9, 4)
        - _product(cfg, (3,), (3, 5))
        + _product(cfg, (3, 3, 5)) * 2
    )


def suite_exceptional(ctx: _Ctx) -> Iterator[CaseResult]:
    c50 = ctx.at_least(50)
    yield numeric_case(
        "t^2 coefficient of zeta*_S3(1,3,1,3)", c50,
        lambda cfg: (t_adic_smzv((1, 3, 1, 3), 3, cfg)[2], s3_1313_t2_expected(cfg)),
        tol=mpmath.mpf(10) ** -30,
    )
    c80 = ctx.at_least(80)
    yield congruence_case(
        "t^3 coefficient of zeta*_S4(3,1,3,1) mod pi^2", c80, 11,
        lambda cfg: (_ev(smzv_coefficient_symbolic((3, 1, 3, 1), 3), cfg), s4_3131_t3_expected(cfg)),
    )
    yield congruence_case(
        "t^3 coefficient of zeta*_S4(1,3,1,3) mod pi^2", c80, 11,
        lambda cfg: (_ev(smzv_coefficient_symbolic((1, 3, 1, 3), 3), cfg), s4_1313_t3_expected(cfg)),
    )


def suite_smzv_definition(ctx: _Ctx) -> Iterator[CaseResult]:
    for w in range(1, 9):
        def compute(cfg, w=w):
            worst = _zero(cfg)
            for k in compositions(w):
                a = t_adic_smzv(k, 3, cfg)
                b = t_adic_smzv_definitional(k, 3, cfg)
                for j in range(3):
                    d = a[j] - b[j]
                    if abs(d) > abs(worst):
                        worst = d
            return worst, _zero(cfg)

        yield numeric_case(f"weight {w}: double-sum definition vs I_j form, order 3", ctx, compute)


SUITES: dict[str, Callable[[_Ctx], Iterator[CaseResult]]] = {
    "lemma2.1": suite_lemma2_1,
    "lemma2.2": suite_lemma2_2,
    "lemma2.3": suite_lemma2_3,
    "lemma2.4": suite_lemma2_4,
    "lemma2.5": suite_lemma2_5,
    "lemma2.7": suite_lemma2_7,
    "lemma2.8": suite_lemma2_8,
    "closed-forms": suite_closed_forms,
    "lemma2.10": suite_lemma2_10,
    "prop2.11": suite_prop2_11,
    "thm1.1": suite_thm1_1,
    "thm1.3": suite_thm1_3,
    "main": suite_main,
    "proof-chain": suite_proof_chain,
    "exceptional-coefficients": suite_exceptional,
    "smzv-definition": suite_smzv_definition,
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, cfg: Optional[EvalConfig] = None, extras=None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or EvalConfig()
    ctx = _Ctx(cfg, extras)
    return SuiteReport(name, cfg.precision_digits, list(SUITES[name](ctx)))
