r"""
t-adic symmetric multiple zeta values and closed-form right-hand sides.

For an index ``k = (k_1, ..., k_r)``

.. MATH::

    \zeta^*_{\widehat S}(k) = \sum_{i=0}^r (-1)^{k_r+\cdots+k_{i+1}}
        \zeta^*(k_1,\ldots,k_i) \sum_{m\ge0} \zeta^*_m(k_r,\ldots,k_{i+1}) t^m,

and the coefficient of ``t^j`` equals ``zeta^*(I_j(k))``. Truncations
modulo ``t^m`` are :class:`TSeries` objects.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import mpmath

from .index_algebra import (
    CombinationLike,
    Index,
    IndexCombination,
    as_combination,
    m_i_n,
    make_index,
    reverse,
    stuffle,
)
from .numeric_eval import (
    BigReal,
    EvalConfig,
    eval_combination,
    pi_value,
    zeta_numeric,
    zeta_star_numeric,
)
from .regularization import zeta_star_m_symbolic, zeta_star_symbolic

Coeff = Union[IndexCombination, BigReal]


class TSeries:
    """Power series in ``t`` truncated modulo ``t**order``.

    Coefficients are all :class:`IndexCombination` (symbolic mode) or all
    :class:`BigReal` (numeric mode).
    """

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs: Sequence[Coeff]):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("order must be positive")
        if all(isinstance(c, IndexCombination) for c in coeffs):
            self.mode = "symbolic"
        elif all(isinstance(c, BigReal) for c in coeffs):
            self.mode = "numeric"
        else:
            raise TypeError("symbolic and numeric coefficients cannot be mixed")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> Coeff:
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TSeries(self.coeffs[:order])

    def _check(self, other: "TSeries"):
        if not isinstance(other, TSeries):
            raise TypeError("expected a TSeries")
        if other.mode != self.mode:
            raise TypeError("symbolic and numeric series cannot be mixed")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        m = min(self.order, other.order)
        return TSeries([self[j] + other[j] for j in range(m)])

    def __neg__(self) -> "TSeries":
        return TSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self + (-other)

    def __mul__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            return TSeries([c * other for c in self.coeffs])
        self._check(other)
        m = min(self.order, other.order)
        out = []
        for j in range(m):
            acc = None
            for i in range(j + 1):
                if self.mode == "symbolic":
                    term = stuffle(self[i], other[j - i])
                else:
                    term = self[i] * other[j - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return TSeries(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if self.mode == "numeric":
            body = ", ".join(mpmath.nstr(c.value, 15) for c in self.coeffs)
        else:
            body = ", ".join(str(c) for c in self.coeffs)
        return f"TSeries[{self.mode}]({body})"

    def to_json_obj(self, digits: int = 60) -> dict:
        if self.mode == "numeric":
            coeffs = [c.to_decimal(digits) for c in self.coeffs]
        else:
            coeffs = [c.to_json_obj() for c in self.coeffs]
        return {"order": self.order, "coeffs": coeffs}

    def to_json(self, digits: int = 60) -> str:
        return json.dumps(self.to_json_obj(digits))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TSeries":
        coeffs = obj["coeffs"]
        if len(coeffs) != obj["order"]:
            raise ValueError("order does not match number of coefficients")
        if coeffs and isinstance(coeffs[0], str):
            out = []
            for s in coeffs:
                digits = max(len(s.split("e")[0].lstrip("-").replace(".", "")), 1)
                prec = int(math.ceil(digits * math.log2(10))) + 8
                with mpmath.workprec(prec):
                    v = mpmath.mpf(s)
                    err = abs(v) * mpmath.mpf(10) ** (1 - digits) if v else mpmath.mpf(10) ** (-digits)
                out.append(BigReal(v, err, prec))
            return cls(out)
        return cls([IndexCombination.from_json_obj(c) for c in coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TSeries":
        return cls.from_json_obj(json.loads(text))


# -- t-adic SMZVs ----------------------------------------------------------

def smzv_coefficient_symbolic(k: Iterable[int], j: int) -> IndexCombination:
    """``zeta^*(I_j(k))`` as an admissible combination."""
    return zeta_star_symbolic(m_i_n(0, j, make_index(k)))


def t_adic_smzv_symbolic(k: Iterable[int], order: int) -> TSeries:
    k = make_index(k)
    return TSeries([smzv_coefficient_symbolic(k, j) for j in range(order)])


def t_adic_smzv(k: Iterable[int], order: int, cfg: Optional[EvalConfig] = None) -> TSeries:
    """Numeric ``zeta^*_{S_order}(k)``."""
    if order < 1:
        raise ValueError("order must be positive")
    cfg = cfg or EvalConfig()
    k = make_index(k)
    return TSeries([eval_combination(smzv_coefficient_symbolic(k, j), cfg) for j in range(order)])


def t_adic_smzv_definitional(k: Iterable[int], order: int, cfg: Optional[EvalConfig] = None) -> TSeries:
    """Same series from the defining double sum, multiplying numeric factors."""
    cfg = cfg or EvalConfig()
    k = make_index(k)
    r = len(k)
    coeffs = []
    for j in range(order):
        acc = BigReal.zero(cfg.work_bits)
        for i in range(r + 1):
            sign = -1 if sum(k[i:]) % 2 else 1
            left = zeta_star_numeric(k[:i], cfg)
            right = eval_combination(zeta_star_m_symbolic(j, reverse(k[i:])), cfg)
            acc = acc + left * right * sign
        coeffs.append(acc)
    return TSeries(coeffs)


def stadic_coefficient(m: int, n: int, k: Iterable[int]) -> IndexCombination:
    """``zeta^*({}_mI_n(k))``; for ``(m, n) = (1, 1)`` the coefficient of ``-st``."""
    return zeta_star_symbolic(m_i_n(m, n, make_index(k)))


# -- closed forms ----------------------------------------------------------

def _neg4(e: int) -> Fraction:
    return Fraction(-4) ** e


def _pi_pow(pi: BigReal, e: int, cache: dict) -> BigReal:
    if e not in cache:
        cache[e] = pi ** e
    return cache[e]


def _zs(s: int, cfg: EvalConfig) -> BigReal:
    return zeta_numeric(s, cfg)


def _zero(cfg: EvalConfig) -> BigReal:
    return BigReal.zero(cfg.work_bits)


def thm11_rhs(n: int, cfg: Optional[EvalConfig] = None) -> TSeries:
    """Closed form of ``zeta^*_{S_2}({1,3}^n)``."""
    cfg = cfg or EvalConfig()
    pi = pi_value(cfg)
    pw: dict = {}
    c0 = _pi_pow(pi, 4 * n, pw) * Fraction(2 * (-4) ** n, math.factorial(4 * n + 2))
    c1 = _zero(cfg)
    for n0 in range(n + 1):
        n1 = n - n0
        q = _neg4(n0 + 1) * (2 - _neg4(-n1)) / math.factorial(4 * n0 + 2)
        c1 = c1 + _pi_pow(pi, 4 * n0, pw) * _zs(4 * n1 + 1, cfg) * q
    for n0 in range(1, 2 * n, 2):
        n1 = 2 * n - n0
        q = Fraction(2) ** (n0 - n1 + 2) / math.factorial(2 * n0 + 2)
        c1 = c1 - _pi_pow(pi, 2 * n0, pw) * _zs(2 * n1 + 1, cfg) * (q * (-1) ** n)
    return TSeries([c0, c1])


def thm13_rhs(n: int, cfg: Optional[EvalConfig] = None) -> TSeries:
    """Closed form of ``zeta^*_{S_3}({3,1}^n)``."""
    cfg = cfg or EvalConfig()
    pi = pi_value(cfg)
    pw: dict = {}
    c0 = _pi_pow(pi, 4 * n, pw) * Fraction(2 * (-4) ** n, math.factorial(4 * n + 2))
    c1 = _zero(cfg)
    for n0 in range(2 * n + 1):
        n1 = 2 * n - n0
        q = Fraction((-1) ** (n + 1) * (-1) ** n0) * Fraction(2) ** (n0 - n1 + 2) / math.factorial(2 * n0 + 2)
        c1 = c1 + _pi_pow(pi, 2 * n0, pw) * _zs(2 * n1 + 1, cfg) * q
    c2 = _zero(cfg)
    for n0 in range(2 * n + 1):
        for n1 in range(2 * n - n0 + 1):
            n2 = 2 * n - n0 - n1
            q = Fraction((-1) ** n * (-1) ** n0) * Fraction(2) ** (n0 - n1 - n2 + 2) / math.factorial(2 * n0 + 2)
            c2 = c2 + _pi_pow(pi, 2 * n0, pw) * _zs(2 * n1 + 1, cfg) * _zs(2 * n2 + 1, cfg) * q
    return TSeries([c0, c1, c2])


def _zeta_product(*args: int) -> IndexCombination:
    """``prod zeta^*(a)`` written in the stuffle algebra."""
    acc = IndexCombination.one()
    for a in args:
        acc = stuffle(acc, (a,))
    return zeta_star_symbolic(acc)


def thm13_rhs_mod_pi2(n: int) -> TSeries:
    """Representative of ``zeta^*_{S_3}({3,1}^n)`` modulo ``pi^2``, symbolic."""
    c0 = IndexCombination.one() if n == 0 else IndexCombination.zero()
    c1 = _zeta_product(4 * n + 1) * (-2 * _neg4(-n))
    c2 = IndexCombination.zero()
    for n1 in range(2 * n + 1):
        c2 = c2 + _zeta_product(2 * n1 + 1, 2 * (2 * n - n1) + 1)
    return TSeries([c0, c1, c2 * (2 * _neg4(-n))])


# Default t^1 factor is 2((-4)^-n - 4). Reducing the order-2 closed form
# modulo pi^2 gives 2((-4)^-n - 2) instead; ``corrected=True`` selects that.
def _t1_shift(corrected: bool) -> int:
    return 2 if corrected else 4


def main_rhs_symbolic(n: int, corrected: bool = False) -> TSeries:
    """Representative of ``zeta^*_{S_3}({1,3}^n)`` modulo ``pi^2``, symbolic."""
    c0 = IndexCombination.one() if n == 0 else IndexCombination.zero()
    c1 = _zeta_product(4 * n + 1) * (2 * (_neg4(-n) - _t1_shift(corrected)))
    c2 = IndexCombination.zero()
    for n1 in range(n):
        c2 = c2 + _zeta_product(4 * n1 + 3, 4 * (n - 1 - n1) + 3) * (-2 * _neg4(-n))
    for n1 in range(n + 1):
        n2 = n - n1
        q = 2 * (_neg4(-n1) - 2) * (_neg4(-n2) - 2)
        c2 = c2 + _zeta_product(4 * n1 + 1, 4 * n2 + 1) * q
    return TSeries([c0, c1, c2])


def main_rhs(n: int, cfg: Optional[EvalConfig] = None, corrected: bool = False) -> TSeries:
    """Numeric value of the mod-``pi^2`` representative for ``zeta^*_{S_3}({1,3}^n)``."""
    cfg = cfg or EvalConfig()
    c0 = BigReal.exact(1 if n == 0 else 0, cfg.work_bits)
    c1 = _zs(4 * n + 1, cfg) * (2 * (_neg4(-n) - _t1_shift(corrected)))
    c2 = _zero(cfg)
    for n1 in range(n):
        c2 = c2 + _zs(4 * n1 + 3, cfg) * _zs(4 * (n - 1 - n1) + 3, cfg) * (-2 * _neg4(-n))
    for n1 in range(n + 1):
        n2 = n - n1
        q = 2 * (_neg4(-n1) - 2) * (_neg4(-n2) - 2)
        c2 = c2 + _zs(4 * n1 + 1, cfg) * _zs(4 * n2 + 1, cfg) * q
    return TSeries([c0, c1, c2])


def evaluate_series(series: TSeries, cfg: Optional[EvalConfig] = None) -> TSeries:
    """Numeric image of a symbolic series."""
    if series.mode == "numeric":
        return series
    return TSeries([eval_combination(c, cfg) for c in series.coeffs])
