r"""
Arbitrary-precision evaluation of multiple zeta values.

The evaluator writes an admissible index as an iterated integral over
``[0, 1]`` in the letters ``x0 = dt/t`` and ``x1 = dt/(1-t)`` and splits the
path at ``1/2``. Both halves become multiple polylogarithms at ``1/2``:

.. MATH::

    \zeta(w) = \sum_{w = uv} \operatorname{Li}_{\tau(u)}(1/2)\,
        \operatorname{Li}_{v}(1/2),

where ``tau`` reverses a word and swaps ``x0 <-> x1``. Every polylogarithm
series converges like ``2^{-m}``, so the number of terms grows linearly in
the requested digits. The sums are carried out in binary fixed point on
Python integers, which keeps results bit-for-bit reproducible.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass, replace
from fractions import Fraction
from numbers import Rational
from pathlib import Path
from typing import Iterable, Optional, Union

import mpmath

from .index_algebra import CombinationLike, Index, as_combination, format_index, is_admissible
from .regularization import zeta_star_symbolic

LOG2_10 = math.log2(10)
# fixed-point bits kept beyond the working precision; absorbs truncation
# of the floor divisions (at most a few thousand ulps per value)
_EXTRA_BITS = 40

CACHE_ENV = "MZV_CACHE_DIR"
CACHE_FILENAME = "mzv_values.jsonl"


class NonAdmissibleIndexError(ValueError):
    pass


@dataclass(frozen=True)
class EvalConfig:
    precision_digits: int = 60
    guard_digits: int = 10
    cache_path: Optional[str] = None

    def __post_init__(self):
        if self.precision_digits < 1 or self.guard_digits < 1:
            raise ValueError("precision_digits and guard_digits must be positive")

    @property
    def work_digits(self) -> int:
        return self.precision_digits + self.guard_digits

    @property
    def work_bits(self) -> int:
        return bits_for_digits(self.work_digits)

    def with_precision(self, digits: int) -> "EvalConfig":
        return replace(self, precision_digits=digits)

    def with_guard(self, guard: int) -> "EvalConfig":
        return replace(self, guard_digits=guard)

    def resolved_cache_path(self) -> Optional[Path]:
        env = os.environ.get(CACHE_ENV)
        if env:
            return Path(env) / CACHE_FILENAME
        if self.cache_path:
            return Path(self.cache_path)
        return None


def bits_for_digits(digits: int) -> int:
    return int(math.ceil(digits * LOG2_10)) + 8


@dataclass(frozen=True)
class BigReal:
    """An mpmath value together with an absolute error bound.

    ``prec`` is the binary precision arithmetic is carried out at.
    """

    value: mpmath.mpf
    error: mpmath.mpf
    prec: int

    @classmethod
    def exact(cls, q: Union[int, Fraction], prec: int) -> "BigReal":
        with mpmath.workprec(prec):
            q = Fraction(q)
            v = mpmath.mpf(q.numerator) / q.denominator
            err = abs(v) * mpmath.ldexp(1, -prec) if q.denominator != 1 else mpmath.mpf(0)
        return cls(v, err, prec)

    @classmethod
    def zero(cls, prec: int) -> "BigReal":
        return cls(mpmath.mpf(0), mpmath.mpf(0), prec)

    def _ulp(self, v, prec):
        return abs(v) * mpmath.ldexp(1, 1 - prec)

    def __add__(self, other) -> "BigReal":
        if isinstance(other, Rational):
            other = BigReal.exact(other, self.prec)
        if not isinstance(other, BigReal):
            return NotImplemented
        prec = max(self.prec, other.prec)
        with mpmath.workprec(prec):
            v = self.value + other.value
            return BigReal(v, self.error + other.error + self._ulp(v, prec), prec)

    __radd__ = __add__

    def __neg__(self) -> "BigReal":
        # mpf negation rounds to the global context precision
        with mpmath.workprec(self.prec):
            return BigReal(-self.value, self.error, self.prec)

    def __sub__(self, other) -> "BigReal":
        return self + (-other)

    def __rsub__(self, other) -> "BigReal":
        return (-self) + other

    def __mul__(self, other) -> "BigReal":
        if isinstance(other, Rational):
            q = Fraction(other)
            with mpmath.workprec(self.prec):
                v = self.value * q.numerator / q.denominator
                err = self.error * abs(mpmath.mpf(q.numerator) / q.denominator) + 2 * self._ulp(v, self.prec)
            return BigReal(v, err, self.prec)
        if not isinstance(other, BigReal):
            return NotImplemented
        prec = max(self.prec, other.prec)
        with mpmath.workprec(prec):
            v = self.value * other.value
            err = (
                abs(self.value) * other.error
                + abs(other.value) * self.error
                + self.error * other.error
                + self._ulp(v, prec)
            )
        return BigReal(v, err, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigReal":
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "BigReal":
        out = BigReal.exact(1, self.prec)
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self):
        with mpmath.workprec(self.prec):
            return abs(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def to_decimal(self, digits: int) -> str:
        """Decimal string with ``digits`` significant digits, deterministic."""
        with mpmath.workprec(self.prec):
            return mpmath.nstr(self.value, digits, strip_zeros=False, min_fixed=-3, max_fixed=3)

    def __repr__(self) -> str:
        return f"BigReal({mpmath.nstr(self.value, 25)} ± {mpmath.nstr(self.error, 3)})"


# -- fixed-point polylogarithms at 1/2 -------------------------------------

def _word(k: Index) -> list[int]:
    # zeta(k_1..k_r) with n_1 < ... < n_r is the integral of
    # x0^{k_r-1} x1 ... x0^{k_1-1} x1, outermost letter first
    w: list[int] = []
    for e in reversed(k):
        w.extend([0] * (e - 1))
        w.append(1)
    return w


def _num_terms(bits: int, length: int) -> int:
    # coefficients of a word's series grow at most like (1 + log m)^length
    n = bits + 8
    for _ in range(3):
        n = bits + 8 + int(math.ceil(length * math.log2(1 + math.log(n))))
    return n


def _suffix_values(word: list[int], nterms: int, bits: int) -> list[int]:
    """``out[i]`` is the integral of ``word[i:]`` from 0 to 1/2, scaled by 2**bits.

    The power series of a word's integral is built letter by letter from the
    inside out: prepending x0 divides the m-th coefficient by m; prepending x1
    replaces it by the strict partial sum divided by m.
    """
    size = nterms + 1
    rng = range(1, size)
    c = [0] * size
    c[0] = 1 << bits
    out = [0] * (len(word) + 1)
    out[len(word)] = 1 << bits
    for i in range(len(word) - 1, -1, -1):
        if word[i] == 0:
            c = [0] + [c[m] // m for m in rng]
        else:
            new = [0] * size
            acc = 0
            for m in rng:
                acc += c[m - 1]
                new[m] = acc // m
            c = new
        out[i] = sum(c[m] << (nterms - m) for m in rng) >> nterms
    return out


def _zeta_fixed(k: Index, bits: int) -> int:
    w = _word(k)
    n = len(w)
    if n == 0:
        return 1 << bits
    dual = [1 - a for a in reversed(w)]
    nterms = _num_terms(bits, n)
    lv = _suffix_values(w, nterms, bits)
    rv = _suffix_values(dual, nterms, bits)
    total = sum(rv[n - i] * lv[i] for i in range(n + 1))
    return total >> bits


# -- cache -----------------------------------------------------------------

class ValueCache:
    """Persistent map ``(index, digits) -> decimal string``.

    Stored as JSON lines ``{"index": [...], "digits": P, "value": "..."}``,
    appended; on load the last record for a key wins.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path else None
        self._lock = threading.Lock()
        self._data: dict[tuple[Index, int], str] = {}
        if self.path and self.path.exists():
            self._load()

    def _load(self):
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    self._data[(tuple(rec["index"]), int(rec["digits"]))] = rec["value"]
                except (ValueError, KeyError):
                    continue

    def get(self, k: Index, digits: int) -> Optional[str]:
        with self._lock:
            return self._data.get((tuple(k), digits))

    def put(self, k: Index, digits: int, value: str) -> None:
        with self._lock:
            self._data[(tuple(k), digits)] = value
            if self.path:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a") as fh:
                    fh.write(json.dumps({"index": list(k), "digits": digits, "value": value}) + "\n")

    def __len__(self) -> int:
        return len(self._data)


_caches: dict[Optional[Path], ValueCache] = {}
_caches_lock = threading.Lock()


def get_cache(cfg: EvalConfig) -> ValueCache:
    path = cfg.resolved_cache_path()
    with _caches_lock:
        if path not in _caches:
            _caches[path] = ValueCache(path)
        return _caches[path]


def cache_get(k: Index, cfg: EvalConfig) -> Optional[str]:
    return get_cache(cfg).get(k, cfg.precision_digits)


def cache_put(k: Index, cfg: EvalConfig, value: str) -> None:
    get_cache(cfg).put(k, cfg.precision_digits, value)


# -- public evaluation API -------------------------------------------------

_memo: dict[tuple[Index, int], BigReal] = {}
_memo_lock = threading.Lock()


def _from_string(s: str, cfg: EvalConfig) -> BigReal:
    prec = cfg.work_bits
    with mpmath.workprec(prec):
        v = mpmath.mpf(s)
    return BigReal(v, mpmath.mpf(10) ** (-cfg.work_digits + 1), prec)


def eval_admissible(k: Iterable[int], cfg: Optional[EvalConfig] = None) -> BigReal:
    """``zeta(k)`` for an admissible index, with error below ``10**-precision_digits``."""
    cfg = cfg or EvalConfig()
    k = tuple(k)
    if not is_admissible(k):
        raise NonAdmissibleIndexError(
            f"{format_index(k)} is not admissible; regularize it first "
            "(zeta_star_numeric or eval_combination(zeta_star_symbolic(k)))"
        )
    key = (k, cfg.work_digits)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    cached = cache_get(k, cfg) if cfg.resolved_cache_path() else None
    if cached is not None and len(cached.lstrip("-").replace(".", "")) >= cfg.work_digits:
        result = _from_string(cached, cfg)
    else:
        prec = cfg.work_bits
        bits = prec + _EXTRA_BITS
        fixed = _zeta_fixed(k, bits)
        with mpmath.workprec(prec):
            v = mpmath.ldexp(mpmath.mpf(fixed), -bits)
        result = BigReal(v, mpmath.ldexp(1, -(prec - 4)), prec)
        if cfg.resolved_cache_path():
            cache_put(k, cfg, _cache_string(result, cfg))
    with _memo_lock:
        _memo[key] = result
    return result


def _cache_string(x: BigReal, cfg: EvalConfig) -> str:
    with mpmath.workprec(x.prec):
        return mpmath.nstr(x.value, cfg.work_digits + 2, strip_zeros=False, min_fixed=1, max_fixed=0)


def eval_combination(x: CombinationLike, cfg: Optional[EvalConfig] = None) -> BigReal:
    """Evaluate ``sum c * zeta(k)`` over an admissible combination.

    Guard digits are raised when large coefficients would otherwise eat
    into the requested precision.
    """
    cfg = cfg or EvalConfig()
    x = as_combination(x)
    for k in x.terms:
        if not is_admissible(k):
            raise NonAdmissibleIndexError(f"{format_index(k)} in combination is not admissible")
    mass = sum(abs(c) for _, c in x.items())
    extra = 0
    if mass > 1:
        extra = 10 * math.ceil((math.log10(mass) + 1) / 10)
    inner = cfg.with_guard(cfg.guard_digits + extra) if extra else cfg
    total = BigReal.zero(inner.work_bits)
    for k, c in x.items():
        total = total + eval_admissible(k, inner) * c
    return total


def zeta_star_numeric(k: CombinationLike, cfg: Optional[EvalConfig] = None) -> BigReal:
    """Regularized value ``zeta^*(k)`` for any index (``zeta^*(1) = 0``)."""
    return eval_combination(zeta_star_symbolic(k), cfg)


def zeta_numeric(s: int, cfg: Optional[EvalConfig] = None) -> BigReal:
    """Single zeta value ``zeta^*(s)``; zero for ``s == 1``."""
    if s == 1:
        return BigReal.zero((cfg or EvalConfig()).work_bits)
    return eval_admissible((s,), cfg)


def pi_value(cfg: Optional[EvalConfig] = None) -> BigReal:
    cfg = cfg or EvalConfig()
    prec = cfg.work_bits
    with mpmath.workprec(prec + 10):
        v = +mpmath.pi
    with mpmath.workprec(prec):
        v = +v
    return BigReal(v, mpmath.ldexp(1, -(prec - 2)), prec)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b[n]


def zeta_even(two_n: int) -> Fraction:
    """Rational ``c`` with ``zeta(2n) = c * pi**(2n)``."""
    if two_n <= 0 or two_n % 2:
        raise ValueError("argument must be a positive even integer")
    return abs(bernoulli(two_n)) * 2 ** (two_n - 1) / math.factorial(two_n)


def eval_direct(k: Iterable[int], terms: int = 10**5) -> float:
    """Low-precision oracle: truncated nested sum in floating point.

    Only for cross-checks; the truncation error decays like
    ``terms ** -(k_r - 1)``.
    """
    k = tuple(k)
    if not is_admissible(k):
        raise NonAdmissibleIndexError(format_index(k))
    if not k:
        return 1.0
    # partial[n] = sum over n_1 < ... < n_j <= n for the prefix processed so far
    partial = [1.0] * (terms + 1)
    for e in k:
        new = [0.0] * (terms + 1)
        acc = 0.0
        for n in range(1, terms + 1):
            acc += partial[n - 1] / n**e
            new[n] = acc
        partial = new
        partial[0] = 0.0
    return partial[terms]


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()
    with _caches_lock:
        _caches.clear()
