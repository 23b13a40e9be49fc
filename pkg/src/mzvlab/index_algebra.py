r"""
Exact calculus on indices.

An index is a tuple of positive integers ``(k_1, ..., k_r)``, possibly empty.
Throughout the package indices are written in the increasing-summation order

.. MATH::

    \zeta(k_1, \ldots, k_r) = \sum_{0 < n_1 < \cdots < n_r} n_1^{-k_1} \cdots n_r^{-k_r},

so an index is admissible when it is empty or its *last* entry exceeds 1.

Formal rational linear combinations of indices are :class:`IndexCombination`
objects. On them this module provides the stuffle (harmonic) product, the
atom shuffle of indices, the weight-raising operators ``sigma`` and the
signed convolutions ``m_i_n``.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Tuple, Union

Index = Tuple[int, ...]
Coefficient = Union[int, Fraction]

EMPTY: Index = ()


def make_index(entries: Iterable[int] = ()) -> Index:
    """Validate ``entries`` and return them as an index tuple."""
    k = tuple(entries)
    for e in k:
        if isinstance(e, bool) or not isinstance(e, int):
            raise TypeError(f"index entries must be integers, got {e!r}")
        if e < 1:
            raise ValueError(f"entry must be positive, got {e}")
    return k


def weight(k: Index) -> int:
    return sum(k)


def depth(k: Index) -> int:
    return len(k)


def reverse(k: Index) -> Index:
    return tuple(reversed(k))


def is_admissible(k: Index) -> bool:
    return not k or k[-1] > 1


def trailing_ones(k: Index) -> int:
    m = 0
    for e in reversed(k):
        if e != 1:
            break
        m += 1
    return m


def repeat_pattern(a: int, b: int, n: int, suffix: Iterable[int] = ()) -> Index:
    """Return the index ``({a,b}^n, suffix)``, i.e. ``(a, b)`` repeated n times."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return make_index((a, b) * n + tuple(suffix))


_PATTERN = re.compile(r"\{([\d,\s]+)\}\^(\d+)")


def parse_index(text: str) -> Index:
    """Parse ``"1,3,1"``, ``"{1,3}^2,1"``, ``"()"`` or ``""`` into an index.

    Brace groups ``{a,b,...}^n`` repeat their contents ``n`` times.
    """
    s = text.strip()
    if s in ("", "()", "∅", "empty"):
        return EMPTY
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    entries: list[int] = []
    for part in _split_top_level(s):
        part = part.strip()
        m = _PATTERN.fullmatch(part)
        if m:
            block = [int(x) for x in m.group(1).split(",") if x.strip()]
            entries.extend(block * int(m.group(2)))
        elif re.fullmatch(r"\d+", part):
            entries.append(int(part))
        else:
            raise ValueError(f"malformed index string {text!r} near {part!r}")
    return make_index(entries)


def _split_top_level(s: str) -> list[str]:
    parts, depth_, cur = [], 0, []
    for ch in s:
        if ch == "{":
            depth_ += 1
        elif ch == "}":
            depth_ -= 1
        if ch == "," and depth_ == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def format_index(k: Index) -> str:
    return "(" + ",".join(map(str, k)) + ")"


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _canonical_key(k: Index):
    return (len(k), k)


class IndexCombination:
    """A finitely supported map from indices to exact rationals.

    Instances are immutable; zero coefficients are never stored.
    Multiplication by ``*`` is scalar multiplication only; use
    :func:`stuffle` or :func:`index_shuffle` for products of indices.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Index, Coefficient], Iterable] = ()):
        acc: dict[Index, Coefficient] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            if not isinstance(c, Rational):
                raise TypeError(f"coefficients must be exact rationals, got {c!r}")
            acc[tuple(k)] += c
        self._terms = {k: _normalize(c) for k, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "IndexCombination":
        obj = cls.__new__(cls)
        obj._terms = {k: _normalize(c) for k, c in terms.items() if c != 0}
        return obj

    @classmethod
    def from_index(cls, k: Iterable[int], coefficient: Coefficient = 1) -> "IndexCombination":
        return cls({make_index(k): coefficient})

    @classmethod
    def zero(cls) -> "IndexCombination":
        return cls._raw({})

    @classmethod
    def one(cls) -> "IndexCombination":
        return cls._raw({EMPTY: 1})

    @property
    def terms(self) -> Mapping[Index, Coefficient]:
        return dict(self._terms)

    def items(self) -> list[tuple[Index, Coefficient]]:
        """Terms in canonical order (shorter indices first, then lexicographic)."""
        return sorted(self._terms.items(), key=lambda kv: _canonical_key(kv[0]))

    def support(self) -> list[Index]:
        return [k for k, _ in self.items()]

    def coefficient(self, k: Iterable[int]) -> Coefficient:
        return self._terms.get(tuple(k), 0)

    def __iter__(self) -> Iterator[tuple[Index, Coefficient]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, IndexCombination):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "IndexCombination") -> "IndexCombination":
        if not isinstance(other, IndexCombination):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return IndexCombination._raw(acc)

    def __sub__(self, other: "IndexCombination") -> "IndexCombination":
        if not isinstance(other, IndexCombination):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "IndexCombination":
        return IndexCombination._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar) -> "IndexCombination":
        if isinstance(scalar, IndexCombination):
            raise TypeError("use stuffle() or index_shuffle() to multiply combinations")
        if not isinstance(scalar, Rational):
            return NotImplemented
        return IndexCombination._raw({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "IndexCombination":
        return self * (Fraction(1) / scalar)

    def is_admissible(self) -> bool:
        return all(is_admissible(k) for k in self._terms)

    def weights(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (k, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = format_index(k) if a == 1 else f"{a}*{format_index(k)}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"IndexCombination({self})"

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"index": list(k), "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
                for k, c in self.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "IndexCombination":
        return cls(
            (make_index(t["index"]), Fraction(int(t["num"]), int(t["den"]))) for t in obj["terms"]
        )

    @classmethod
    def from_json(cls, text: str) -> "IndexCombination":
        return cls.from_json_obj(json.loads(text))


CombinationLike = Union[IndexCombination, Index, list, Mapping]


def as_combination(x: CombinationLike) -> IndexCombination:
    if isinstance(x, IndexCombination):
        return x
    if isinstance(x, Mapping):
        return IndexCombination(x)
    return IndexCombination.from_index(x)


def extend_linearly(f: Callable[[Index], Iterable[tuple[Index, Coefficient]]], x: CombinationLike) -> IndexCombination:
    acc: dict[Index, Coefficient] = defaultdict(int)
    for k, c in as_combination(x)._terms.items():
        for kk, cc in f(k):
            acc[kk] += c * cc
    return IndexCombination._raw(acc)


def extend_bilinearly(f, x: CombinationLike, y: CombinationLike) -> IndexCombination:
    acc: dict[Index, Coefficient] = defaultdict(int)
    ys = list(as_combination(y)._terms.items())
    for k, c in as_combination(x)._terms.items():
        for l, d in ys:
            cd = c * d
            for kk, e in f(k, l):
                acc[kk] += cd * e
    return IndexCombination._raw(acc)


# -- stuffle ---------------------------------------------------------------

def _stuffle_pair(k: Index, l: Index) -> tuple:
    # commutative, so share the memo between (k, l) and (l, k)
    return _stuffle_sorted(k, l) if k <= l else _stuffle_sorted(l, k)


@lru_cache(maxsize=None)
def _stuffle_sorted(k: Index, l: Index) -> tuple:
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    head_k, a = k[:-1], k[-1]
    head_l, b = l[:-1], l[-1]
    out: dict[Index, int] = defaultdict(int)
    for idx, c in _stuffle_pair(head_k, l):
        out[idx + (a,)] += c
    for idx, c in _stuffle_pair(k, head_l):
        out[idx + (b,)] += c
    for idx, c in _stuffle_pair(head_k, head_l):
        out[idx + (a + b,)] += c
    return tuple(out.items())


def stuffle(x: CombinationLike, y: CombinationLike) -> IndexCombination:
    """Harmonic (stuffle) product ``x * y``, extended bilinearly."""
    return extend_bilinearly(_stuffle_pair, x, y)


# -- shuffle of index entries ----------------------------------------------

@lru_cache(maxsize=None)
def _shuffle_pair(k: Index, l: Index) -> tuple:
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    out: dict[Index, int] = defaultdict(int)
    for idx, c in _shuffle_pair(k[:-1], l):
        out[idx + (k[-1],)] += c
    for idx, c in _shuffle_pair(k, l[:-1]):
        out[idx + (l[-1],)] += c
    return tuple(out.items())


def index_shuffle(x: CombinationLike, y: CombinationLike) -> IndexCombination:
    """Interleave the entries of two indices, each entry treated as an atom.

    ``index_shuffle((a, b), (c,)) == (c,a,b) + (a,c,b) + (a,b,c)``.
    """
    return extend_bilinearly(_shuffle_pair, x, y)


# -- sigma_n and mI_n ------------------------------------------------------

@lru_cache(maxsize=None)
def _sigma_index(n: int, k: Index) -> tuple:
    if not k:
        return ((EMPTY, 1),) if n == 0 else ()
    if n == 0:
        return ((k, 1),)
    head, last = k[:-1], k[-1]
    out: dict[Index, int] = defaultdict(int)
    # peel off the extra weight a given to the last entry
    for a in range(n + 1):
        b = comb(last + a - 1, a)
        for idx, c in _sigma_index(n - a, head):
            out[idx + (last + a,)] += b * c
    return tuple(out.items())


def sigma(n: int, x: CombinationLike) -> IndexCombination:
    r"""Distribute ``n`` extra weight over each index with binomial multiplicities.

    .. MATH::

        \sigma_n(k_1,\ldots,k_r) = \sum_{l_1+\cdots+l_r=n}
            (k_1+l_1,\ldots,k_r+l_r) \prod_i \binom{k_i+l_i-1}{l_i},

    with ``sigma(n, ()) = delta_{n,0}``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return extend_linearly(lambda k: _sigma_index(n, k), x)


@lru_cache(maxsize=None)
def _m_i_n_index(m: int, n: int, k: Index) -> IndexCombination:
    total = IndexCombination.zero()
    r = len(k)
    tail_weight = sum(k)
    for i in range(r + 1):
        sign = -1 if tail_weight % 2 else 1
        term = stuffle(sigma(m, k[:i]), sigma(n, reverse(k[i:])))
        total = total + (term if sign == 1 else -term)
        if i < r:
            tail_weight -= k[i]
    return total


def m_i_n(m: int, n: int, x: CombinationLike) -> IndexCombination:
    r"""The signed convolution

    .. MATH::

        {}_mI_n(k) = \sum_{i=0}^r (-1)^{k_r+\cdots+k_{i+1}}
            \sigma_m(k_1,\ldots,k_i) * \sigma_n(k_r,\ldots,k_{i+1}).
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return extend_linearly(lambda k: _m_i_n_index(m, n, k)._terms.items(), x)


def I(n: int, x: CombinationLike) -> IndexCombination:
    """Shorthand for ``m_i_n(0, n, x)``."""
    return m_i_n(0, n, x)


def compositions(w: int) -> Iterator[Index]:
    """All indices of weight exactly ``w`` (``()`` for ``w == 0``)."""
    if w == 0:
        yield EMPTY
        return
    for first in range(1, w + 1):
        for rest in compositions(w - first):
            yield (first,) + rest


def indices_up_to_weight(w: int) -> list[Index]:
    return [k for ww in range(w + 1) for k in compositions(ww)]


def clear_caches() -> None:
    for f in (_stuffle_sorted, _shuffle_pair, _sigma_index, _m_i_n_index):
        f.cache_clear()
