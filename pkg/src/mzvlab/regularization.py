"""
Stuffle regularization.

Every index is rewritten as a polynomial in a formal variable ``T`` whose
coefficients are combinations of admissible indices, with ``(1) -> T``.
The map is a stuffle-algebra homomorphism; its constant term is the
regularized value ``zeta^*``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .index_algebra import (
    EMPTY,
    CombinationLike,
    Index,
    IndexCombination,
    as_combination,
    sigma,
    stuffle,
    trailing_ones,
)


class RegPolynomial:
    """Polynomial in ``T`` with :class:`IndexCombination` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, IndexCombination] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, IndexCombination] = {}
        for d, c in items:
            if d < 0:
                raise ValueError("degrees must be nonnegative")
            acc[d] = acc.get(d, IndexCombination.zero()) + as_combination(c)
        self._coeffs = {d: c for d, c in acc.items() if c}

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=0)

    def coefficient(self, d: int) -> IndexCombination:
        return self._coeffs.get(d, IndexCombination.zero())

    def constant_term(self) -> IndexCombination:
        return self.coefficient(0)

    def degrees(self) -> list[int]:
        return sorted(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __add__(self, other: "RegPolynomial") -> "RegPolynomial":
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, IndexCombination.zero()) + c
        return RegPolynomial(out)

    def __neg__(self) -> "RegPolynomial":
        return RegPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: "RegPolynomial") -> "RegPolynomial":
        return self + (-other)

    def scale(self, q) -> "RegPolynomial":
        return RegPolynomial({d: c * q for d, c in self._coeffs.items()})

    def shift(self, n: int = 1) -> "RegPolynomial":
        """Multiply by ``T**n``."""
        return RegPolynomial({d + n: c for d, c in self._coeffs.items()})

    def __mul__(self, other: "RegPolynomial") -> "RegPolynomial":
        if not isinstance(other, RegPolynomial):
            return self.scale(other)
        out: dict[int, IndexCombination] = {}
        for d, c in self._coeffs.items():
            for e, f in other._coeffs.items():
                out[d + e] = out.get(d + e, IndexCombination.zero()) + stuffle(c, f)
        return RegPolynomial(out)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d in self.degrees():
            c = self._coeffs[d]
            t = "" if d == 0 else ("T" if d == 1 else f"T^{d}")
            parts.append(f"[{c}]" + (f"*{t}" if t else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RegPolynomial({self})"

    def to_json_obj(self) -> dict:
        return {f"T^{d}": self._coeffs[d].to_json_obj() for d in self.degrees()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "RegPolynomial":
        out = {}
        for key, val in obj.items():
            if not key.startswith("T^"):
                raise ValueError(f"bad RegPolynomial key {key!r}")
            out[int(key[2:])] = IndexCombination.from_json_obj(val)
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "RegPolynomial":
        return cls.from_json_obj(json.loads(text))


@lru_cache(maxsize=None)
def _regularize_index(k: Index) -> RegPolynomial:
    m = trailing_ones(k)
    if m == 0:
        return RegPolynomial({0: IndexCombination({k: 1})})
    # (k', 1^(m-1)) * (1) contains k exactly m times; every other term
    # has fewer trailing ones, so the system is unitriangular.
    head = k[:-1]
    rest = stuffle(head, (1,)) - IndexCombination({k: m})
    return (_regularize_index(head).shift(1) - regularize(rest)).scale(Fraction(1, m))


def regularize(x: CombinationLike) -> RegPolynomial:
    """Stuffle-regularize ``x`` into a T-polynomial over admissible indices."""
    out: dict[int, list] = {}
    for k, c in as_combination(x).terms.items():
        for d in (p := _regularize_index(k)).degrees():
            out.setdefault(d, []).append(p.coefficient(d) * c)
    return RegPolynomial({d: _sum(cs) for d, cs in out.items()})


def _sum(cs):
    acc: dict = {}
    for c in cs:
        for k, v in c.terms.items():
            acc[k] = acc.get(k, 0) + v
    return IndexCombination(acc)


def zeta_star_symbolic(x: CombinationLike) -> IndexCombination:
    """Constant term of the regularization; supported on admissible indices."""
    return regularize(x).constant_term()


def zeta_star_m_symbolic(m: int, k: CombinationLike) -> IndexCombination:
    """``zeta^*`` of ``sigma_m(k)``; ``delta_{m,0}`` on the empty index."""
    return zeta_star_symbolic(sigma(m, k))


def regularization_unit() -> RegPolynomial:
    return RegPolynomial({0: IndexCombination({EMPTY: 1})})
