"""
Integer relations and congruences modulo ``pi^2``.

A congruence ``lhs == rhs (mod pi^2)`` at weight ``w`` is certified by an
integer relation between ``lhs - rhs`` and a spanning set of the weight-``w``
part of the ideal generated by ``pi^2``. Certificates are numerical evidence
at the stated precision, not proofs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import mpmath

from .index_algebra import Index, format_index, make_index
from .numeric_eval import BigReal, EvalConfig, eval_admissible

DEFAULT_MAX_COEFF = 10**6
MIN_PSLQ_DIGITS = 40
# depth >= 2 algebra generators beyond single odd zeta values
DEFAULT_EXTRA_GENERATORS: tuple[Index, ...] = ((3, 5), (3, 7), (3, 3, 5))


class InsufficientPrecisionError(ValueError):
    """Values are not known precisely enough to search for relations."""


def acceptance_threshold(cfg: EvalConfig) -> mpmath.mpf:
    return mpmath.mpf(10) ** (-(cfg.precision_digits - 10))


def integer_relation(
    values: Sequence[BigReal],
    cfg: Optional[EvalConfig] = None,
    max_coeff: int = DEFAULT_MAX_COEFF,
    maxsteps: int = 20000,
    min_digits: int = MIN_PSLQ_DIGITS,
) -> Optional[list[int]]:
    """Find small integers ``v`` with ``|sum v_i x_i|`` below threshold.

    Returns ``None`` when no relation with ``max|v_i| <= max_coeff`` exists at
    this precision. Raises :class:`InsufficientPrecisionError` when the inputs
    are too imprecise for the search to mean anything.
    """
    cfg = cfg or EvalConfig()
    if cfg.precision_digits < min_digits:
        raise InsufficientPrecisionError(
            f"integer relation search needs at least {min_digits} digits, got {cfg.precision_digits}"
        )
    bound = mpmath.mpf(10) ** (-cfg.precision_digits)
    for x in values:
        if x.error > bound:
            raise InsufficientPrecisionError(
                f"input known only to ±{mpmath.nstr(x.error, 3)}, need ±1e-{cfg.precision_digits}"
            )
    tol = acceptance_threshold(cfg)
    if len(values) == 0:
        return None
    if len(values) == 1:
        return [1] if abs(values[0].value) <= tol else None
    with mpmath.workdps(cfg.work_digits):
        xs = [+x.value for x in values]
        rel = mpmath.pslq(xs, tol=tol, maxcoeff=max_coeff, maxsteps=maxsteps)
        if rel is None:
            return None
        rel = [int(c) for c in rel]
        if max(abs(c) for c in rel) > max_coeff:
            return None
        if abs(mpmath.fsum(c * x for c, x in zip(rel, xs))) > tol:
            return None
    for c in rel:
        if c:
            if c < 0:
                rel = [-x for x in rel]
            break
    return rel


# -- pi^2 basis ------------------------------------------------------------

@dataclass(frozen=True)
class LabeledConstant:
    """``zeta(2)^z2_power`` times a product of zeta values at ``factors``."""

    z2_power: int
    factors: tuple[Index, ...] = ()

    @property
    def weight(self) -> int:
        return 2 * self.z2_power + sum(sum(k) for k in self.factors)

    @property
    def label(self) -> str:
        parts = []
        if self.z2_power:
            parts.append("zeta(2)" + (f"^{self.z2_power}" if self.z2_power > 1 else ""))
        parts += ["zeta" + format_index(k) for k in self.factors]
        return "*".join(parts) or "1"

    def evaluate(self, cfg: Optional[EvalConfig] = None) -> BigReal:
        cfg = cfg or EvalConfig()
        out = BigReal.exact(1, cfg.work_bits)
        if self.z2_power:
            out = out * eval_admissible((2,), cfg) ** self.z2_power
        for k in self.factors:
            out = out * eval_admissible(k, cfg)
        return out


def load_generators(path: Union[str, Path]) -> tuple[Index, ...]:
    """Read extra generators from ``{"generators": [[3,5], ...]}``."""
    with open(path) as fh:
        data = json.load(fh)
    return tuple(make_index(g) for g in data["generators"])


def _multisets(gens: list[tuple[Index, int]], target: int, start: int = 0):
    if target == 0:
        yield ()
        return
    for i in range(start, len(gens)):
        k, w = gens[i]
        if w <= target:
            for rest in _multisets(gens, target - w, i):
                yield (k,) + rest


def pi2_basis(weight: int, extras: Optional[Iterable[Index]] = None) -> list[LabeledConstant]:
    """Spanning set of the weight-``weight`` part of ``pi^2 * Z``.

    Elements are ``zeta(2)^a`` (a >= 1) times monomials in ``zeta(odd >= 3)``
    and the extra generators.
    """
    extras = DEFAULT_EXTRA_GENERATORS if extras is None else tuple(make_index(e) for e in extras)
    gens: list[tuple[Index, int]] = [((s,), s) for s in range(3, weight, 2)]
    gens += [(e, sum(e)) for e in dict.fromkeys(extras) if len(e) > 1]
    gens.sort(key=lambda g: (g[1], len(g[0]), g[0]))
    out = []
    for a in range(weight // 2, 0, -1):
        for mono in _multisets(gens, weight - 2 * a):
            out.append(LabeledConstant(a, mono))
    return out


# -- certificates ----------------------------------------------------------

@dataclass
class RelationCertificate:
    target_id: str
    weight: int
    relation: list[int]
    basis: list[str]
    residual: mpmath.mpf
    status: str  # "certified", "zero" or "not-certified"
    note: str = ""
    recheck_residual: Optional[mpmath.mpf] = None

    @property
    def ok(self) -> bool:
        return self.status in ("certified", "zero")

    def pi2_combination(self) -> dict[str, Fraction]:
        """``lhs - rhs`` as a rational combination of the basis labels."""
        if self.status != "certified":
            return {}
        c0 = self.relation[0]
        return {lab: Fraction(-c, c0) for lab, c in zip(self.basis[1:], self.relation[1:]) if c}

    def to_json_obj(self) -> dict:
        return {
            "target_id": self.target_id,
            "weight": self.weight,
            "status": self.status,
            "relation": self.relation,
            "basis": self.basis,
            "residual": mpmath.nstr(self.residual, 5),
            "recheck_residual": None if self.recheck_residual is None else mpmath.nstr(self.recheck_residual, 5),
            "pi2_combination": {k: str(v) for k, v in self.pi2_combination().items()},
            "note": self.note,
        }


def verify_congruence_mod_pi2(
    lhs: BigReal,
    rhs: BigReal,
    weight: int,
    cfg: Optional[EvalConfig] = None,
    basis: Optional[Sequence[LabeledConstant]] = None,
    target_id: str = "",
    max_coeff: int = DEFAULT_MAX_COEFF,
) -> RelationCertificate:
    """Certify ``lhs - rhs`` lies in the ``pi^2`` ideal at ``weight``."""
    cfg = cfg or EvalConfig()
    basis = pi2_basis(weight) if basis is None else list(basis)
    labels = ["target"] + [b.label for b in basis]
    diff = lhs - rhs
    tol = acceptance_threshold(cfg)
    if abs(diff) <= tol:
        return RelationCertificate(
            target_id, weight, [1] + [0] * len(basis), labels, abs(diff), "zero",
            note="difference below threshold",
        )
    values = [diff] + [b.evaluate(cfg) for b in basis]
    rel = integer_relation(values, cfg, max_coeff=max_coeff)
    if rel is None or rel[0] == 0:
        return RelationCertificate(
            target_id, weight, rel or [], labels, abs(diff), "not-certified",
            note="no relation with nonzero target coefficient at this precision and bound",
        )
    return RelationCertificate(target_id, weight, rel, labels, relation_residual(rel, values), "certified")


def relation_residual(rel: Sequence[int], values: Sequence[BigReal]) -> mpmath.mpf:
    prec = max(v.prec for v in values)
    with mpmath.workprec(prec):
        return abs(mpmath.fsum(c * v.value for c, v in zip(rel, values)))


def recheck_certificate(
    cert: RelationCertificate,
    lhs: BigReal,
    rhs: BigReal,
    cfg_hi: EvalConfig,
    basis: Optional[Sequence[LabeledConstant]] = None,
    threshold: Optional[mpmath.mpf] = None,
) -> bool:
    """Recompute the relation's residual from values at higher precision."""
    basis = pi2_basis(cert.weight) if basis is None else list(basis)
    if threshold is None:
        threshold = acceptance_threshold(cfg_hi.with_precision(cfg_hi.precision_digits - 20))
    values = [lhs - rhs] + [b.evaluate(cfg_hi) for b in basis]
    if cert.status == "zero":
        res = abs(values[0])
    elif cert.status == "certified":
        res = relation_residual(cert.relation, values)
    else:
        return False
    cert.recheck_residual = res
    return res <= threshold


def run_suite(name: str, cfg: Optional[EvalConfig] = None, extras: Optional[Iterable[Index]] = None):
    """Run a named verification suite; see :mod:`mzvlab.suites`."""
    from .suites import run_suite as _run

    return _run(name, cfg, extras=extras)
