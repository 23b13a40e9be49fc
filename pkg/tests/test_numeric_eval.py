import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvlab import numeric_eval as ne
from mzvlab.numeric_eval import (
    BigReal,
    EvalConfig,
    NonAdmissibleIndexError,
    ValueCache,
    bernoulli,
    eval_admissible,
    eval_combination,
    zeta_even,
    zeta_numeric,
    zeta_star_numeric,
)
from oracles import direct_mzv_float

CFG = EvalConfig(60)
TOL = mpmath.mpf(10) ** -50


def close(a: BigReal, b, tol=TOL):
    with mpmath.workdps(90):
        bv = b.value if isinstance(b, BigReal) else mpmath.mpf(b)
        return abs(a.value - bv) <= tol


@pytest.mark.parametrize("s", [2, 3, 5, 7, 11])
def test_single_zeta_matches_mpmath(s):
    with mpmath.workdps(80):
        assert close(eval_admissible((s,), CFG), mpmath.zeta(s))


def test_classical_identities():
    with mpmath.workdps(90):
        pi = mpmath.pi
        assert close(eval_admissible((1, 2), CFG), eval_admissible((3,), CFG))
        assert close(eval_admissible((1, 3), CFG), pi**4 / 360)
        assert close(eval_admissible((4, 4), CFG), 2**5 * pi**8 / mpmath.factorial(10))
        z2, z4 = mpmath.zeta(2), mpmath.zeta(4)
        assert close(eval_admissible((2, 2), CFG), (z2**2 - z4) / 2)


@pytest.mark.parametrize("k", [(2,), (1, 2), (2, 2), (1, 3), (2, 3), (3, 2), (1, 1, 3)])
def test_against_direct_nested_sum(k):
    # the truncated direct sum converges like N^(1-k_r); 1e-4 is ample
    assert abs(float(eval_admissible(k, EvalConfig(30))) - direct_mzv_float(k, 20000)) < 1e-3


def test_non_admissible_raises():
    with pytest.raises(NonAdmissibleIndexError, match="regularize"):
        eval_admissible((2, 1), CFG)


def test_zeta_star_and_special_values():
    assert zeta_numeric(1, CFG).value == 0
    assert close(zeta_star_numeric((2, 1), CFG), eval_admissible((3,), CFG) * -2)
    assert close(eval_admissible((), CFG), 1)


def test_bernoulli_and_even_zeta():
    assert bernoulli(1) in (Fraction(-1, 2), Fraction(1, 2))
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert zeta_even(2) == Fraction(1, 6)
    assert zeta_even(4) == Fraction(1, 90)
    assert zeta_even(10) == Fraction(1, 93555)


def test_bigreal_arithmetic_tracks_error():
    a = eval_admissible((2,), CFG)
    b = a * a - a**2
    assert abs(b.value) <= b.error
    assert (a * Fraction(1, 3)).error >= a.error / 3
    assert close(-(-a), a)


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3).map(lambda l: tuple(l[:-1]) + (l[-1] + 1,)))
def test_precision_stability(k):
    lo = eval_admissible(k, EvalConfig(40))
    hi = eval_admissible(k, EvalConfig(60))
    with mpmath.workdps(80):
        assert abs(lo.value - hi.value) <= mpmath.mpf(10) ** -40


def test_combination_with_large_coefficients():
    x = {(5,): 10**12, (2, 3): -(10**12)}
    v = eval_combination(x, CFG)
    with mpmath.workdps(100):
        ref = 10**12 * (mpmath.zeta(5) - eval_admissible((2, 3), EvalConfig(80)).value)
        assert abs(v.value - ref) <= TOL


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("MZV_CACHE_DIR", str(tmp_path))
    ne.clear_memo()
    cfg = EvalConfig(45)
    first = eval_admissible((2, 5), cfg)
    path = tmp_path / "mzv_values.jsonl"
    rec = [json.loads(line) for line in path.read_text().splitlines()]
    assert rec[-1]["index"] == [2, 5] and rec[-1]["digits"] == 45
    ne.clear_memo()
    ne._caches.clear()
    second = eval_admissible((2, 5), cfg)
    with mpmath.workdps(80):
        assert abs(first.value - second.value) <= mpmath.mpf(10) ** -45
    ne.clear_memo()


def test_value_cache_last_record_wins(tmp_path):
    c = ValueCache(tmp_path / "c.jsonl")
    c.put((3,), 10, "1.0")
    c.put((3,), 10, "1.2020569032")
    assert ValueCache(tmp_path / "c.jsonl").get((3,), 10) == "1.2020569032"
