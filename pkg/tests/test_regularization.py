import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mzvlab.index_algebra import IndexCombination, stuffle
from mzvlab.numeric_eval import EvalConfig, eval_admissible, zeta_star_numeric
from mzvlab.regularization import (
    RegPolynomial,
    regularization_unit,
    regularize,
    zeta_star_m_symbolic,
    zeta_star_symbolic,
)

indices = st.lists(st.integers(1, 3), max_size=3).map(tuple)


def ic(d):
    return IndexCombination(d)


def test_regularize_examples():
    assert regularize((1,)) == RegPolynomial({1: ic({(): 1})})
    assert regularize((2, 1)) == RegPolynomial({0: ic({(3,): -1, (1, 2): -1}), 1: ic({(2,): 1})})
    assert regularize((1, 1)) == RegPolynomial({0: ic({(2,): Fraction(-1, 2)}), 2: ic({(): Fraction(1, 2)})})
    assert regularize((2, 3)) == RegPolynomial({0: ic({(2, 3): 1})})
    assert regularize(()) == regularization_unit()


def test_zeta_star_examples():
    assert zeta_star_symbolic((1,)) == IndexCombination.zero()
    assert zeta_star_m_symbolic(1, (1, 3)) == ic({(1, 4): 3, (2, 3): 1})
    assert zeta_star_m_symbolic(0, ()) == ic({(): 1})
    assert zeta_star_m_symbolic(2, ()) == IndexCombination.zero()


@settings(max_examples=40, deadline=None)
@given(indices, indices)
def test_regularization_is_stuffle_homomorphism(k, l):
    assert regularize(stuffle(k, l)) == regularize(k) * regularize(l)


@settings(max_examples=60, deadline=None)
@given(indices)
def test_regularized_coefficients_are_admissible(k):
    p = regularize(k)
    assert all(p.coefficient(d).is_admissible() for d in p.degrees())


@given(indices)
def test_reg_polynomial_json_round_trip(k):
    p = regularize(k)
    assert RegPolynomial.from_json(p.to_json()) == p


def test_zeta_star_21_against_asymptotic_oracle():
    # H_N(2,1) = zeta(2) (log N + gamma) + zeta*(2,1) + O(log N / N)
    N = 200000
    inner = 0.0
    h = 0.0
    for n in range(1, N + 1):
        h += inner / n
        inner += 1.0 / n**2
    gamma = 0.5772156649015329
    estimate = h - (math.pi**2 / 6) * (math.log(N) + gamma)
    exact = float(zeta_star_numeric((2, 1), EvalConfig(30)))
    assert abs(estimate - exact) < 1e-3
    assert abs(exact + 2 * float(eval_admissible((3,), EvalConfig(30)))) < 1e-25
