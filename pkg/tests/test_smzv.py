import math
from fractions import Fraction

import mpmath
import pytest

from mzvlab.index_algebra import IndexCombination, repeat_pattern
from mzvlab.numeric_eval import BigReal, EvalConfig, eval_admissible
from mzvlab.smzv import (
    TSeries,
    evaluate_series,
    main_rhs,
    main_rhs_symbolic,
    stadic_coefficient,
    t_adic_smzv,
    t_adic_smzv_definitional,
    t_adic_smzv_symbolic,
    thm11_rhs,
    thm13_rhs,
    thm13_rhs_mod_pi2,
)

CFG = EvalConfig(60)
TOL = mpmath.mpf(10) ** -50


def ic(d):
    return IndexCombination(d)


def diff(a, b):
    return abs((a - b).value)


def test_symbolic_coefficients_for_13():
    s = t_adic_smzv_symbolic((1, 3), 3)
    assert s[0] == ic({(4,): -1})
    assert s[1] == ic({(5,): -3, (1, 4): -3, (3, 2): 1})


def test_t0_of_13_is_minus_pi4_over_90():
    with mpmath.workdps(80):
        assert abs(t_adic_smzv((1, 3), 3, CFG)[0].value + mpmath.pi**4 / 90) <= TOL


def test_empty_index_series():
    s = t_adic_smzv((), 3, CFG)
    assert [float(c) for c in s] == [1.0, 0.0, 0.0]


@pytest.mark.parametrize("k", [(1, 3), (2, 1), (3, 1, 2), (1, 1, 2)])
def test_definitional_double_sum_agrees(k):
    a = t_adic_smzv(k, 3, CFG)
    b = t_adic_smzv_definitional(k, 3, CFG)
    assert all(diff(a[j], b[j]) <= TOL for j in range(3))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_order_two_closed_form(n):
    a = t_adic_smzv(repeat_pattern(1, 3, n), 2, CFG)
    b = thm11_rhs(n, CFG)
    assert all(diff(a[j], b[j]) <= TOL for j in range(2))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_order_three_closed_form_for_31(n):
    a = t_adic_smzv(repeat_pattern(3, 1, n), 3, CFG)
    b = thm13_rhs(n, CFG)
    assert all(diff(a[j], b[j]) <= TOL for j in range(3))


def test_order_two_closed_form_t0_value():
    with mpmath.workdps(80):
        assert abs(thm13_rhs(1, CFG)[0].value + mpmath.pi**4 / 90) <= TOL


def test_mod_pi2_representatives():
    # -2(-4)^-1 zeta(5) = zeta(5)/2
    assert thm13_rhs_mod_pi2(1)[1] == ic({(5,): Fraction(1, 2)})
    rep = main_rhs_symbolic(1)
    assert rep[0] == IndexCombination.zero()
    assert rep[1] == ic({(5,): Fraction(-17, 2)})
    # zeta(3)^2 / 2 written through the stuffle product
    assert rep[2] == ic({(6,): Fraction(1, 2), (3, 3): 1})
    assert main_rhs_symbolic(1, corrected=True)[1] == ic({(5,): Fraction(-9, 2)})
    assert [float(c) for c in main_rhs(0, CFG)] == [1.0, 0.0, 0.0]


@pytest.mark.parametrize("n", [0, 1, 2])
def test_numeric_and_symbolic_representatives_agree(n):
    for corrected in (False, True):
        a = main_rhs(n, CFG, corrected=corrected)
        b = evaluate_series(main_rhs_symbolic(n, corrected=corrected), CFG)
        assert all(diff(a[j], b[j]) <= TOL for j in range(3))


def test_stadic_coefficient_examples():
    assert stadic_coefficient(0, 0, ()) == ic({(): 1})
    assert stadic_coefficient(1, 1, (1,)) == IndexCombination.zero()


def test_exceptional_t2_coefficient():
    cfg = EvalConfig(50)
    z = lambda *k: eval_admissible(k, cfg)
    expected = (
        z(2) * z(3) * z(5) * Fraction(1, 2) + z(2) * z(3, 5) - z(3) * z(3) * z(4) * Fraction(1, 2)
        - z(3) * z(7) * Fraction(1, 4) + z(5) * z(5) * Fraction(81, 8) - z(10) * Fraction(103, 10)
    )
    assert diff(t_adic_smzv((1, 3, 1, 3), 3, cfg)[2], expected) <= mpmath.mpf(10) ** -30


def test_tseries_operations_and_modes():
    a = t_adic_smzv_symbolic((2,), 3)
    b = t_adic_smzv((2,), 3, CFG)
    with pytest.raises(TypeError):
        TSeries([a[0], b[0]])
    with pytest.raises(TypeError):
        a + b
    prod = b * b
    assert prod.order == 3
    assert diff(prod[0], b[0] * b[0]) == 0
    assert a[0] == ic({(2,): 2})
    assert (a * a)[0] == ic({(4,): 4, (2, 2): 8})
    assert b.truncate(2).order == 2
    with pytest.raises(ValueError):
        b.truncate(4)


def test_tseries_json_round_trip():
    s = t_adic_smzv((1, 3), 3, CFG)
    back = TSeries.from_json(s.to_json(60))
    assert back.order == 3
    assert all(diff(back[j], s[j]) <= mpmath.mpf(10) ** -55 for j in range(3))
    sym = t_adic_smzv_symbolic((1, 3), 2)
    assert TSeries.from_json(sym.to_json()).coeffs == sym.coeffs


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        t_adic_smzv((2,), 0, CFG)
