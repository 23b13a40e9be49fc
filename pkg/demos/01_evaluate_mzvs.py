"""Evaluate a few multiple zeta values and compare with known closed forms."""

import mpmath

from mzvlab import EvalConfig, eval_admissible, zeta_star_numeric

cfg = EvalConfig(precision_digits=50)

# Euler's duality-type identity zeta(1,2) = zeta(3).
print("zeta(1,2)  =", eval_admissible((1, 2), cfg))
print("zeta(3)    =", eval_admissible((3,), cfg))

# zeta(1,3) = pi^4/360.
with mpmath.workdps(50):
    print("zeta(1,3)  =", eval_admissible((1, 3), cfg))
    print("pi^4/360   =", mpmath.pi**4 / 360)

# Non-admissible indices go through stuffle regularization.
print("zeta*(2,1) =", zeta_star_numeric((2, 1), cfg), "(equals -2 zeta(3))")
