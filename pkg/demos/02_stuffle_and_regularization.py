"""Stuffle products, index shuffles and the regularization polynomial."""

from mzvlab import index_shuffle, regularize, sigma, stuffle, zeta_star_symbolic
from mzvlab.index_algebra import I

print("(2) * (1)        =", stuffle((2,), (1,)))
print("(1,2) sh (3)     =", index_shuffle((1, 2), (3,)))
print("sigma_1((2))     =", sigma(1, (2,)))
print("I_1((1,3))       =", I(1, (1, 3)))

# reg(2,1) is a polynomial in T whose constant term is zeta*(2,1).
p = regularize((2, 1))
print("reg(2,1)         =", p)
print("zeta*(2,1)       =", zeta_star_symbolic((2, 1)))

# Regularization respects the stuffle product.
k, l = (1,), (2, 1)
print("homomorphism ok:", regularize(stuffle(k, l)) == regularize(k) * regularize(l))
