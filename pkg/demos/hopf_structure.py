#!/usr/bin/env python3
# The external product and coproduct on the F and G bases.

from pqsym import algebra
from pqsym.lincomb import LinearCombination, pairing

print("F12 F11 =", algebra.product_F((1, 2), (1, 1)))
print("Delta F3132 =", algebra.coproduct_F((3, 1, 3, 2)))
print("G12 G11 =", algebra.product_G((1, 2), (1, 1)))
print("Delta G41252 =", algebra.coproduct_G((4, 1, 2, 5, 2)))

# Delta is an algebra map: compare both sides on one pair
a, b = (2, 1), (1, 1)
lhs = algebra.coproduct(algebra.product_F(a, b))
rhs = algebra.tensor_multiply(algebra.coproduct_F(a), algebra.coproduct_F(b), algebra.product_F)
print("Delta(F21 F11) == Delta(F21) Delta(F11):", lhs == rhs)

# G is the dual basis of F
F = LinearCombination.term("F", (2, 1, 1))
G = LinearCombination.term("G", (2, 1, 1))
print("<F211, G211> =", pairing(F, G))
