#!/usr/bin/env python3
# Catalan subalgebra, ribbons and the copy of Sym generated by the J_n.

from pqsym import catalan
from pqsym.lincomb import LinearCombination, change_basis
from pqsym.poset import covers

P = lambda *pi: LinearCombination.term("P", pi)

print("P1123 * P1111 =", catalan.internal_product(P(1, 1, 2, 3), catalan.J(4)))
print("P1111 * P1123 =", catalan.internal_product(catalan.J(4), P(1, 1, 2, 3)))
print("P1123 * P1224 =", catalan.internal_product(P(1, 1, 2, 3), P(1, 2, 2, 4)))

print("\ncovers of the successor order in degree 3")
for lo, hi in covers(3):
    print("  ", lo, "->", hi)

print("\nP123 on ribbons:", change_basis(P(1, 2, 3), "R"))

# J products are single P terms indexed by block words
for I in catalan.compositions(3):
    print("S", I, "->", catalan.j_S(I).value)

# f -> f * J_n lands in Sym
x = catalan.project_to_sym(P(1, 1, 2, 3) + 2 * P(1, 2, 2, 3))
print("\nprojection:", x)
print("  on S:", x.s_form())

# the image of Sym is closed under *
prod = catalan.internal_product(catalan.j_S((2, 1)).value, catalan.j_S((1, 2)).value)
print("S21 * S12 =", catalan.certify(prod).s_form())
