#!/usr/bin/env python3
# The internal product parkizes the word of pairs a ⊗ b.

import numpy as np

from pqsym import algebra
from pqsym.verify import associativity_failures

a, b = (3, 1, 1, 4, 3, 2, 3, 1), (2, 3, 5, 7, 1, 7, 1, 3)
pairs = list(zip(a, b))
flat = algebra.flatten_pairs(pairs, len(a))
print("pairs    ", pairs)
print("flattened", flat)
print("F_a * F_b = F", algebra.internal_product_F(a, b))

# the whole degree-3 multiplication table, as indices into PF_3
words, table = algebra.internal_table(3)
print(len(words), "parking functions of degree 3")
print(table)

# F_{1^n} is a left unit: its row is the identity
print("row of 111:", np.array_equal(table[words.index((1, 1, 1))], np.arange(len(words))))

# associativity over all of PF_4^3 in one broadcast comparison
for n in range(5):
    print(f"n = {n}: {len(associativity_failures(n))} non-associative triples")

# a cap smaller than the degree is not enough
print("cap 1:", algebra.internal_product_F((1, 1, 1, 1), (1, 1, 1, 4), 1),
      "cap n:", algebra.internal_product_F((1, 1, 1, 1), (1, 1, 1, 4)))
