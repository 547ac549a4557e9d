#!/usr/bin/env python3
# Brute-force evidence from words over small alphabets.

from pqsym import oracle
from pqsym.verify import run_suite

print("G_11 over [3]:", dict(oracle.realize_G((1, 1), 3)))
print("G_12 G_11 realized over [4]:", oracle.check_product_G((1, 2), (1, 1), 4))
print("Delta G41252 via the ordered sum [5] + [5]:", oracle.check_coproduct_G((4, 1, 2, 5, 2), 5, 5))
print("fiber of 311 contains (211, 211):", ((2, 1, 1), (2, 1, 1)) in oracle.fiber((3, 1, 1)))
print("fiber masses:", [oracle.fiber_mass(n) for n in (1, 2, 3)])

for r in run_suite("oracle", 4):
    print(("PASS" if r.passed else "FAIL"), r.name, f"[{r.scope}]", f"{r.seconds:.2f}s")
