#!/usr/bin/env python3
# Parkization step by step, and the parking functions it lands on.

from pqsym.words import enumerate_ndpf, enumerate_parking, evaluation, park, parkize, standardize

w = (3, 5, 1, 1, 11, 8, 8, 2)
trace = parkize(w)
print("word      ", w)
for d, step in trace.rounds:
    print(f"pivot {d:2d}  ", step)
print("parkized  ", trace.result)

# the closed form agrees with the round-by-round algorithm
assert park(w) == trace.result

# standardization only keeps the order pattern, ties read left to right
print("std       ", standardize(w))

for n in range(1, 7):
    print(f"n = {n}: {len(enumerate_parking(n)):6d} parking functions, {len(enumerate_ndpf(n)):4d} non-decreasing")

ev = evaluation((3, 1, 1, 7, 2, 9, 1, 7, 8, 1, 3, 2, 9))
print("evaluation", ev.full, "packed", ev.packed, "unpacked", ev.unpacked)
