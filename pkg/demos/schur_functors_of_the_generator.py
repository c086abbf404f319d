"""Why the generator [1] is not Schur-finite, at desk scale.

Run:  python3 demos/schur_functors_of_the_generator.py
"""

import math

from repst.combinatorics import partitions_up_to
from repst.exact_arith import format_poly
from repst.interp import chi_schur_both_ways, generator_power_report, schur_idempotent, schur_idempotent_trace

print("The isotypic idempotent d_lam is a combination of permutation diagrams, which are")
print("linearly independent, so it is never zero.  Its trace is chi(S_lam([1])):\n")
for lam in partitions_up_to(4):
    if not lam:
        continue
    e = schur_idempotent(lam)
    tr = schur_idempotent_trace(lam)
    cyc, con = chi_schur_both_ways(lam)
    assert tr == cyc == con
    print(f"  {lam!s:14} {len(e.terms):3d} terms   chi = {format_poly(tr)}")

print("\nLength of [1]^n against sqrt(n!):")
for n in range(6):
    rep = generator_power_report(n)
    print(f"  n = {n}: length {rep['length']:4d}  sqrt(n!) = {math.sqrt(math.factorial(n)):7.2f}"
          f"  dim End = {rep['dim End']}")
