"""Étale algebras in super vector spaces have no odd part.

Run:  python3 demos/etale_superalgebras.py
"""

import random

from repst.superlinear import (
    SuperDim,
    dual_numbers,
    exterior_one,
    is_etale,
    random_supercommutative_algebra,
    schur_vanishes_super,
    split_algebra,
    super_schur_dim,
    supertrace_form,
)

for name, alg in [("Q x Q", split_algebra()), ("Q[x]/(x^2)", dual_numbers()), ("Lambda(theta)", exterior_one())]:
    form = [[str(v) for v in row] for row in supertrace_form(alg)]
    print(f"{name:14} dims ({alg.p}|{alg.q})  form {form}  etale: {is_etale(alg)}")

rng = random.Random(0)
sample = [random_supercommutative_algebra(rng) for _ in range(200)]
print(f"\n{len(sample)} random supercommutative algebras with an odd part; etale ones: "
      f"{sum(is_etale(a) for a in sample)}")
print("Odd elements square into the nilpotent part, so the form is degenerate on the odd block.")

print("\nSchur functors on a (1|1)-dimensional space vanish exactly on partitions containing (2,2):")
for lam in [(2,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]:
    d = SuperDim(1, 1)
    print(f"  {lam!s:8} dim {super_schur_dim(lam, d)}  vanishes: {schur_vanishes_super(lam, d)}")
