"""Partition diagrams, their composition, traces and the Gram determinant.

Run:  python3 demos/partition_category_tour.py
"""

from repst.diagrams import (
    ORBIT,
    DiagramMorphism,
    all_diagrams,
    compose,
    compose_orbit,
    discrete_diagram,
    end_dimension,
    gram_det,
    permutation_diagram,
    to_orbit_basis,
    trace,
)
from repst.exact_arith import factor_rational_roots, format_linear_factors, format_poly


def show(f):
    return " + ".join(f"[{format_poly(c)}] {d}" for d, c in sorted(f.terms.items())) or "0"


disc = DiagramMorphism.of(discrete_diagram(1))
print("Composing the disconnected one-strand diagram with itself closes one loop:")
print(" ", show(compose(disc, disc)))

cycle = permutation_diagram([1, 2, 0])
print(f"\nA 3-cycle {cycle} has trace {format_poly(trace(DiagramMorphism.of(cycle)))}:")
print("  closing the strands leaves one component, i.e. one cycle.")

print("\nIn the orbit basis the structure constants are products of factors T - i:")
x = to_orbit_basis(disc)
print("  d_disc =", show(x))
x_disc = DiagramMorphism(1, 1, {discrete_diagram(1): 1}, ORBIT)
print("  x_disc o x_disc =", show(compose_orbit(x_disc, x_disc)))

print("\nEndomorphism dimensions are Bell numbers:", [end_dimension(n) for n in range(4)])
print(f"Diagrams with 2 top and 1 bottom point: {len(all_diagrams(2, 1))}")

for n in (1, 2):
    d = gram_det(n)
    fac = factor_rational_roots(d)
    roots = [r for r, k in sorted(fac.roots, reverse=True) for _ in range(k)]
    print(f"\nGram determinant on {n} strand(s): {format_linear_factors(fac.cofactor.lead, roots)}")
    print("  it vanishes only at natural numbers, where the category stops being semisimple.")
