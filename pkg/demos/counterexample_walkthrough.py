"""An integral-type simple object whose tensor square is not of integral type.

Run:  python3 demos/counterexample_walkthrough.py
"""

from repst.exact_arith import AlgebraicNumber, factor_rational_roots, format_poly, q_polynomial, reduce_mod
from repst.interp import VirtualObject, euler_char_simple, is_integral_type, tensor_decompose

lam = (2, 1)
q = q_polynomial(lam)
print(f"chi([{lam}]_t) is the polynomial Q(T) = {format_poly(q)}")
print(f"At t = -1 it equals {euler_char_simple(lam, -1)}.")

fac = factor_rational_roots(q + 5)
print(f"Q(T) + 5 has rational roots {[str(r) for r, _ in fac.roots]} and cofactor {format_poly(fac.cofactor)}.")
tau = AlgebraicNumber.root_of(fac.cofactor)
print(f"Let tau be a root of {format_poly(tau.modulus)}; it is irrational, so t = tau is a valid parameter.")
print(f"chi([{lam}]_tau) = {euler_char_simple(lam, tau)}, an integer.")

x = VirtualObject.simple(lam)
square = tensor_decompose(x, x)
print(f"\n[{lam}]_tau (x) [{lam}]_tau has {square.length()} simple summands; the largest ones are")
for mu, k in square:
    if sum(mu) == 6:
        chi = euler_char_simple(mu, tau)
        print(f"  {mu!s:14} x{k}   chi = {chi}")

rem = reduce_mod(q_polynomial((3, 2, 1)), tau.modulus)
print(f"\nIn particular Q_(3,2,1) reduces to {format_poly(rem.rep)} modulo {format_poly(tau.modulus)}.")
ok, witness = is_integral_type(square, tau)
print(f"Tensor square of integral type? {ok}.  Witness: {witness.partition} with chi = {witness.chi}.")
