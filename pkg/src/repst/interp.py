"""Numerical invariants of Deligne's category Rep(S_t).

Everything here works at a parameter t given as an exact algebraic number.
Natural-number parameters are refused throughout: there the category is not
semisimple and neither the simple-object bookkeeping nor the integral-type
test means anything.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .characters import (
    character_value,
    class_size,
    generator_power_multiplicities,
    induction_multiplicity,
    lr_coefficient,
    stable_tensor_product,
)
from .combinatorics import (
    Partition,
    as_partition,
    bell_number,
    cycle_type,
    enumerate_partitions,
    hook_dimension,
    size,
)
from .diagrams import DiagramMorphism, compose, permutation_diagram, trace
from .exact_arith import (
    AlgebraicNumber,
    Poly,
    T,
    content_polynomial,
    factor_rational_roots,
    format_linear_factors,
    format_poly,
    q_polynomial,
    reduce_mod,
)


class NaturalParameterError(ValueError):
    """Raised for t in N, where Rep(S_t) is not semisimple."""


@dataclass(frozen=True)
class InterpolationPoint:
    """A value of the interpolation parameter t."""

    value: AlgebraicNumber

    @classmethod
    def of(cls, t: Union[int, Fraction, AlgebraicNumber, "InterpolationPoint"]) -> InterpolationPoint:
        if isinstance(t, InterpolationPoint):
            return t
        if isinstance(t, AlgebraicNumber):
            return cls(t)
        return cls(AlgebraicNumber.rational(t))

    @property
    def is_rational(self) -> bool:
        return self.value.modulus.degree == 1

    @property
    def is_rational_integer(self) -> bool:
        return self.is_rational and self.value.as_fraction().denominator == 1

    @property
    def is_natural(self) -> bool:
        return self.is_rational_integer and self.value.as_fraction() >= 0

    def require_generic(self) -> None:
        if self.is_natural:
            raise NaturalParameterError(
                f"t = {self.value.as_fraction()} is a natural number; Rep(S_t) is semisimple only for t outside N"
            )

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.value.as_fraction())
        return f"root of {format_poly(self.value.modulus)}"


class VirtualObject:
    """A semisimple object of Rep(S_t), as partitions with positive multiplicities."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Partition, int] = {}
        for lam, k in (terms or {}).items():
            lam = as_partition(lam)
            if k < 0:
                raise ValueError("multiplicities must be non-negative")
            if k:
                clean[lam] = clean.get(lam, 0) + int(k)
        self.terms = dict(sorted(clean.items(), key=lambda kv: (size(kv[0]), tuple(-x for x in kv[0]))))

    @classmethod
    def simple(cls, lam: Iterable[int], k: int = 1) -> VirtualObject:
        return cls({tuple(lam): k})

    def __add__(self, other: VirtualObject) -> VirtualObject:
        terms = dict(self.terms)
        for lam, k in other.terms.items():
            terms[lam] = terms.get(lam, 0) + k
        return VirtualObject(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualObject) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def length(self) -> int:
        """Number of simple summands counted with multiplicity."""
        return sum(self.terms.values())

    def __getitem__(self, lam) -> int:
        return self.terms.get(tuple(lam), 0)

    def __repr__(self) -> str:
        return f"VirtualObject({self.terms})"


# ---------------------------------------------------------------- Euler characteristics


def euler_char_simple(lam: Partition, t) -> AlgebraicNumber:
    """chi([lam]_t) = Q_lam(t), computed in Q[T]/(modulus of t)."""
    t = InterpolationPoint.of(t)
    t.require_generic()
    return q_polynomial(lam)(t.value)


def euler_char(x: VirtualObject, t) -> AlgebraicNumber:
    t = InterpolationPoint.of(t)
    t.require_generic()
    total = AlgebraicNumber(t.value.modulus, 0)
    for lam, k in x:
        total = total + q_polynomial(lam)(t.value) * k
    return total


def chi_schur_cycle_sum(lam: Partition, chi):
    """(dim V_lam / n!) * sum over sigma of chi_lam(sigma) * chi^{#cycles(sigma)}."""
    lam = as_partition(lam)
    n = size(lam)
    total = Fraction(0) if not isinstance(chi, (Poly, AlgebraicNumber)) else chi * 0
    for rho in enumerate_partitions(n):
        w = class_size(rho) * character_value(lam, rho)
        if w:
            total = total + _power(chi, len(rho)) * w
    return total * Fraction(hook_dimension(lam), math.factorial(n))


def chi_schur_content(lam: Partition, chi):
    """((dim V_lam)^2 / n!) * cp_lam(chi)."""
    lam = as_partition(lam)
    return content_polynomial(lam)(chi) * Fraction(hook_dimension(lam) ** 2, math.factorial(size(lam)))


def chi_schur_both_ways(lam: Partition, chi=T):
    """Euler characteristic of the isotypic Schur functor S_lam(X) given chi(X), two ways."""
    if isinstance(chi, int):
        chi = Fraction(chi)
    return chi_schur_cycle_sum(lam, chi), chi_schur_content(lam, chi)


def _power(x, k: int):
    if isinstance(x, (Poly, AlgebraicNumber)):
        return x**k
    return Fraction(x) ** k


# ---------------------------------------------------------------- Schur idempotents


SCHUR_IDEMPOTENT_MAX = 5


def schur_idempotent(lam: Partition, bound: int = SCHUR_IDEMPOTENT_MAX) -> DiagramMorphism:
    """The central idempotent (dim V_lam / n!) sum chi_lam(sigma) sigma acting on [1]^{(x) n}."""
    lam = as_partition(lam)
    n = size(lam)
    if n > bound:
        raise ValueError(f"|lam| = {n} exceeds the configured bound {bound}")
    scale = Fraction(hook_dimension(lam), math.factorial(n))
    terms = {}
    for sigma in itertools.permutations(range(n)):
        c = character_value(lam, cycle_type(sigma))
        if c:
            terms[permutation_diagram(sigma)] = Poly.const(scale * c)
    return DiagramMorphism(n, n, terms)


def is_zero_in_partition_algebra(lam: Partition, bound: int = SCHUR_IDEMPOTENT_MAX) -> bool:
    return schur_idempotent(lam, bound).is_zero()


def idempotency_check(lam: Partition, mu: Partition | None = None) -> bool:
    """d_lam o d_lam == d_lam, or d_lam o d_mu == 0 when mu differs from lam."""
    lam = as_partition(lam)
    if size(lam) > 4:
        raise ValueError("idempotency checks are limited to |lam| <= 4")
    d = schur_idempotent(lam)
    if mu is None or as_partition(mu) == lam:
        return compose(d, d) == d
    mu = as_partition(mu)
    if size(mu) != size(lam):
        raise ValueError("orthogonality needs partitions of the same size")
    return compose(d, schur_idempotent(mu)).is_zero()


def idempotent_sum(n: int) -> DiagramMorphism:
    total = DiagramMorphism.zero(n, n)
    for lam in enumerate_partitions(n):
        total = total + schur_idempotent(lam)
    return total


def schur_idempotent_trace(lam: Partition) -> Poly:
    return trace(schur_idempotent(lam))


# ---------------------------------------------------------------- tensor products


def tensor_decompose(x: VirtualObject, y: VirtualObject) -> VirtualObject:
    """Generic-t decomposition of x (x) y, extended bilinearly from simple objects."""
    out = VirtualObject()
    for lam, a in x:
        for mu, b in y:
            prod = stable_tensor_product(lam, mu)
            out = out + VirtualObject({nu: k * a * b for nu, k in prod.items()})
    return out


def top_degree_layer(x: VirtualObject, degree: int) -> VirtualObject:
    return VirtualObject({lam: k for lam, k in x if size(lam) == degree})


# ---------------------------------------------------------------- integral type


@dataclass(frozen=True)
class IntegralityFailure:
    partition: Partition
    multiplicity: int
    chi: AlgebraicNumber


def _witness_order(item: IntegralityFailure):
    # largest summands first, then largest multiplicity, then reverse lex
    return (-size(item.partition), -item.multiplicity, tuple(-p for p in item.partition))


def integrality_failures(x: VirtualObject, t) -> list[IntegralityFailure]:
    """Every simple summand of x whose Euler characteristic at t is not a rational integer."""
    t = InterpolationPoint.of(t)
    t.require_generic()
    fails = []
    for lam, k in x:
        chi = euler_char_simple(lam, t)
        if not chi.is_rational_integer():
            fails.append(IntegralityFailure(lam, k, chi))
    return sorted(fails, key=_witness_order)


def is_integral_type(x: VirtualObject, t) -> tuple[bool, IntegralityFailure | None]:
    """(verdict, witness).

    The simple objects [lam]_t are absolutely simple for t outside N, so x is of
    integral type exactly when each summand has an integer Euler characteristic.
    The witness is the first failing summand, ordered by size descending,
    multiplicity descending, then reverse lexicographically.
    """
    fails = integrality_failures(x, t)
    return (not fails, fails[0] if fails else None)


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    """Ordered named steps plus a verdict; serialisable to JSON."""

    title: str
    steps: list[dict] = field(default_factory=list)
    verdict: str = ""

    def add(self, name: str, value, anchor: str) -> None:
        self.steps.append({"name": name, "value": value, "paper_anchor": anchor})

    def __getitem__(self, name: str):
        for s in self.steps:
            if s["name"] == name:
                return s["value"]
        raise KeyError(name)


class ReproductionError(AssertionError):
    """A computed value disagrees with the value it is supposed to reproduce."""


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise ReproductionError(what)


TAU_MODULUS = Poly([15, -7, 1])


def reproduce_section7() -> Report:
    """Tensor square of an integral-type simple object that is not of integral type.

    Works through lam = (2,1): its Euler characteristic is -5 at t = -1 and at
    the two roots of T^2 - 7T + 15; at such a root tau the square contains
    [(3,2,1)]_tau twice, and chi([(3,2,1)]_tau) = 3 tau - 24 is not an integer.
    """
    rep = Report("tensor square of an integral-type object")
    lam, mu = (2, 1), (3, 2, 1)

    q = q_polynomial(lam)
    _expect(q == Poly.from_roots([4, 2, 0], Fraction(1, 3)), f"Q_(2,1) = {q}")
    rep.add("Q_(2,1)", {"expanded": format_poly(q), "factored": format_linear_factors(Fraction(1, 3), [4, 2, 0])},
            "Euler characteristic polynomial of [(2,1)]")

    at_minus_one = euler_char_simple(lam, -1)
    _expect(at_minus_one == -5, f"Q_(2,1)(-1) = {at_minus_one}")
    rep.add("Q_(2,1)(-1)", -5, "value at t = -1")

    fac = factor_rational_roots(q + 5)
    _expect([r for r, _ in fac.roots] == [Fraction(-1)], f"rational roots of Q_(2,1)+5: {fac.roots}")
    _expect(fac.cofactor.monic() == TAU_MODULUS, f"cofactor {fac.cofactor}")
    _expect(fac.cofactor_irreducible is True, "quadratic cofactor must be irreducible over Q")
    _expect(fac.expand() == q + 5, "factorisation does not multiply back")
    rep.add("Q_(2,1)(T) + 5", format_linear_factors(Fraction(1, 3), [-1], fac.cofactor.monic()),
            "other roots of Q_(2,1) + 5")

    tau = InterpolationPoint(AlgebraicNumber.root_of(fac.cofactor))
    rep.add("modulus", format_poly(tau.value.modulus), "minimal polynomial of tau")
    x = VirtualObject.simple(lam)
    ok_x, _ = is_integral_type(x, tau)
    _expect(ok_x and euler_char_simple(lam, tau) == -5, "[(2,1)]_tau must have chi = -5")
    rep.add("chi([(2,1)]_tau)", -5, "integral-type object")

    ind = induction_multiplicity(lam, lam, mu)
    lr = lr_coefficient(lam, lam, mu)
    _expect(ind == 2 and lr == 2, f"induction multiplicity {ind}, LR {lr}")
    square = tensor_decompose(x, x)
    _expect(square[mu] == 2, f"multiplicity of (3,2,1) in the tensor square is {square[mu]}")
    rep.add("multiplicity of (3,2,1)", 2, "induction multiplicity of V_(3,2,1)")

    q_mu = q_polynomial(mu)
    _expect(q_mu == Poly.from_roots([8, 6, 4, 2, 1, 0], Fraction(1, 45)), f"Q_(3,2,1) = {q_mu}")
    rem = reduce_mod(q_mu, tau.value.modulus)
    _expect(rem.rep == Poly([-24, 3]), f"remainder {rem}")
    _expect(rem.rep == Poly([-1080, 135]) * Fraction(1, 45), "remainder (1/45)(135T - 1080)")
    rep.add("remainder", {"reduced": format_poly(rem.rep), "unsimplified": "(1/45)*(135*T - 1080)"},
            "remainder of Q_(3,2,1) modulo the minimal polynomial")

    ok_sq, witness = is_integral_type(square, tau)
    _expect(not ok_sq and witness is not None and witness.partition == mu, f"witness {witness}")
    _expect(not rem.is_rational_integer(), "chi([(3,2,1)]_tau) must not be an integer")
    rep.add("integrality", {"object": True, "tensor square": False, "witness": list(mu)},
            "verdict on [(2,1)] and its tensor square")
    rep.verdict = "counterexample confirmed"
    return rep


@dataclass(frozen=True)
class Counterexample:
    partition: Partition
    target: int
    modulus: Poly
    witness: Partition
    chi: AlgebraicNumber


def search_counterexample(lam: Partition, target: int) -> Counterexample | None | str:
    """Look for t with chi([lam]_t) = target but [lam]_t (x) [lam]_t not of integral type.

    Factors Q_lam - target, uses an irreducible non-linear cofactor as modulus
    and scans the tensor square.  Returns None when no irrational candidate t
    exists and the string "undecided" when the cofactor cannot be certified
    irreducible.
    """
    lam = as_partition(lam)
    if size(lam) > 4:
        raise ValueError("search is limited to |lam| <= 4")
    shifted = q_polynomial(lam) - target
    if shifted.degree < 2:
        return None
    fac = factor_rational_roots(shifted)
    if fac.cofactor.degree < 2:
        return None
    if fac.cofactor_irreducible is not True:
        return "undecided"
    t = InterpolationPoint(AlgebraicNumber.root_of(fac.cofactor))
    x = VirtualObject.simple(lam)
    ok_x, _ = is_integral_type(x, t)
    if not ok_x:
        return None
    ok_sq, witness = is_integral_type(tensor_decompose(x, x), t)
    if ok_sq:
        return None
    return Counterexample(lam, target, t.value.modulus, witness.partition, witness.chi)


def generator_power_report(n: int) -> Report:
    """Length and endomorphism dimension of [1]^{(x) n}, with the sqrt(n!) lower bound."""
    if n > 5:
        raise ValueError("generator_power_report is limited to n <= 5")
    mults = generator_power_multiplicities(n)
    length = sum(mults.values())
    dim = sum(k * k for k in mults.values())
    _expect(dim == bell_number(2 * n), f"sum of squared multiplicities {dim} != Bell({2 * n})")
    _expect(length * length >= math.factorial(n), f"length {length} < sqrt({n}!)")
    rep = Report(f"[1]^{n}")
    rep.add("multiplicities", [{"partition": list(k), "mult": v} for k, v in mults.items()],
            "decomposition of tensor powers of [1]")
    rep.add("length", length, "length of [1]^n")
    rep.add("dim End", dim, "dimension of End([1]^n) = Bell(2n)")
    rep.add("sqrt(n!)", math.sqrt(math.factorial(n)), "lower bound on the length")
    rep.verdict = "length >= sqrt(n!)"
    return rep
