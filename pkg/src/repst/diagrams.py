"""Partition diagrams and the partition category.

A diagram with `top` = m and `bottom` = n is a set partition of m + n strands.
Strands are dense integers: top strand i is i, bottom strand j is m + j; the
JSON labels are "t1".."tm" and "b1".."bn".  A diagram is read as a morphism
from its top row (source) to its bottom row (target), so `compose(g, f)`
glues the bottom row of f to the top row of g.  Composition multiplies by
T for every component that lives entirely in the glued middle row.

Morphisms are finite Q[T]-combinations of diagrams, expressed either in the
diagram basis or in the orbit basis x_pi = sum_{rho >= pi} mu(pi, rho) d_rho.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    canonical_set_partition,
    coarsenings,
    enumerate_set_partitions,
    moebius_partition_lattice,
)
from .exact_arith import Poly, T, det, factor_rational_roots

DIAGRAM = "diagram"
ORBIT = "orbit"


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True, order=True)
class PartitionDiagram:
    top: int
    bottom: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = canonical_set_partition(self.blocks, range(self.top + self.bottom))
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def from_labels(cls, top: int, bottom: int, blocks: Iterable[Iterable[str]]) -> PartitionDiagram:
        return cls(top, bottom, tuple(tuple(label_to_strand(s, top, bottom) for s in b) for b in blocks))

    def labels(self) -> list[list[str]]:
        return [[strand_to_label(x, self.top) for x in b] for b in self.blocks]

    def propagating_number(self) -> int:
        return sum(1 for b in self.blocks if min(b) < self.top <= max(b))

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(b) + "}" for b in self.labels()) + "}"


def strand_to_label(x: int, top: int) -> str:
    return f"t{x + 1}" if x < top else f"b{x - top + 1}"


def label_to_strand(label: str, top: int, bottom: int) -> int:
    row, idx = label[0], int(label[1:]) - 1
    if row == "t" and 0 <= idx < top:
        return idx
    if row == "b" and 0 <= idx < bottom:
        return top + idx
    raise ValueError(f"bad strand label {label!r} for a ({top}, {bottom}) diagram")


# ---------------------------------------------------------------- named diagrams


def identity_diagram(n: int) -> PartitionDiagram:
    return PartitionDiagram(n, n, tuple((i, n + i) for i in range(n)))


def discrete_diagram(m: int, n: int | None = None) -> PartitionDiagram:
    n = m if n is None else n
    return PartitionDiagram(m, n, tuple((i,) for i in range(m + n)))


def join_diagram(m: int, n: int | None = None) -> PartitionDiagram:
    """All strands in one block."""
    n = m if n is None else n
    return PartitionDiagram(m, n, (tuple(range(m + n)),) if m + n else ())


def permutation_diagram(sigma: Sequence[int]) -> PartitionDiagram:
    """Blocks {t_i, b_sigma(i)}, sigma given as images of 0..n-1.

    With this convention compose(perm(s), perm(r)) == perm(s o r).
    """
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {sigma}")
    return PartitionDiagram(n, n, tuple((i, n + sigma[i]) for i in range(n)))


@lru_cache(maxsize=None)
def all_diagrams(top: int, bottom: int) -> tuple[PartitionDiagram, ...]:
    """Every diagram of the given shape, in restricted-growth order."""
    return tuple(PartitionDiagram(top, bottom, sp) for sp in enumerate_set_partitions(range(top + bottom)))


# ---------------------------------------------------------------- diagram-level operations


@lru_cache(maxsize=1 << 18)
def compose_diagrams(g: PartitionDiagram, f: PartitionDiagram) -> tuple[int, PartitionDiagram]:
    """(number of closed middle components, resulting diagram) for g o f."""
    if f.bottom != g.top:
        raise ValueError(f"cannot compose: f has {f.bottom} bottom strands, g has {g.top} top strands")
    a, b, c = f.top, f.bottom, g.bottom
    uf = _UnionFind(a + b + c)
    for blk in f.blocks:
        for x in blk[1:]:
            uf.union(blk[0], x)
    for blk in g.blocks:
        first = blk[0] + a
        for x in blk[1:]:
            uf.union(first, x + a)
    groups: dict[int, list[int]] = {}
    for x in range(a + b + c):
        groups.setdefault(uf.find(x), []).append(x)
    closed = 0
    blocks = []
    for members in groups.values():
        outer = [x if x < a else x - b for x in members if x < a or x >= a + b]
        if outer:
            blocks.append(tuple(outer))
        else:
            closed += 1
    return closed, PartitionDiagram(a, c, tuple(blocks))


def tensor_diagrams(d1: PartitionDiagram, d2: PartitionDiagram) -> PartitionDiagram:
    """Side-by-side juxtaposition, d1 on the left."""
    m1, n1, m2 = d1.top, d1.bottom, d2.top

    def relabel1(x):
        return x if x < m1 else x + m2

    def relabel2(x):
        return x + m1 if x < m2 else x - m2 + m1 + m2 + n1

    blocks = [tuple(relabel1(x) for x in b) for b in d1.blocks]
    blocks += [tuple(relabel2(x) for x in b) for b in d2.blocks]
    return PartitionDiagram(m1 + m2, n1 + d2.bottom, tuple(blocks))


@lru_cache(maxsize=1 << 16)
def closure_components(d: PartitionDiagram) -> int:
    """Components after joining t_i to b_i for every i."""
    if d.top != d.bottom:
        raise ValueError("trace needs an endomorphism diagram")
    n = d.top
    uf = _UnionFind(2 * n)
    for blk in d.blocks:
        for x in blk[1:]:
            uf.union(blk[0], x)
    for i in range(n):
        uf.union(i, n + i)
    return len({uf.find(x) for x in range(2 * n)})


# ---------------------------------------------------------------- morphisms


def _clean(terms: Mapping[PartitionDiagram, Poly]) -> dict[PartitionDiagram, Poly]:
    return {d: c for d, c in terms.items() if not c.is_zero()}


@dataclass(frozen=True)
class DiagramMorphism:
    """A Q[T]-linear combination of diagrams of one shape."""

    top: int
    bottom: int
    terms: Mapping[PartitionDiagram, Poly] = field(default_factory=dict)
    basis: str = DIAGRAM

    def __post_init__(self):
        if self.basis not in (DIAGRAM, ORBIT):
            raise ValueError(f"unknown basis {self.basis!r}")
        terms = {}
        for d, c in self.terms.items():
            if (d.top, d.bottom) != (self.top, self.bottom):
                raise ValueError("all diagrams in a morphism must share one shape")
            terms[d] = Poly.coerce(c)
        object.__setattr__(self, "terms", _clean(terms))

    @classmethod
    def of(cls, d: PartitionDiagram, coeff=1, basis: str = DIAGRAM) -> DiagramMorphism:
        return cls(d.top, d.bottom, {d: Poly.coerce(coeff)}, basis)

    @classmethod
    def identity(cls, n: int) -> DiagramMorphism:
        return cls.of(identity_diagram(n))

    @classmethod
    def zero(cls, top: int, bottom: int, basis: str = DIAGRAM) -> DiagramMorphism:
        return cls(top, bottom, {}, basis)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: DiagramMorphism) -> None:
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise ValueError("shape mismatch")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: DiagramMorphism) -> DiagramMorphism:
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, Poly()) + c
        return DiagramMorphism(self.top, self.bottom, terms, self.basis)

    def __neg__(self) -> DiagramMorphism:
        return self.scale(-1)

    def __sub__(self, other: DiagramMorphism) -> DiagramMorphism:
        return self + (-other)

    def scale(self, c) -> DiagramMorphism:
        c = Poly.coerce(c)
        return DiagramMorphism(self.top, self.bottom, {d: v * c for d, v in self.terms.items()}, self.basis)

    def __rmul__(self, c) -> DiagramMorphism:
        return self.scale(c)

    def coefficient(self, d: PartitionDiagram) -> Poly:
        return self.terms.get(d, Poly())

    def specialize(self, t) -> dict[PartitionDiagram, object]:
        """Coefficients evaluated at T = t (a rational or an AlgebraicNumber)."""
        return {d: c(t) for d, c in self.terms.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramMorphism):
            return NotImplemented
        return (self.top, self.bottom, self.basis) == (other.top, other.bottom, other.basis) and \
            dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.top, self.bottom, self.basis, frozenset(self.terms.items())))


def compose(g: DiagramMorphism, f: DiagramMorphism) -> DiagramMorphism:
    """g o f in the diagram basis."""
    if g.basis != DIAGRAM or f.basis != DIAGRAM:
        raise ValueError("compose works in the diagram basis; use compose_orbit for orbit-basis inputs")
    if f.bottom != g.top:
        raise ValueError(f"cannot compose: f has {f.bottom} bottom strands, g has {g.top} top strands")
    terms: dict[PartitionDiagram, Poly] = {}
    powers: dict[int, Poly] = {}
    for dg, cg in g.terms.items():
        for df, cf in f.terms.items():
            k, d = compose_diagrams(dg, df)
            tk = powers.get(k)
            if tk is None:
                tk = powers[k] = T**k
            terms[d] = terms.get(d, Poly()) + cg * cf * tk
    return DiagramMorphism(f.top, g.bottom, terms, DIAGRAM)


def tensor(f: DiagramMorphism, g: DiagramMorphism) -> DiagramMorphism:
    if f.basis != g.basis:
        raise ValueError(f"basis mismatch: {f.basis} vs {g.basis}")
    if f.basis == ORBIT:
        return to_orbit_basis(tensor(from_orbit_basis(f), from_orbit_basis(g)))
    terms: dict[PartitionDiagram, Poly] = {}
    for d1, c1 in f.terms.items():
        for d2, c2 in g.terms.items():
            d = tensor_diagrams(d1, d2)
            terms[d] = terms.get(d, Poly()) + c1 * c2
    return DiagramMorphism(f.top + g.top, f.bottom + g.bottom, terms, DIAGRAM)


def trace(f: DiagramMorphism) -> Poly:
    """Categorical trace: close every t_i to b_i and count components."""
    if f.top != f.bottom:
        raise ValueError("trace needs an endomorphism")
    if f.basis == ORBIT:
        f = from_orbit_basis(f)
    total = Poly()
    for d, c in f.terms.items():
        total = total + c * T ** closure_components(d)
    return total


# ---------------------------------------------------------------- orbit basis


@lru_cache(maxsize=1 << 16)
def _upper_set(d: PartitionDiagram) -> tuple[tuple[PartitionDiagram, int], ...]:
    """(rho, mu(d, rho)) for every diagram rho coarser than or equal to d."""
    ground = range(d.top + d.bottom)
    out = []
    for rho in coarsenings(d.blocks, ground):
        out.append((PartitionDiagram(d.top, d.bottom, rho), moebius_partition_lattice(d.blocks, rho)))
    return tuple(out)


def to_orbit_basis(f: DiagramMorphism) -> DiagramMorphism:
    """Rewrite a diagram-basis morphism in the orbit basis, using d_pi = sum_{rho >= pi} x_rho."""
    if f.basis == ORBIT:
        return f
    terms: dict[PartitionDiagram, Poly] = {}
    for d, c in f.terms.items():
        for rho, _ in _upper_set(d):
            terms[rho] = terms.get(rho, Poly()) + c
    return DiagramMorphism(f.top, f.bottom, terms, ORBIT)


def from_orbit_basis(f: DiagramMorphism) -> DiagramMorphism:
    """Inverse of to_orbit_basis, using x_pi = sum_{rho >= pi} mu(pi, rho) d_rho."""
    if f.basis == DIAGRAM:
        return f
    terms: dict[PartitionDiagram, Poly] = {}
    for d, c in f.terms.items():
        for rho, mu in _upper_set(d):
            terms[rho] = terms.get(rho, Poly()) + c * mu
    return DiagramMorphism(f.top, f.bottom, terms, DIAGRAM)


def compose_orbit(g: DiagramMorphism, f: DiagramMorphism) -> DiagramMorphism:
    """g o f for orbit-basis inputs, returned in the orbit basis."""
    if g.basis != f.basis:
        raise ValueError(f"basis mismatch: {g.basis} vs {f.basis}")
    return to_orbit_basis(compose(from_orbit_basis(g), from_orbit_basis(f)))


def factors_over_naturals(p: Poly) -> bool:
    """True if p is a rational constant times a product of factors (T - i), i in N."""
    if p.is_zero() or p.is_constant():
        return True
    fac = factor_rational_roots(p)
    return fac.cofactor.is_constant() and all(r.denominator == 1 and r >= 0 for r, _ in fac.roots)


# ---------------------------------------------------------------- Gram forms


def end_dimension(n: int) -> int:
    """Dimension of End([1]^{(x) n}), counted by enumerating diagrams."""
    return len(all_diagrams(n, n))


def gram_matrix(n: int) -> list[list[Poly]]:
    """G[a][b] = Tr(a o b) over the diagram basis of n-strand endomorphisms."""
    basis = all_diagrams(n, n)
    degs = [[0] * len(basis) for _ in basis]
    for i, a in enumerate(basis):
        for j in range(i, len(basis)):
            k, d = compose_diagrams(a, basis[j])
            degs[i][j] = degs[j][i] = k + closure_components(d)
    return [[T**k for k in row] for row in degs]


def gram_degrees(n: int) -> list[list[int]]:
    """Exponents of the monomial entries of gram_matrix(n)."""
    return [[g.degree for g in row] for row in gram_matrix(n)]


class BudgetExceeded(RuntimeError):
    """The requested computation is beyond the configured size budget."""


def _primes_below(start: int):
    import flint

    c = start - 1
    while c > 2:
        if flint.fmpz(c).is_prime():
            yield c
        c -= 1


def _det_poly_mod(degs: list[list[int]], prime: int) -> list[int]:
    """Coefficients mod prime of det(T^degs[i][j]), from values at T = 0..D."""
    import flint

    D = sum(max(row) for row in degs)
    top = max(max(row) for row in degs)
    indicators = [flint.nmod_mat([[int(e == k) for e in row] for row in degs], prime) for k in range(top + 1)]
    values = []
    for x in range(D + 1):
        M = indicators[0]
        xk = 1
        for k in range(1, top + 1):
            xk = xk * x % prime
            M = M + indicators[k] * xk
        values.append(int(M.det()))
    return _interpolate_mod(values, prime)


def _worker_count(workers: int | None) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get("THREADS", "1"))
        except ValueError:
            workers = 1
    return max(1, workers)


def _gram_det_multimodular(degs: list[list[int]], workers: int | None = None) -> Poly:
    """Exact determinant of the matrix (T^degs[i][j]) via reduction modulo word-size primes.

    Each permutation contributes +-1 to exactly one coefficient, so every
    coefficient is bounded by N! in absolute value; enough primes are used to
    exceed twice that bound, which makes the symmetric CRT lift exact.
    """
    bound = 2 * math.factorial(len(degs)) + 1
    primes, modulus = [], 1
    for prime in _primes_below(1 << 62):
        primes.append(prime)
        modulus *= prime
        if modulus > bound:
            break
    workers = _worker_count(workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            residues = list(pool.map(partial(_det_poly_mod, degs), primes))
    else:
        residues = [_det_poly_mod(degs, prime) for prime in primes]
    coeffs, m = residues[0], primes[0]
    for prime, local in zip(primes[1:], residues[1:]):
        inv = pow(m, -1, prime)
        coeffs = [c + m * ((l - c) * inv % prime) for c, l in zip(coeffs, local)]
        m *= prime
    half = m // 2
    return Poly([c - m if c > half else c for c in coeffs])


def _interpolate_mod(values: list[int], prime: int) -> list[int]:
    """Coefficients (length len(values)) of the interpolant through (k, values[k]) modulo prime."""
    import flint

    d = len(values) - 1
    diffs = []
    row = [v % prime for v in values]
    while row:
        diffs.append(row[0])
        row = [(b - a) % prime for a, b in zip(row, row[1:])]
    inv_fact = [1] * (d + 1)
    for k in range(1, d + 1):
        inv_fact[k] = inv_fact[k - 1] * pow(k, -1, prime) % prime
    acc = flint.nmod_poly([diffs[d] * inv_fact[d] % prime], prime)
    for k in range(d - 1, -1, -1):
        acc = acc * flint.nmod_poly([-k % prime, 1], prime) + diffs[k] * inv_fact[k] % prime
    out = [int(c) for c in acc.coeffs()]
    return out + [0] * (d + 1 - len(out))


def gram_det(n: int, *, exact_max: int = 2, interpolation_max: int = 3,
             point_budget: int | None = None, workers: int | None = None) -> Poly:
    """Determinant of gram_matrix(n) as a polynomial in T.

    Computed symbolically (fraction-free elimination over Q[T]) for n <= exact_max
    and by evaluation at the integer points 0..D plus interpolation for larger n,
    up to interpolation_max.  D is the sum over rows of the largest entry degree,
    an upper bound for the degree; `point_budget` caps D + 1.  Evaluation is done
    modulo enough primes to recover the integer coefficients exactly; the
    primes are independent and run on `workers` processes (default: the
    THREADS environment variable, else 1).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Poly.const(1)
    if n <= exact_max:
        return det(gram_matrix(n))
    if n > interpolation_max:
        raise BudgetExceeded(f"gram_det({n}) exceeds interpolation_max={interpolation_max}")
    degs = gram_degrees(n)
    npoints = sum(max(row) for row in degs) + 1
    if point_budget is not None and npoints > point_budget:
        raise BudgetExceeded(f"gram_det({n}) needs {npoints} points, budget is {point_budget}")
    return _gram_det_multimodular(degs, workers)


def specialize_matrix(matrix: Sequence[Sequence[Poly]], t) -> list[list]:
    return [[p(t) for p in row] for row in matrix]
