"""Super vector spaces: super Schur functors and etale superalgebras.

A superalgebra is given by structure constants on a homogeneous basis whose
first p vectors are even and last q are odd: ``mult[i][j][k]`` is the
coefficient of e_k in e_i * e_j.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .combinatorics import Partition, as_partition, size
from .exact_arith import det


class SuperDim(NamedTuple):
    p: int
    q: int

    @property
    def euler_char(self) -> int:
        return self.p - self.q


SUPER_SCHUR_MAX = 8


def _hook_tableaux(lam: Partition, d: SuperDim):
    """Yield (p|q)-semistandard fillings of lam.

    Letters 0..p-1 are unprimed, p..p+q-1 primed, ordered unprimed < primed.
    Rows and columns weakly increase; unprimed letters strictly increase down
    columns, primed letters strictly increase along rows.
    """
    p, q = d
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    fill: dict[tuple[int, int], int] = {}

    def ok(i, j, v):
        if j > 0:
            left = fill[(i, j - 1)]
            if left > v or (left == v and v >= p):
                return False
        if i > 0:
            up = fill[(i - 1, j)]
            if up > v or (up == v and v < p):
                return False
        return True

    def rec(k):
        if k == len(cells):
            yield dict(fill)
            return
        i, j = cells[k]
        for v in range(p + q):
            if ok(i, j, v):
                fill[(i, j)] = v
                yield from rec(k + 1)
                del fill[(i, j)]

    yield from rec(0)


def super_schur_dim(lam: Partition, d: SuperDim, bound: int = SUPER_SCHUR_MAX) -> int:
    """Dimension of the Schur functor S_lam applied to a super space of dimension (p|q)."""
    lam = as_partition(lam)
    if size(lam) > bound:
        raise ValueError(f"|lam| = {size(lam)} exceeds the configured bound {bound}")
    d = SuperDim(*d)
    return sum(1 for _ in _hook_tableaux(lam, d))


def schur_vanishes_super(lam: Partition, d: SuperDim) -> bool:
    """True iff lam contains the (p+1) x (q+1) rectangle, i.e. lam_{p+1} >= q+1."""
    lam = as_partition(lam)
    p, q = d
    return len(lam) > p and lam[p] >= q + 1


# ---------------------------------------------------------------- superalgebras


class InvalidPresentation(ValueError):
    pass


@dataclass(frozen=True)
class SuperAlgebra:
    """Unital supercommutative associative algebra by structure constants."""

    p: int
    q: int
    mult: tuple  # (p+q)^3 nested tuples of Fractions
    unit: tuple

    def __post_init__(self):
        n = self.p + self.q
        mult = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in self.mult)
        unit = tuple(Fraction(x) for x in self.unit)
        if len(mult) != n or any(len(pl) != n or any(len(r) != n for r in pl) for pl in mult) or len(unit) != n:
            raise InvalidPresentation("structure constants must have shape (p+q, p+q, p+q)")
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", unit)
        self._validate()

    @property
    def dim(self) -> int:
        return self.p + self.q

    def parity(self, i: int) -> int:
        return 0 if i < self.p else 1

    def _validate(self) -> None:
        n, m = self.dim, self.mult
        par = self.parity
        for i, j, k in itertools.product(range(n), repeat=3):
            if m[i][j][k] and par(k) != (par(i) + par(j)) % 2:
                raise InvalidPresentation(f"e{i}*e{j} has a component on e{k} of the wrong parity")
        if any(self.unit[i] for i in range(self.p, n)):
            raise InvalidPresentation("unit must be even")
        for j in range(n):
            left = self.product(self.unit, _basis(n, j))
            right = self.product(_basis(n, j), self.unit)
            if left != _basis(n, j) or right != _basis(n, j):
                raise InvalidPresentation(f"unit does not act as identity on e{j}")
        for i, j, k in itertools.product(range(n), repeat=3):
            if m[i][j][k] != (-1) ** (par(i) * par(j)) * m[j][i][k]:
                raise InvalidPresentation(f"not supercommutative at e{i}*e{j}")
        for i, j, l in itertools.product(range(n), repeat=3):
            a = self.product(self.product(_basis(n, i), _basis(n, j)), _basis(n, l))
            b = self.product(_basis(n, i), self.product(_basis(n, j), _basis(n, l)))
            if a != b:
                raise InvalidPresentation(f"not associative at (e{i}, e{j}, e{l})")

    def product(self, a: Sequence, b: Sequence) -> tuple:
        n, m = self.dim, self.mult
        out = [Fraction(0)] * n
        for i in range(n):
            if not a[i]:
                continue
            for j in range(n):
                if not b[j]:
                    continue
                c = a[i] * b[j]
                row = m[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += c * row[k]
        return tuple(out)

    def left_multiplication(self, a: Sequence) -> list[list[Fraction]]:
        """Matrix of x -> a*x; column j is a*e_j."""
        n = self.dim
        cols = [self.product(a, _basis(n, j)) for j in range(n)]
        return [[cols[j][k] for j in range(n)] for k in range(n)]

    def supertrace(self, a: Sequence) -> Fraction:
        """Trace of left multiplication on the even part minus the trace on the odd part."""
        L = self.left_multiplication(a)
        return sum(L[k][k] for k in range(self.p)) - sum(L[k][k] for k in range(self.p, self.dim))

    @property
    def euler_char(self) -> int:
        return self.p - self.q


def _basis(n: int, i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(n))


def supertrace_form(a: SuperAlgebra) -> list[list[Fraction]]:
    """Gram matrix of B(x, y) = supertrace(x*y) on the homogeneous basis."""
    n = a.dim
    traces = [a.supertrace(_basis(n, k)) for k in range(n)]
    return [[sum(a.mult[i][j][k] * traces[k] for k in range(n)) for j in range(n)] for i in range(n)]


def is_etale(a: SuperAlgebra) -> bool:
    return det(supertrace_form(a)) != 0


def odd_squares_traceless(a: SuperAlgebra) -> bool:
    """Every product of two odd basis vectors (in particular every odd square) has supertrace zero."""
    n = a.dim
    for i in range(a.p, n):
        for j in range(a.p, n):
            if a.supertrace(a.product(_basis(n, i), _basis(n, j))) != 0:
                return False
    return True


def etale_implies_even_check(sample: Sequence[SuperAlgebra]) -> bool:
    """True iff every etale algebra in the sample is purely even."""
    for a in sample:
        if not isinstance(a, SuperAlgebra):
            raise InvalidPresentation(f"not a superalgebra: {a!r}")
    return all(a.q == 0 for a in sample if is_etale(a))


# ---------------------------------------------------------------- named examples


def _from_table(p: int, q: int, table: dict[tuple[int, int], dict[int, Fraction]], unit: int = 0) -> SuperAlgebra:
    n = p + q
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), prod in table.items():
        for k, c in prod.items():
            m[i][j][k] = Fraction(c)
    return SuperAlgebra(p, q, m, _basis(n, unit))


def rational_field() -> SuperAlgebra:
    return _from_table(1, 0, {(0, 0): {0: 1}})


def split_algebra() -> SuperAlgebra:
    """Q x Q with the componentwise product, basis of the two idempotents."""
    n = 2
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    m[0][0][0] = m[1][1][1] = Fraction(1)
    return SuperAlgebra(2, 0, m, (1, 1))


def dual_numbers() -> SuperAlgebra:
    """Q[x]/(x^2) with x even."""
    return _from_table(2, 0, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})


def exterior_one() -> SuperAlgebra:
    """Lambda(theta) with theta odd: dimension (1|1)."""
    return _from_table(1, 1, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})


# ---------------------------------------------------------------- random generation


def _truncated_polynomial_algebra(f: Sequence[int]) -> list:
    """Structure constants of Q[x]/(f) on 1, x, ..., x^{c-1}; f monic, ascending coefficients."""
    c = len(f) - 1
    # powers x^0 .. x^{2c-2} reduced mod f
    red = []
    for e in range(2 * c - 1):
        v = [Fraction(0)] * (e + 1)
        v[e] = Fraction(1)
        for top in range(e, c - 1, -1):
            lead = v[top]
            if lead:
                for i in range(c + 1):
                    v[top - c + i] -= lead * f[i]
        red.append(v[:c] + [Fraction(0)] * max(0, c - len(v)))
    return [[red[i + j] for j in range(c)] for i in range(c)]


def _exterior_quotient(b: int, ideal: set[frozenset]):
    """Basis monomials (sorted tuples) of Lambda(theta_1..theta_b)/I and their product rule."""
    mons = [s for r in range(b + 1) for s in itertools.combinations(range(b), r)
            if not any(gen <= frozenset(s) for gen in ideal)]

    def mul(s, t):
        if set(s) & set(t):
            return None, 0
        merged = s + t
        inv = sum(1 for x in range(len(merged)) for y in range(x + 1, len(merged)) if merged[x] > merged[y])
        u = tuple(sorted(merged))
        if u not in mons:
            return None, 0
        return u, (-1) ** inv

    return mons, mul


def tensor_presentation(f: Sequence[int], b: int, ideal: set[frozenset]) -> SuperAlgebra:
    """(Q[x]/(f)) tensor (Lambda(theta_1..theta_b)/I) in a homogeneous basis, even vectors first."""
    cmult = _truncated_polynomial_algebra(f)
    c = len(f) - 1
    mons, emul = _exterior_quotient(b, ideal)
    even = [(i, s) for s in mons if len(s) % 2 == 0 for i in range(c)]
    odd = [(i, s) for s in mons if len(s) % 2 == 1 for i in range(c)]
    basis = even + odd
    index = {x: k for k, x in enumerate(basis)}
    n = len(basis)
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a, (i, s) in enumerate(basis):
        for bb, (j, t) in enumerate(basis):
            u, sign = emul(s, t)
            if u is None:
                continue
            for k, coef in enumerate(cmult[i][j]):
                if coef:
                    m[a][bb][index[(k, u)]] += sign * coef
    unit = [Fraction(0)] * n
    unit[index[(0, ())]] = Fraction(1)
    return SuperAlgebra(len(even), len(odd), m, unit)


def change_basis(a: SuperAlgebra, even_matrix, odd_matrix) -> SuperAlgebra:
    """Express `a` in the new basis e'_j = sum_i P[i][j] e_i, P block diagonal by parity."""
    n = a.dim
    P = [[Fraction(0)] * n for _ in range(n)]
    for i in range(a.p):
        for j in range(a.p):
            P[i][j] = Fraction(even_matrix[i][j])
    for i in range(a.q):
        for j in range(a.q):
            P[a.p + i][a.p + j] = Fraction(odd_matrix[i][j])
    Pinv = _inverse(P)
    cols = [tuple(P[i][j] for i in range(n)) for j in range(n)]
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = a.product(cols[i], cols[j])
            for k in range(n):
                m[i][j][k] = sum(Pinv[k][r] * prod[r] for r in range(n))
    unit = [sum(Pinv[k][r] * a.unit[r] for r in range(n)) for k in range(n)]
    return SuperAlgebra(a.p, a.q, m, unit)


def _inverse(P):
    n = len(P)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                fac = aug[r][c]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _random_invertible(rng: random.Random, k: int) -> list[list[int]]:
    while True:
        M = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(k)]
        if k == 0 or det(M) != 0:
            return M


# (b, ideal, dims of the exterior quotient): every template has at least one odd vector
_EXTERIOR_TEMPLATES = [
    (1, set()),                                                     # (1|1)
    (2, set()),                                                     # (2|2)
    (2, {frozenset({0, 1})}),                                       # (1|2)
    (3, {frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}),  # (1|3)
    (3, {frozenset({1, 2})}),                                       # (3|3)
    (3, {frozenset({0, 1}), frozenset({1, 2})}),                    # (2|3)
]


def random_supercommutative_algebra(rng: random.Random, max_dims: SuperDim = SuperDim(3, 3),
                                    require_odd: bool = True) -> SuperAlgebra:
    """A random unital supercommutative associative algebra of dimension at most max_dims.

    Built as (Q[x]/(f)) tensor (exterior algebra modulo a monomial ideal) and
    then scrambled by a random parity-preserving change of basis, so the
    axioms hold by construction and are re-checked on the result.
    """
    while True:
        if require_odd or rng.random() < 0.7:
            b, ideal = rng.choice(_EXTERIOR_TEMPLATES)
        else:
            b, ideal = 0, set()
        mons, _ = _exterior_quotient(b, ideal)
        e0 = sum(1 for s in mons if len(s) % 2 == 0)
        e1 = len(mons) - e0
        cmax = min(max_dims.p // e0, max_dims.q // e1 if e1 else 3)
        if cmax < 1:
            continue
        c = rng.randint(1, cmax)
        f = [rng.randint(-3, 3) for _ in range(c)] + [1]
        if rng.random() < 0.3 and c >= 2:
            r = rng.randint(-2, 2)
            # force a repeated root at r: f = (x - r)^2 * (x - s)^{c-2}
            s = rng.randint(-2, 2)
            f = [1]
            for root in [r, r] + [s] * (c - 2):
                f = [a - root * b for a, b in zip([0] + f, f + [0])]
        alg = tensor_presentation(f, b, ideal)
        return change_basis(alg, _random_invertible(rng, alg.p), _random_invertible(rng, alg.q))
