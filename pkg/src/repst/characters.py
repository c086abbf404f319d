"""Character theory of the symmetric groups.

Character values come from the Murnaghan-Nakayama rule, run on beta-sets
(first-column hook lengths), where removing a rim hook of length r is moving a
bead from position b to b - r.  Littlewood-Richardson coefficients are computed
twice on purpose: by Frobenius reciprocity from characters, and by enumerating
LR tableaux.  Multiplicities in Deligne's category for generic t come from
padded-partition Kronecker products at large m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .combinatorics import (
    Partition,
    as_partition,
    bell_number,
    contains,
    enumerate_partitions,
    pad_partition,
    partitions_up_to,
    size,
)


class StabilizationError(RuntimeError):
    """A padded multiplicity changed between two consecutive admissible m."""


def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(x for x in (beta[i] - (ell - 1 - i) for i in range(ell)) if x > 0)


def rim_hooks(lam: Partition, r: int) -> list[tuple[Partition, int]]:
    """All (lam minus a rim hook of length r, leg length of that hook)."""
    beta = _beta_set(lam)
    present = set(beta)
    out = []
    for b in beta:
        if b - r < 0 or (b - r) in present:
            continue
        leg = sum(1 for x in beta if b - r < x < b)
        new = [x for x in beta if x != b] + [b - r]
        out.append((_from_beta(new), leg))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    return sum((-1) ** leg * _mn(mu, rest) for mu, leg in rim_hooks(lam, r))


def character_value(lam: Partition, rho: Partition) -> int:
    """chi_lam evaluated on the class of cycle type rho."""
    lam, rho = as_partition(lam), as_partition(rho)
    if size(lam) != size(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, rho)


@lru_cache(maxsize=None)
def class_size(rho: Partition) -> int:
    """Number of permutations with cycle type rho."""
    rho = as_partition(rho)
    denom = 1
    for k in set(rho):
        mk = rho.count(k)
        denom *= k**mk * math.factorial(mk)
    return math.factorial(size(rho)) // denom


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n, as values on cycle types."""

    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        if set(self.values) != set(enumerate_partitions(self.n)):
            raise ValueError("class function must be defined on every cycle type of S_n")

    def __getitem__(self, rho: Partition) -> Fraction:
        return self.values[rho]

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        _check_same_n(self, other)
        return ClassFunction(self.n, {r: self[r] * other[r] for r in self.values})

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _check_same_n(self, other)
        return ClassFunction(self.n, {r: self[r] + other[r] for r in self.values})


def _check_same_n(a: ClassFunction, b: ClassFunction) -> None:
    if a.n != b.n:
        raise ValueError(f"class functions on different groups: S_{a.n} vs S_{b.n}")


def character(lam: Partition) -> ClassFunction:
    n = size(lam)
    return ClassFunction(n, {rho: Fraction(character_value(lam, rho)) for rho in enumerate_partitions(n)})


def regular_character(n: int) -> ClassFunction:
    ident = (1,) * n
    return ClassFunction(n, {rho: Fraction(math.factorial(n) if rho == ident else 0)
                             for rho in enumerate_partitions(n)})


def permutation_character(n: int, power: int = 1) -> ClassFunction:
    """Character of (C^n)^{tensor power}: fix(sigma)^power."""
    return ClassFunction(n, {rho: Fraction(rho.count(1) ** power) for rho in enumerate_partitions(n)})


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    _check_same_n(phi, psi)
    total = sum(class_size(rho) * phi[rho] * psi[rho] for rho in phi.values)
    return Fraction(total, math.factorial(phi.n))


def character_table(n: int) -> list[list[int]]:
    """Rows indexed by irreducibles, columns by classes, both in reverse lex order."""
    parts = enumerate_partitions(n)
    return [[character_value(lam, rho) for rho in parts] for lam in parts]


# ---------------------------------------------------------------- products


def induction_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """[Ind_{S_a x S_b}^{S_{a+b}} (V_lam x V_mu) : V_nu] by Frobenius reciprocity."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    a, b = size(lam), size(mu)
    if size(nu) != a + b:
        raise ValueError("|nu| must equal |lam| + |mu|")
    total = 0
    for r1 in enumerate_partitions(a):
        c1 = class_size(r1) * _mn(lam, r1)
        if not c1:
            continue
        for r2 in enumerate_partitions(b):
            c2 = class_size(r2) * _mn(mu, r2)
            if not c2:
                continue
            total += c1 * c2 * _mn(nu, tuple(sorted(r1 + r2, reverse=True)))
    q, r = divmod(total, math.factorial(a) * math.factorial(b))
    assert r == 0, "induction multiplicity must be an integer"
    return q


def lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> list[list[list[int]]]:
    """LR tableaux of skew shape nu/lam and content mu.

    Rows weakly increase, columns strictly increase, and the reverse row
    reading word (right to left, top to bottom) is a lattice word.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if size(nu) != size(lam) + size(mu) or not contains(nu, lam):
        return []
    rows = len(nu)
    lam_ext = list(lam) + [0] * (rows - len(lam))
    k = len(mu)
    found: list[list[list[int]]] = []
    filling: list[list[int]] = []

    def row_fillings(i: int, counts: list[int]):
        start, stop = lam_ext[i], nu[i]
        width = stop - start
        above = filling[i - 1] if i > 0 else None
        above_start = lam_ext[i - 1] if i > 0 else 0
        row = [0] * width
        # fill right to left so the lattice condition can be checked as we go
        def rec(pos: int, cnt: list[int]):
            if pos < 0:
                yield list(row), cnt
                return
            hi = row[pos + 1] if pos + 1 < width else k
            col = start + pos
            lo = 1
            if above is not None and col >= above_start:
                lo = above[col - above_start] + 1
            for v in range(min(hi, k), lo - 1, -1):
                if cnt[v - 1] >= mu[v - 1]:
                    continue
                if v > 1 and cnt[v - 1] + 1 > cnt[v - 2]:
                    continue
                row[pos] = v
                cnt[v - 1] += 1
                yield from rec(pos - 1, cnt)
                cnt[v - 1] -= 1

        yield from rec(width - 1, counts)

    def rec_rows(i: int, counts: list[int]):
        if i == rows:
            if counts == list(mu):
                found.append([list(r) for r in filling])
            return
        for row, cnt in row_fillings(i, counts):
            filling.append(row)
            rec_rows(i + 1, list(cnt))
            filling.pop()

    if k == 0:
        return [[[] for _ in range(rows)]] if lam_ext == list(nu) else []
    rec_rows(0, [0] * k)
    return found


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu} by tableau enumeration."""
    return len(lr_tableaux(lam, mu, nu))


def kronecker_coefficient(a: Partition, b: Partition, c: Partition) -> int:
    """<chi_a chi_b, chi_c> in S_m, all three partitions of the same m."""
    m = size(a)
    if size(b) != m or size(c) != m:
        raise ValueError("Kronecker coefficients need partitions of the same size")
    total = sum(class_size(rho) * _mn(a, rho) * _mn(b, rho) * _mn(c, rho) for rho in enumerate_partitions(m))
    q, r = divmod(total, math.factorial(m))
    assert r == 0
    return q


def stable_tensor_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of [nu]_t in [lam]_t (x) [mu]_t for generic t.

    Computed as the Kronecker coefficient of the padded partitions at
    m = 2(|lam|+|mu|)+2 and again at m+1; a disagreement raises.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if size(nu) > size(lam) + size(mu):
        return 0
    m = 2 * (size(lam) + size(mu)) + 2
    vals = [kronecker_coefficient(pad_partition(lam, k), pad_partition(mu, k), pad_partition(nu, k))
            for k in (m, m + 1)]
    if vals[0] != vals[1]:
        raise StabilizationError(f"{lam} x {mu} -> {nu}: {vals[0]} at m={m}, {vals[1]} at m={m + 1}")
    return vals[0]


def stable_tensor_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Full generic decomposition of [lam]_t (x) [mu]_t, zero entries dropped."""
    out = {}
    for nu in partitions_up_to(size(lam) + size(mu)):
        k = stable_tensor_multiplicity(lam, mu, nu)
        if k:
            out[nu] = k
    return out


def _power_multiplicity(lam: Partition, n: int, m: int) -> int:
    target = pad_partition(lam, m)
    total = sum(class_size(rho) * rho.count(1) ** n * _mn(target, rho) for rho in enumerate_partitions(m))
    q, r = divmod(total, math.factorial(m))
    assert r == 0
    return q


def generator_power_multiplicities(n: int) -> dict[Partition, int]:
    """Multiplicity of each simple [lam]_t in [1]^{(x) n}, for generic t.

    Computed from the permutation character of S_m acting on (C^m)^{(x) n} at
    m = 2n+2, checked against m+1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    m = 2 * n + 2
    out = {}
    for lam in partitions_up_to(n):
        a, b = _power_multiplicity(lam, n, m), _power_multiplicity(lam, n, m + 1)
        if a != b:
            raise StabilizationError(f"[1]^{n}: multiplicity of {lam} is {a} at m={m}, {b} at m={m + 1}")
        if a:
            out[lam] = a
    return out


def generator_power_checksum(n: int) -> tuple[int, int]:
    """(sum of squared multiplicities, Bell(2n)); equal when the decomposition is right."""
    mults = generator_power_multiplicities(n)
    return sum(v * v for v in mults.values()), bell_number(2 * n)
