"""Exact polynomial and number-field arithmetic over the rationals.

`Poly` is an immutable univariate polynomial in the indeterminate T with
`fractions.Fraction` coefficients stored in ascending degree.  `AlgebraicNumber`
is a residue class in Q[T]/(m) for a monic modulus m; no complex embedding is
ever chosen, so every comparison is exact.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .combinatorics import Partition, as_partition, cells, hook_dimension, size

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Poly:
    """Polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, deg: int, c: Scalar = 1) -> Poly:
        return cls([0] * deg + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> Poly:
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @classmethod
    def coerce(cls, x) -> Poly:
        return x if isinstance(x, Poly) else cls.const(x)

    # structure
    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self * (1 / self.lead)

    def primitive_integer(self) -> tuple[Fraction, list[int]]:
        """Return (content, integer coefficients) with p = content * sum(c_i T^i).

        The integer coefficients are coprime and the leading one is positive.
        """
        if self.is_zero():
            return Fraction(0), []
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [x // g for x in ints]

    # arithmetic
    def __add__(self, other) -> Poly:
        if isinstance(other, AlgebraicNumber):
            return NotImplemented
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other) -> Poly:
        if isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, AlgebraicNumber):
            return NotImplemented
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return Poly(quot), Poly(rem[: other.degree])

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __truediv__(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.is_constant():
                other = other.constant_term()
            else:
                return self.exact_div(other)
        return self * (1 / _frac(other))

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # evaluation
    def __call__(self, x):
        """Horner evaluation at a rational, a Poly or an AlgebraicNumber."""
        if isinstance(x, int):
            x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, Poly) and not isinstance(acc, Poly):
            acc = Poly.const(acc)
        if isinstance(x, AlgebraicNumber) and not isinstance(acc, AlgebraicNumber):
            acc = AlgebraicNumber(x.modulus, Poly.const(acc))
        return acc

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, a: Scalar) -> Poly:
        """p(T + a)."""
        return self(Poly([a, 1]))

    # display
    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"


def format_poly(p: Poly, var: str = "T") -> str:
    """Expanded form, highest degree first: '(1/3)*T^3 - 2*T^2 + (8/3)*T'."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_linear_factors(lead: Fraction, roots: Sequence[Fraction], cofactor: Poly | None = None,
                          var: str = "T") -> str:
    """Factored form such as '(1/3)*(T - 4)*(T - 2)*T'; repeated adjacent roots become powers."""
    factors = []
    for r, group in itertools.groupby(Fraction(x) for x in roots):
        k = len(list(group))
        if r == 0:
            f = var
        elif r > 0:
            f = f"({var} - {_fmt_coeff(r)})"
        else:
            f = f"({var} + {_fmt_coeff(-r)})"
        factors.append(f if k == 1 else f"{f}^{k}")
    if cofactor is not None and not cofactor.is_constant():
        factors.append(f"({format_poly(cofactor, var)})")
    if lead != 1 or not factors:
        factors.insert(0, _fmt_coeff(lead) if lead >= 0 else f"(-{_fmt_coeff(-lead)})")
    return "*".join(factors)


T = Poly([0, 1])


class AlgebraicNumber:
    """An element of Q[T]/(modulus), with the modulus normalised monic."""

    __slots__ = ("modulus", "rep")

    def __init__(self, modulus: Poly, rep: Poly | Scalar = 0):
        modulus = Poly.coerce(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must have degree at least 1")
        self.modulus = modulus.monic()
        self.rep = Poly.coerce(rep) % self.modulus

    @classmethod
    def rational(cls, c: Scalar) -> AlgebraicNumber:
        """A rational number as the class of c in Q[T]/(T - c)."""
        c = _frac(c)
        return cls(Poly([-c, 1]), c)

    @classmethod
    def root_of(cls, modulus: Poly) -> AlgebraicNumber:
        """The class of T itself, i.e. a formal root of `modulus`."""
        return cls(modulus, T)

    def _coerce(self, other) -> AlgebraicNumber:
        if isinstance(other, AlgebraicNumber):
            if other.modulus != self.modulus:
                raise ValueError("algebraic numbers live in different quotient rings")
            return other
        return AlgebraicNumber(self.modulus, Poly.coerce(other))

    def __add__(self, other) -> AlgebraicNumber:
        return AlgebraicNumber(self.modulus, self.rep + self._coerce(other).rep)

    __radd__ = __add__

    def __neg__(self) -> AlgebraicNumber:
        return AlgebraicNumber(self.modulus, -self.rep)

    def __sub__(self, other) -> AlgebraicNumber:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> AlgebraicNumber:
        return self._coerce(other) - self

    def __mul__(self, other) -> AlgebraicNumber:
        return AlgebraicNumber(self.modulus, self.rep * self._coerce(other).rep)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> AlgebraicNumber:
        out = AlgebraicNumber(self.modulus, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraicNumber):
            return self.modulus == other.modulus and self.rep == other.rep
        if isinstance(other, (int, Fraction, Poly)):
            return self.rep == Poly.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus, self.rep))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.rep.constant_term()

    def is_rational_integer(self) -> bool:
        return algnum_is_rational_integer(self)

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.rep} mod {self.modulus})"

    def __str__(self) -> str:
        return format_poly(self.rep)


# ---------------------------------------------------------------- operations


def content_polynomial(lam: Partition) -> Poly:
    """prod over cells (i, j) of (T + j - i)."""
    lam = as_partition(lam)
    return Poly.from_roots([i - j for i, j in cells(lam)])


def q_polynomial_roots(lam: Partition) -> list[int]:
    """The roots |lam| + lam_a - a, a = 1..|lam|, with lam_a = 0 past the last part."""
    lam = as_partition(lam)
    n = size(lam)
    return [n + (lam[a - 1] if a <= len(lam) else 0) - a for a in range(1, n + 1)]


def q_polynomial_lead(lam: Partition) -> Fraction:
    lam = as_partition(lam)
    return Fraction(hook_dimension(lam), math.factorial(size(lam)))


def q_polynomial(lam: Partition) -> Poly:
    """Polynomial whose value at t is the Euler characteristic of the simple object [lam]_t."""
    return Poly.from_roots(q_polynomial_roots(lam), q_polynomial_lead(lam))


def _is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def is_integer_valued(p: Poly) -> bool:
    """True iff p(Z) is contained in Z.

    A polynomial of degree d is integer valued exactly when it takes integer
    values at d + 1 consecutive integers; we use 0, 1, ..., d.
    """
    p = Poly.coerce(p)
    return all(_is_integer(p(k)) for k in range(max(p.degree, 0) + 1))


def stirling2(n: int, k: int) -> int:
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def binomial_basis_coefficients(p: Poly) -> list[Fraction]:
    """Coefficients b_k with p(T) = sum_k b_k * binomial(T, k).

    Uses T^j = sum_k S(j, k) k! binomial(T, k) with Stirling numbers of the second kind.
    """
    p = Poly.coerce(p)
    out = [Fraction(0)] * max(len(p.coeffs), 1)
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        for k in range(j + 1):
            out[k] += c * stirling2(j, k) * math.factorial(k)
    return out


def is_integer_valued_binomial(p: Poly) -> bool:
    """Integer-valuedness via integrality of the binomial-basis coefficients."""
    return all(_is_integer(b) for b in binomial_basis_coefficients(p))


def reduce_mod(p: Poly, m: Poly) -> AlgebraicNumber:
    """The class of p in Q[T]/(m)."""
    m = Poly.coerce(m)
    if m.degree < 1:
        raise ValueError("cannot reduce modulo a constant")
    return AlgebraicNumber(m, Poly.coerce(p))


def algnum_is_rational_integer(x: AlgebraicNumber) -> bool:
    return x.rep.degree <= 0 and _is_integer(x.rep.constant_term())


def evaluate(p: Poly, x):
    """p(x) for x an int, Fraction, Poly or AlgebraicNumber."""
    return p(x)


# ---------------------------------------------------------------- rational roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    a, b = x.numerator, x.denominator
    return math.isqrt(a) ** 2 == a and math.isqrt(b) ** 2 == b


class RootFactorization(NamedTuple):
    """p = cofactor * prod (T - r)^k over the listed (r, k)."""

    roots: list[tuple[Fraction, int]]
    cofactor: Poly

    @property
    def cofactor_irreducible(self) -> bool | None:
        """Irreducibility of the cofactor over Q, when it can be certified.

        Degrees 0 and 1 are settled trivially, degree 2 by the discriminant (the
        cofactor has no rational roots, so a square discriminant cannot occur),
        degree 3 likewise since a reducible cubic has a rational root.  Higher
        degrees return None.
        """
        d = self.cofactor.degree
        if d <= 0:
            return False
        if d in (1, 3):
            return True
        if d == 2:
            c, b, a = self.cofactor.coeffs
            return not is_square(b * b - 4 * a * c)
        return None

    def expand(self) -> Poly:
        p = self.cofactor
        for r, k in self.roots:
            p = p * Poly([-r, 1]) ** k
        return p


def factor_rational_roots(p: Poly) -> RootFactorization:
    """Split off every rational root of p with its multiplicity.

    Uses integer polynomial factorisation from python-flint when available and
    the rational root theorem otherwise.
    """
    p = Poly.coerce(p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no factorisation")
    try:
        import flint
    except ImportError:  # pragma: no cover - exercised only without python-flint
        return _factor_rational_roots_naive(p)
    if p.degree < 1:
        return RootFactorization([], p)
    scale, ints = p.primitive_integer()
    content, factors = flint.fmpz_poly(ints).factor()
    roots = []
    rest = Poly.const(Fraction(int(content)) * scale)
    for f, e in factors:
        c = [int(x) for x in f.coeffs()]
        if len(c) == 2:
            roots.append((Fraction(-c[0], c[1]), int(e)))
            rest = rest * c[1] ** int(e)
        else:
            rest = rest * Poly(c) ** int(e)
    roots.sort()
    return RootFactorization(roots, rest)


def _factor_rational_roots_naive(p: Poly) -> RootFactorization:
    roots: list[tuple[Fraction, int]] = []
    rest = p
    k0 = 0
    while rest.degree >= 1 and rest.constant_term() == 0:
        rest = rest.exact_div(T)
        k0 += 1
    if k0:
        roots.append((Fraction(0), k0))
    if rest.degree >= 1:
        _, ints = rest.primitive_integer()
        candidates = sorted({Fraction(s * a, b) for a in _divisors(ints[0]) for b in _divisors(ints[-1])
                             for s in (1, -1)})
        for r in candidates:
            lin = Poly([-r, 1])
            k = 0
            while rest.degree >= 1:
                q, rem = divmod(rest, lin)
                if not rem.is_zero():
                    break
                rest, k = q, k + 1
            if k:
                roots.append((r, k))
    roots.sort()
    return RootFactorization(roots, rest)


# ---------------------------------------------------------------- linear algebra


def det(matrix: Sequence[Sequence]) -> Fraction | Poly:
    """Exact determinant by fraction-free Bareiss elimination.

    Entries may be ints, Fractions or Polys; divisions are exact by construction.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    is_poly = any(isinstance(x, Poly) for row in a for x in row)
    zero = Poly() if is_poly else Fraction(0)
    one = Poly.const(1) if is_poly else Fraction(1)
    a = [[(Poly.coerce(x) if is_poly else _frac(x)) for x in row] for row in a]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if a[i][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if is_poly else num / prev
            a[i][k] = zero
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    a = [[_frac(x) for x in row] for row in matrix]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> Poly:
    """The unique polynomial of degree < len(points) through the given points (Newton form)."""
    xs = [_frac(x) for x, _ in points]
    table = [_frac(y) for _, y in points]
    n = len(xs)
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coef.append(table[0])
    p = Poly.const(coef[-1])
    for k in range(n - 2, -1, -1):
        p = p * Poly([-xs[k], 1]) + coef[k]
    return p


def interpolate_consecutive(values: Sequence[int]) -> Poly:
    """Polynomial of degree < len(values) with p(k) = values[k] for k = 0, 1, ...

    Newton forward differences in the falling-factorial basis, kept in
    integers by scaling with d! until the final division.
    """
    diffs = []
    row = [int(v) for v in values]
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    d = len(diffs) - 1
    if d < 0:
        return Poly()
    scale = math.factorial(d)
    # p = sum_k diffs[k] * T(T-1)...(T-k+1) / k!, evaluated by nested Horner steps
    acc = [diffs[d] * (scale // math.factorial(d))]
    for k in range(d - 1, -1, -1):
        # acc <- acc * (T - k) + diffs[k] * scale / k!
        nxt = [0] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] += c
            nxt[i] -= k * c
        nxt[0] += diffs[k] * (scale // math.factorial(k))
        acc = nxt
    return Poly(Fraction(c, scale) for c in acc)
