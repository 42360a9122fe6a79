"""Univariate polynomials with exact coefficients, and factorization.

Coefficients are stored lowest degree first with a nonzero leading
coefficient (the zero polynomial is the empty list).  Factorization over
GF(p) is complete (squarefree split + Berlekamp); over Q only detection of a
full split into linear factors is attempted, and the unfactored remainder is
returned with ``complete=False`` so callers can refuse to guess.
"""

from __future__ import annotations

from typing import NamedTuple

from ..errors import ZeroPolynomialError
from .fields import Field, PrimeField, Rationals


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field: Field, ints) -> "Poly":
        return cls(field, [field.of(c) for c in ints])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [field.zero(), field.one()])

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == self.field.one():
            return self
        inv = self.field.inv(lc)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(self.field.of(-1))

    def scale(self, c) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, [])
        out = [f.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def divmod(self, other: "Poly"):
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(f, []), self
        quo = [f.zero()] * (dq + 1)
        inv_lc = f.inv(other.leading())
        for k in range(dq, -1, -1):
            top = rem[k + other.degree()]
            if top == f.zero():
                continue
            c = f.mul(top, inv_lc)
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b))
        return Poly(f, quo), Poly(f, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(f.of(i), c) for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        f = self.field
        acc = f.zero()
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def pow_mod(self, n: int, modulus: "Poly") -> "Poly":
        f = self.field
        acc = Poly(f, [f.one()]) % modulus
        base = self % modulus
        while n:
            if n & 1:
                acc = (acc * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return acc

    def sort_key(self):
        f = self.field
        return (self.degree(), tuple(f.sort_key(c) for c in self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero():
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"


class Factorization(NamedTuple):
    unit: object  # leading scalar extracted from f
    factors: tuple  # ((monic Poly, multiplicity), ...) in canonical order
    complete: bool  # False only over Q when a degree>=2 remainder is unfactored

    def product(self, field: Field) -> Poly:
        acc = Poly.constant(field, self.unit)
        for g, m in self.factors:
            for _ in range(m):
                acc = acc * g
        return acc


def _squarefree_decomposition_gf(f: Poly, p: int):
    """Return {squarefree monic factor: multiplicity} over GF(p)."""
    out = {}

    def accumulate(g: Poly, mult: int):
        if g.degree() >= 1:
            out[g] = out.get(g, 0) + mult

    def recurse(g: Poly, mult: int):
        g = g.monic()
        if g.degree() < 1:
            return
        dg = g.derivative()
        if dg.is_zero():
            # g = h(t^p) = h(t)^p since coefficients lie in the prime field
            root = Poly(g.field, [g.coeffs[i] for i in range(0, len(g.coeffs), p)])
            recurse(root, mult * p)
            return
        c = g.gcd(dg)
        w = (g // c).monic()
        i = 1
        while w.degree() >= 1:
            y = w.gcd(c)
            accumulate((w // y).monic(), mult * i)
            w = y
            c = (c // y).monic()
            i += 1
        # what remains of c is a p-th power; the derivative branch unwinds it
        if c.degree() >= 1:
            recurse(c, mult)

    recurse(f, 1)
    return out


def _berlekamp_split(f: Poly, p: int):
    """Split a squarefree monic f over GF(p) into monic irreducible factors."""
    field = f.field
    n = f.degree()
    if n <= 1:
        return [f]
    # Q matrix: row i = coefficients of t^(i*p) mod f
    t = Poly.x(field)
    tp = t.pow_mod(p, f)
    rows = []
    cur = Poly.constant(field, field.one())
    for i in range(n):
        coeffs = list(cur.coeffs) + [field.zero()] * (n - len(cur.coeffs))
        rows.append(coeffs)
        cur = (cur * tp) % f
    # kernel of (Q - I)
    mat = [
        [field.sub(rows[i][j], field.one() if i == j else field.zero()) for j in range(n)]
        for i in range(n)
    ]
    kernel = _kernel_rows(mat, field)
    if len(kernel) == 1:
        return [f]
    factors = [f]
    for vec in kernel[1:]:
        v = Poly(field, vec)
        if v.degree() < 1:
            continue
        next_factors = []
        for g in factors:
            if g.degree() <= 1:
                next_factors.append(g)
                continue
            pieces = []
            rest = g
            for c in range(p):
                if rest.degree() < 1:
                    break
                d = rest.gcd(v - Poly.constant(field, field.of(c)))
                if 1 <= d.degree() < rest.degree():
                    pieces.append(d)
                    rest = (rest // d).monic()
                elif d.degree() == rest.degree():
                    break
            pieces.append(rest)
            next_factors.extend(q for q in pieces if q.degree() >= 1)
        factors = next_factors
        if len(factors) == len(kernel):
            break
    return factors


def _kernel_rows(mat, field: Field):
    """Kernel basis (list of coefficient lists) of the matrix, rows as given.

    Works on the transpose convention v @ mat = 0?  No: returns v with
    mat^T v = 0 in the Berlekamp convention, i.e. solutions of
    sum_i v_i * row_i = 0 read column-wise.
    """
    n = len(mat)
    cols = len(mat[0]) if mat else 0
    # solve v * M = 0 where rows of M are mat's rows: transpose then kernel
    m = [[mat[i][j] for i in range(n)] for j in range(cols)]
    rowc = len(m)
    pivots = []
    r = 0
    work = [row[:] for row in m]
    for c in range(n):
        piv = None
        for rr in range(r, rowc):
            if work[rr][c] != field.zero():
                piv = rr
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for rr in range(rowc):
            if rr != r and work[rr][c] != field.zero():
                factor = work[rr][c]
                work[rr] = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(work[rr], work[r])
                ]
        pivots.append(c)
        r += 1
        if r == rowc:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [field.zero()] * n
        vec[fcol] = field.one()
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(work[i][fcol])
        basis.append(vec)
    return basis


def _rational_linear_split(f: Poly):
    """Extract all rational roots with multiplicity; return (factors, remainder)."""
    field = f.field
    factors = {}
    rest = f.monic()
    # candidate roots of the monic polynomial: divisors of the constant term
    # over a common denominator; recompute candidates after each extraction.
    while rest.degree() >= 1:
        root = _find_rational_root(rest)
        if root is None:
            break
        lin = Poly(field, [field.neg(root), field.one()])
        factors[lin] = factors.get(lin, 0) + 1
        rest = (rest // lin).monic()
    return factors, rest


def _find_rational_root(f: Poly):
    from fractions import Fraction

    # clear denominators to integer coefficients
    dens = [c.denominator for c in f.coeffs]
    lcm = 1
    for d in dens:
        g = _gcd_int(lcm, d)
        lcm = lcm // g * d
    ints = [int(c * lcm) for c in f.coeffs]
    a0 = ints[0]
    an = ints[-1]
    if a0 == 0:
        return Fraction(0)
    cands = []
    for num in _divisors_int(abs(a0)):
        for den in _divisors_int(abs(an)):
            cands.append(Fraction(num, den))
            cands.append(Fraction(-num, den))
    cands = sorted(set(cands))
    for r in cands:
        if f.evaluate(r) == 0:
            return r
    return None


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors_int(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def factor_over_field(f: Poly, field: Field | None = None) -> Factorization:
    """Factor f into monic factors with multiplicities and a unit.

    Over GF(p) the factorization is complete and every factor irreducible.
    Over Q only a full split into linear factors is certified; otherwise the
    linear part is extracted and the remainder returned as a single factor
    with ``complete=False``.
    """
    if field is None:
        field = f.field
    if f.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    unit = f.leading()
    monic = f.monic()
    if monic.degree() == 0:
        return Factorization(unit, (), True)
    if isinstance(field, PrimeField):
        p = field.p
        sqfree = _squarefree_decomposition_gf(monic, p)
        found = {}
        for g, mult in sqfree.items():
            for irr in _berlekamp_split(g, p):
                irr = irr.monic()
                found[irr] = found.get(irr, 0) + mult
        ordered = tuple(sorted(found.items(), key=lambda kv: kv[0].sort_key()))
        return Factorization(unit, ordered, True)
    assert isinstance(field, Rationals)
    linear, rest = _rational_linear_split(monic)
    items = sorted(linear.items(), key=lambda kv: kv[0].sort_key())
    if rest.degree() <= 0:
        return Factorization(unit, tuple(items), True)
    return Factorization(unit, tuple(items + [(rest, 1)]), False)
