"""Finite-dimensional associative unital algebras by structure constants.

An algebra stores its multiplication sparsely: ``mul[i][j]`` is a tuple of
(r, coeff) pairs meaning b_i b_j = sum coeff * b_r.  All operations are pure;
subspaces are kept in canonical reduced echelon form so equal subspaces have
equal representations.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    BadParamsError,
    CharacteristicTooSmallError,
    ImproperIdealError,
    InvalidInputError,
    NotAnIdealError,
    NotSplitError,
)
from .kernel import (
    Matrix,
    PrimeField,
    Poly,
    Rationals,
    coordinates_in_row_span,
    echelon_rows,
    factor_over_field,
    in_row_span,
    rref_kernel,
    solve_linear,
)
from .kernel.fields import Field


class FinDimAlgebra:
    __slots__ = ("field", "dim", "labels", "mul", "unit")

    def __init__(self, field: Field, labels, mul, unit):
        """mul may be given densely (mul[i][j][r] scalar) or sparsely
        (mul[i][j] an iterable of (r, coeff) pairs)."""
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.mul = _normalize_mul(field, self.dim, mul)
        unit = tuple(unit)
        if len(unit) != self.dim:
            raise BadParamsError("unit vector has wrong length")
        self.unit = unit

    def product_pairs(self, i: int, j: int):
        return self.mul[i][j]

    def mul_entry(self, i: int, j: int, r: int):
        for rr, c in self.mul[i][j]:
            if rr == r:
                return c
        return self.field.zero()

    def basis_product(self, i: int, j: int):
        out = [self.field.zero()] * self.dim
        for r, c in self.mul[i][j]:
            out[r] = c
        return out

    def multiply(self, u, v):
        """Product of two dense coordinate vectors."""
        f = self.field
        zero = f.zero()
        out = [zero] * self.dim
        for i, ui in enumerate(u):
            if ui == zero:
                continue
            row = self.mul[i]
            for j, vj in enumerate(v):
                if vj == zero:
                    continue
                c = f.mul(ui, vj)
                for r, coeff in row[j]:
                    out[r] = f.add(out[r], f.mul(c, coeff))
        return out

    def left_mult_matrix(self, vec) -> Matrix:
        cols = [self.multiply(vec, _basis_vec(self.field, self.dim, j)) for j in range(self.dim)]
        return Matrix(self.field, self.dim, self.dim,
                      [cols[j][i] for i in range(self.dim) for j in range(self.dim)])

    def right_mult_matrix(self, vec) -> Matrix:
        cols = [self.multiply(_basis_vec(self.field, self.dim, j), vec) for j in range(self.dim)]
        return Matrix(self.field, self.dim, self.dim,
                      [cols[j][i] for i in range(self.dim) for j in range(self.dim)])

    def power(self, vec, n: int):
        acc = list(self.unit)
        base = list(vec)
        while n:
            if n & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            n >>= 1
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, FinDimAlgebra)
            and self.field == other.field
            and self.labels == other.labels
            and self.mul == other.mul
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.mul, self.unit))

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, field={self.field!r})"


def _normalize_mul(field: Field, dim: int, mul):
    zero = field.zero()
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            cell = mul[i][j]
            pairs = []
            if cell and isinstance(cell[0], tuple):
                for r, c in cell:
                    if c != zero:
                        pairs.append((r, c))
            else:
                for r, c in enumerate(cell):
                    if c != zero:
                        pairs.append((r, c))
            pairs.sort(key=lambda rc: rc[0])
            row.append(tuple(pairs))
        out.append(tuple(row))
    return tuple(out)


def _basis_vec(field: Field, dim: int, i: int):
    v = [field.zero()] * dim
    v[i] = field.one()
    return v


class Subspace:
    """Subspace of an algebra's coordinate space, rows in canonical RREF."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: FinDimAlgebra, rows):
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in echelon_rows(ambient.field, rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return in_row_span(self.rows, vec, self.ambient.field)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.rows == other.rows and self.ambient is other.ambient

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient.dim})"


class AlgebraHom:
    """Linear map between algebras; columns of `matrix` are images of basis."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FinDimAlgebra, target: FinDimAlgebra, matrix: Matrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise BadParamsError("hom matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec):
        return self.matrix.apply(list(vec))

    def is_valid(self) -> bool:
        src, tgt = self.source, self.target
        if self.apply(src.unit) != list(tgt.unit):
            return False
        images = [self.apply(_basis_vec(src.field, src.dim, i)) for i in range(src.dim)]
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = self.apply(src.basis_product(i, j))
                rhs = tgt.multiply(images[i], images[j])
                if lhs != rhs:
                    return False
        return True

    def compose(self, inner: "AlgebraHom") -> "AlgebraHom":
        """self o inner."""
        return AlgebraHom(inner.source, self.target, self.matrix @ inner.matrix)

    def __repr__(self):
        return f"AlgebraHom({self.source.dim} -> {self.target.dim})"


class Character:
    """One-dimensional representation: a multiplicative unital functional."""

    __slots__ = ("algebra", "values")

    def __init__(self, algebra: FinDimAlgebra, values):
        self.algebra = algebra
        self.values = tuple(values)

    def evaluate(self, vec):
        f = self.algebra.field
        acc = f.zero()
        for x, v in zip(self.values, vec):
            acc = f.add(acc, f.mul(x, v))
        return acc

    def is_valid(self) -> bool:
        a = self.algebra
        if self.evaluate(a.unit) != a.field.one():
            return False
        for i in range(a.dim):
            for j in range(a.dim):
                prod = self.evaluate(a.basis_product(i, j))
                if prod != a.field.mul(self.values[i], self.values[j]):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __repr__(self):
        return f"Character({self.values})"


class SemisimpleProfile(NamedTuple):
    radical_dim: int
    factors: tuple  # ((factor_dim, center_dim), ...) sorted ascending


class ValidationReport(NamedTuple):
    associative: bool
    unital: bool
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return self.associative and self.unital


# ---------------------------------------------------------------------------
# named constructors


def matrix_algebra(field: Field, d: int) -> FinDimAlgebra:
    """M_d with basis E_ij ordered row-major."""
    if d < 1:
        raise BadParamsError("d must be >= 1")
    n = d * d
    zero, one = field.zero(), field.one()
    mul = [[() for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    if j == k:
                        mul[i * d + j][k * d + l] = ((i * d + l, one),)
    unit = [zero] * n
    for i in range(d):
        unit[i * d + i] = one
    labels = [f"E{i + 1}{j + 1}" for i in range(d) for j in range(d)]
    return FinDimAlgebra(field, labels, mul, unit)


def triangular_algebra(field: Field, n: int) -> FinDimAlgebra:
    """Upper-triangular n x n matrices, basis E_ij (i <= j) in lex order."""
    if n < 1:
        raise BadParamsError("n must be >= 1")
    idx = {}
    labels = []
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(labels)
            labels.append(f"E{i + 1}{j + 1}")
    dim = len(labels)
    one = field.one()
    mul = [[() for _ in range(dim)] for _ in range(dim)]
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                mul[a][b] = ((idx[(i, l)], one),)
    unit = [field.zero()] * dim
    for i in range(n):
        unit[idx[(i, i)]] = one
    return FinDimAlgebra(field, labels, mul, unit)


def monogenic_algebra(field: Field, modulus: Poly, var: str = "t") -> FinDimAlgebra:
    """k[t]/(f) on the basis 1, t, ..., t^(deg f - 1)."""
    if modulus.degree() < 1:
        raise BadParamsError("modulus must have degree >= 1")
    d = modulus.degree()
    monic = modulus.monic()
    # t^k mod f for k up to 2d-2
    powers = []
    cur = Poly.constant(field, field.one())
    t = Poly.x(field)
    for _ in range(2 * d - 1):
        powers.append(list(cur.coeffs) + [field.zero()] * (d - len(cur.coeffs)))
        cur = (cur * t) % monic
    mul = [[powers[i + j] for j in range(d)] for i in range(d)]
    labels = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, d)]
    unit = _basis_vec(field, d, 0)
    return FinDimAlgebra(field, labels, mul, unit)


def truncated_polynomial_algebra(field: Field, n: int, var: str = "t") -> FinDimAlgebra:
    """k[t]/(t^n)."""
    coeffs = [field.zero()] * n + [field.one()]
    return monogenic_algebra(field, Poly(field, coeffs), var)


def cyclic_group_algebra(field: Field, m: int, var: str = "g") -> FinDimAlgebra:
    """k[Z/m] presented as k[g]/(g^m - 1)."""
    if m < 1:
        raise BadParamsError("group order must be >= 1")
    coeffs = [field.neg(field.one())] + [field.zero()] * (m - 1) + [field.one()]
    return monogenic_algebra(field, Poly(field, coeffs), var)


def diagonal_algebra(field: Field, m: int) -> FinDimAlgebra:
    """k^m with the coordinatewise product."""
    one = field.one()
    mul = [[((i, one),) if i == j else () for j in range(m)] for i in range(m)]
    return FinDimAlgebra(field, [f"e{i + 1}" for i in range(m)], mul, [one] * m)


# ---------------------------------------------------------------------------
# validation


def validate_algebra(a: FinDimAlgebra) -> ValidationReport:
    f = a.field
    witnesses = []
    associative = True
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.mul[i][j]
            for k in range(a.dim):
                lhs = {}
                for s, c in ij:
                    for t, c2 in a.mul[s][k]:
                        lhs[t] = f.add(lhs.get(t, f.zero()), f.mul(c, c2))
                rhs = {}
                for s, c in a.mul[j][k]:
                    for t, c2 in a.mul[i][s]:
                        rhs[t] = f.add(rhs.get(t, f.zero()), f.mul(c, c2))
                if not _same_sparse(f, lhs, rhs):
                    associative = False
                    bad_t = next(
                        t for t in set(lhs) | set(rhs)
                        if lhs.get(t, f.zero()) != rhs.get(t, f.zero())
                    )
                    witnesses.append(("associativity", (i, j, k, bad_t)))
                    break
            if not associative:
                break
        if not associative:
            break
    unital = True
    for j in range(a.dim):
        left = a.multiply(list(a.unit), _basis_vec(f, a.dim, j))
        right = a.multiply(_basis_vec(f, a.dim, j), list(a.unit))
        target = _basis_vec(f, a.dim, j)
        if left != target or right != target:
            unital = False
            witnesses.append(("unit", (j,)))
            break
    return ValidationReport(associative, unital, tuple(witnesses))


def _same_sparse(f, lhs: dict, rhs: dict) -> bool:
    zero = f.zero()
    for t in set(lhs) | set(rhs):
        if lhs.get(t, zero) != rhs.get(t, zero):
            return False
    return True


# ---------------------------------------------------------------------------
# ideals and quotients


def ideal_closure(a: FinDimAlgebra, generators) -> Subspace:
    """Two-sided ideal generated by the given coordinate vectors (saturation)."""
    f = a.field
    rows = echelon_rows(f, [list(g) for g in generators])
    while True:
        new_rows = [list(r) for r in rows]
        for v in rows:
            for i in range(a.dim):
                new_rows.append(a.multiply(_basis_vec(f, a.dim, i), list(v)))
                new_rows.append(a.multiply(list(v), _basis_vec(f, a.dim, i)))
        next_rows = echelon_rows(f, new_rows)
        if len(next_rows) == len(rows):
            return Subspace(a, rows)
        rows = next_rows


def is_ideal(a: FinDimAlgebra, space: Subspace) -> bool:
    f = a.field
    for v in space.rows:
        for i in range(a.dim):
            if not space.contains(a.multiply(_basis_vec(f, a.dim, i), list(v))):
                return False
            if not space.contains(a.multiply(list(v), _basis_vec(f, a.dim, i))):
                return False
    return True


def _reduce_mod_rows(f: Field, rows, vec):
    v = list(vec)
    zero = f.zero()
    for row in rows:
        pc = next(j for j, x in enumerate(row) if x != zero)
        c = v[pc]
        if c != zero:
            v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
    return v


def quotient_algebra(a: FinDimAlgebra, ideal: Subspace):
    """Quotient by a proper two-sided ideal, with the projection hom."""
    f = a.field
    if not is_ideal(a, ideal):
        raise NotAnIdealError("subspace is not closure-stable")
    if ideal.contains(a.unit):
        raise ImproperIdealError("ideal contains the unit")
    zero = f.zero()
    pivots = [next(j for j, x in enumerate(row) if x != zero) for row in ideal.rows]
    non_pivots = [j for j in range(a.dim) if j not in pivots]

    def reduce_coords(vec):
        red = _reduce_mod_rows(f, ideal.rows, vec)
        return [red[j] for j in non_pivots]

    m = len(non_pivots)
    mul = [[None] * m for _ in range(m)]
    for x, j1 in enumerate(non_pivots):
        for y, j2 in enumerate(non_pivots):
            mul[x][y] = reduce_coords(a.basis_product(j1, j2))
    labels = [a.labels[j] for j in non_pivots]
    quot = FinDimAlgebra(f, labels, mul, reduce_coords(a.unit))
    cols = [reduce_coords(_basis_vec(f, a.dim, i)) for i in range(a.dim)]
    proj_matrix = Matrix(f, m, a.dim, [cols[i][r] for r in range(m) for i in range(a.dim)])
    return quot, AlgebraHom(a, quot, proj_matrix)


def subspace_product(a: FinDimAlgebra, u: Subspace, v: Subspace) -> Subspace:
    products = [a.multiply(list(x), list(y)) for x in u.rows for y in v.rows]
    return Subspace(a, products)


# ---------------------------------------------------------------------------
# radical and semisimple structure


def _check_radical_precondition(a: FinDimAlgebra):
    char = a.field.characteristic()
    if char != 0 and char <= a.dim:
        raise CharacteristicTooSmallError(
            f"radical needs char 0 or p > dim; got p = {char}, dim = {a.dim}"
        )


def _trace_vector(a: FinDimAlgebra):
    """tau[s] = trace of left multiplication by b_s."""
    f = a.field
    tau = []
    for s in range(a.dim):
        acc = f.zero()
        for r in range(a.dim):
            acc = f.add(acc, a.mul_entry(s, r, r))
        tau.append(acc)
    return tau


def _radical_trace_form(a: FinDimAlgebra) -> Subspace:
    """Iterated kernel of (x, y) -> trace(L_x L_y); valid when the simple
    constituents' multiplicities avoid the characteristic (callers gate)."""
    f = a.field
    tau = _trace_vector(a)
    basis = [list(r) for r in echelon_rows(f, [_basis_vec(f, a.dim, i) for i in range(a.dim)])]
    while True:
        k = len(basis)
        gram_rows = []
        for x in basis:
            row = []
            for y in basis:
                prod = a.multiply(x, y)
                row.append(_dot(f, prod, tau))
            gram_rows.append(row)
        gram = Matrix.from_rows(f, gram_rows) if k else Matrix.zeros(f, 0, 0)
        ker = rref_kernel(gram).kernel
        if ker.cols == k:
            return Subspace(a, basis)
        new_basis = []
        for c in range(ker.cols):
            coeffs = ker.col(c)
            vec = [f.zero()] * a.dim
            for coef, b in zip(coeffs, basis):
                if coef != f.zero():
                    vec = [f.add(x, f.mul(coef, y)) for x, y in zip(vec, b)]
            new_basis.append(vec)
        new_basis = [list(r) for r in echelon_rows(f, new_basis)]
        if len(new_basis) == len(basis):
            return Subspace(a, new_basis)
        basis = new_basis


def _dot(f: Field, u, v):
    acc = f.zero()
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, y))
    return acc


def radical(a: FinDimAlgebra) -> Subspace:
    """Jacobson radical via the trace bilinear form."""
    _check_radical_precondition(a)
    return _radical_trace_form(a)


def center(a: FinDimAlgebra) -> Subspace:
    """Subspace of elements commuting with every basis element."""
    f = a.field
    rows = []
    for j in range(a.dim):
        for r in range(a.dim):
            rows.append([f.sub(a.mul_entry(i, j, r), a.mul_entry(j, i, r)) for i in range(a.dim)])
    ker = rref_kernel(Matrix.from_rows(f, rows)).kernel
    return Subspace(a, [[ker.get(i, c) for i in range(a.dim)] for c in range(ker.cols)])


def _subalgebra_on_rows(a: FinDimAlgebra, rows, unit_vec):
    """Algebra structure on a multiplicatively closed subspace.

    Returns (algebra, embed) where embed maps subalgebra coordinates to
    ambient coordinates (columns = basis rows).
    """
    f = a.field
    rows = [list(r) for r in rows]
    k = len(rows)
    mul = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            prod = a.multiply(rows[i], rows[j])
            coords = coordinates_in_row_span(rows, prod, f)
            if coords is None:
                raise InvalidInputError("subspace not closed under multiplication")
            mul[i][j] = coords
    unit_coords = coordinates_in_row_span(rows, unit_vec, f)
    if unit_coords is None:
        raise InvalidInputError("unit not in subspace")
    sub = FinDimAlgebra(f, [f"s{i}" for i in range(k)], mul, unit_coords)
    embed = Matrix(f, a.dim, k, [rows[j][i] for i in range(a.dim) for j in range(k)])
    return sub, embed


def minimal_polynomial(a: FinDimAlgebra, vec) -> Poly:
    """Monic minimal polynomial of an element."""
    f = a.field
    powers = [list(a.unit)]
    cur = list(a.unit)
    for _ in range(a.dim + 1):
        cur = a.multiply(cur, list(vec))
        sol = _coords_in_span(f, powers, cur)
        if sol is not None:
            return Poly(f, [f.neg(c) for c in sol] + [f.one()])
        powers.append(cur)
    raise InvalidInputError("minimal polynomial search exceeded the dimension")


def _coords_in_span(f: Field, span_vectors, target):
    """Coordinates of target as a combination of span_vectors, else None."""
    n = len(target)
    k = len(span_vectors)
    mat = Matrix(f, n, k, [span_vectors[j][i] for i in range(n) for j in range(k)])
    return solve_linear(mat, list(target))


def _poly_xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, s, t) monic g with s*a + t*b = g."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.constant(f, f.one()), Poly(f, [])
    t0, t1 = Poly(f, []), Poly.constant(f, f.one())
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading()
    inv = f.inv(lc)
    scale = Poly.constant(f, inv)
    return r0.monic(), s0 * scale, t0 * scale


def _evaluate_poly_at(a: FinDimAlgebra, poly: Poly, vec):
    f = a.field
    acc = [f.zero()] * a.dim
    for c in reversed(poly.coeffs):
        acc = a.multiply(acc, list(vec))
        acc = [f.add(x, f.mul(c, u)) for x, u in zip(acc, a.unit)]
    return acc


def _orthogonal_idempotents_from_minpoly(a: FinDimAlgebra, vec, factors):
    """CRT idempotents for an element whose min poly is the squarefree
    product of the given irreducible factors."""
    f = a.field
    mu = Poly.constant(f, f.one())
    for g in factors:
        mu = mu * g
    idems = []
    for g in factors:
        cof = mu // g
        _, s, _ = _poly_xgcd(cof % g, g)
        h = (cof * s) % mu
        idems.append(_evaluate_poly_at(a, h, vec))
    return idems


def _corner_algebra(a: FinDimAlgebra, idem):
    """The unital algebra e*a*e = e*a for a central idempotent e."""
    f = a.field
    rows = echelon_rows(f, [a.multiply(list(idem), _basis_vec(f, a.dim, i)) for i in range(a.dim)])
    return _subalgebra_on_rows(a, rows, list(idem))


def _split_commutative_semisimple(a: FinDimAlgebra):
    """Primitive idempotents of a commutative semisimple algebra.

    Over GF(p) the Frobenius-fixed subalgebra is split (its elements satisfy
    z^p = z, so minimal polynomials split into distinct linear factors); over
    Q basis minimal polynomials must split linearly or NotSplitError is raised.
    """
    f = a.field
    if isinstance(f, PrimeField):
        frob_cols = []
        for i in range(a.dim):
            frob_cols.append(a.power(_basis_vec(f, a.dim, i), f.p))
        ident = Matrix.identity(f, a.dim)
        frob = Matrix(f, a.dim, a.dim,
                      [frob_cols[j][i] for i in range(a.dim) for j in range(a.dim)]) - ident
        ker = rref_kernel(frob).kernel
        rows = echelon_rows(f, [[ker.get(i, c) for i in range(a.dim)] for c in range(ker.cols)])
        fixed, embed = _subalgebra_on_rows(a, rows, list(a.unit))
        idems = _split_etale(fixed)
        return [embed.apply(e) for e in idems]
    return _split_etale(a)


def _split_etale(a: FinDimAlgebra):
    """Split a commutative algebra whose elements have squarefree minimal
    polynomials by factoring basis minimal polynomials; returns primitive
    idempotents as dense vectors."""
    f = a.field
    if a.dim == 1:
        return [list(a.unit)]
    for i in range(a.dim):
        vec = _basis_vec(f, a.dim, i)
        mu = minimal_polynomial(a, vec)
        fac = factor_over_field(mu)
        if not fac.complete:
            raise NotSplitError(f"minimal polynomial does not split: {mu!r}")
        if any(m > 1 for _, m in fac.factors):
            raise InvalidInputError("algebra is not semisimple (non-squarefree min poly)")
        if len(fac.factors) >= 2:
            idems = _orthogonal_idempotents_from_minpoly(a, vec, [g for g, _ in fac.factors])
            out = []
            for e in idems:
                corner, embed = _corner_algebra(a, e)
                out.extend(embed.apply(x) for x in _split_etale(corner))
            return out
    # every basis element has an irreducible minimal polynomial; the algebra
    # is a field exactly when some element generates it
    for i in range(a.dim):
        mu = minimal_polynomial(a, _basis_vec(f, a.dim, i))
        if mu.degree() == a.dim:
            return [list(a.unit)]
    if isinstance(f, Rationals):
        raise NotSplitError("cannot certify a splitting over Q")
    # Frobenius preprocessing makes this unreachable over GF(p)
    raise InvalidInputError("failed to split commutative semisimple algebra")


def one_dim_characters(a: FinDimAlgebra):
    """All algebra maps a -> k, in deterministic order."""
    _check_radical_precondition(a)
    f = a.field
    rad = _radical_trace_form(a)
    semi, proj1 = quotient_algebra(a, rad) if rad.dim else (a, _identity_hom(a))
    comms = []
    for i in range(semi.dim):
        for j in range(i + 1, semi.dim):
            prod_ij = semi.basis_product(i, j)
            prod_ji = semi.basis_product(j, i)
            comms.append([f.sub(x, y) for x, y in zip(prod_ij, prod_ji)])
    comm_ideal = ideal_closure(semi, comms)
    if comm_ideal.contains(semi.unit):
        return []
    if comm_ideal.dim:
        ab, proj2 = quotient_algebra(semi, comm_ideal)
    else:
        ab, proj2 = semi, _identity_hom(semi)
    idems = _split_commutative_semisimple(ab)
    chars = []
    for e in idems:
        le = ab.left_mult_matrix(e)
        if le.rank() != 1:
            continue
        pivot = next(k for k, x in enumerate(e) if x != f.zero())
        inv = f.inv(e[pivot])
        values = []
        for j in range(ab.dim):
            prod = ab.multiply(_basis_vec(f, ab.dim, j), e)
            values.append(f.mul(prod[pivot], inv))
        chars.append(values)
    composed = []
    for values in chars:
        row = Matrix(f, 1, ab.dim, values)
        full = row @ proj2.matrix @ proj1.matrix
        composed.append(Character(a, full.entries))
    composed.sort(key=lambda ch: tuple(f.sort_key(v) for v in ch.values))
    for ch in composed:
        if not ch.is_valid():
            raise InvalidInputError("internal error: produced an invalid character")
    return composed


def _identity_hom(a: FinDimAlgebra) -> AlgebraHom:
    return AlgebraHom(a, a, Matrix.identity(a.field, a.dim))


def semisimple_profile(a: FinDimAlgebra) -> SemisimpleProfile:
    """Radical dimension plus (dim, center-dim) of each simple factor."""
    _check_radical_precondition(a)
    rad = _radical_trace_form(a)
    semi = quotient_algebra(a, rad)[0] if rad.dim else a
    return SemisimpleProfile(rad.dim, _semisimple_factors(semi))


def _semisimple_factors(semi: FinDimAlgebra):
    f = semi.field
    z = center(semi)
    zalg, zembed = _subalgebra_on_rows(semi, [list(r) for r in z.rows], list(semi.unit))
    idems_z = _split_commutative_semisimple(zalg)
    factors = []
    for ez in idems_z:
        e = zembed.apply(ez)
        factor_dim = semi.left_mult_matrix(e).rank()
        center_dim = zalg.left_mult_matrix(ez).rank()
        factors.append((factor_dim, center_dim))
    factors.sort()
    return tuple(factors)
