"""Dense exact matrices: reduced row echelon form, kernels, Kronecker products.

Entries are scalars of an attached Field, stored row-major.  The composite
tensor index is row-major everywhere: the pair (i, j) on factors of dimensions
(da, db) maps to i*db + j.  This single convention is load-bearing for all
duality comparisons.
"""

from __future__ import annotations

from typing import NamedTuple

from .fields import Field, PrimeField


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(field, len(rows), ncols, flat)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        ent = [z] * (n * n)
        for i in range(n):
            ent[i * n + i] = o
        return cls(field, n, n, ent)

    @classmethod
    def from_int_rows(cls, field: Field, rows) -> "Matrix":
        return cls.from_rows(field, [[field.of(x) for x in r] for r in rows])

    def get(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def col(self, j: int):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and all(x == y for x, y in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols} [{body}])"

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for x in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [f.add(x, y) for x, y in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [f.sub(x, y) for x, y in zip(self.entries, other.entries)],
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, [f.mul(c, x) for x in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        out = []
        if isinstance(self.field, PrimeField):
            p = self.field.p
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum(x * y for x, y in zip(r, c)) % p for c in cols)
        else:
            zero = self.field.zero()
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum((x * y for x, y in zip(r, c)), zero) for c in cols)
        return Matrix(self.field, self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix @ column vector, returned as a list."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        if isinstance(self.field, PrimeField):
            p = self.field.p
            return [sum(x * y for x, y in zip(self.row(i), vec)) % p for i in range(self.rows)]
        zero = self.field.zero()
        return [sum((x * y for x, y in zip(self.row(i), vec)), zero) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product under the fixed composite-index convention."""
        f = self.field
        ra, ca, rb, cb = self.rows, self.cols, other.rows, other.cols
        out = [f.zero()] * (ra * rb * ca * cb)
        ncols = ca * cb
        for ia in range(ra):
            for ja in range(ca):
                a = self.get(ia, ja)
                if a == f.zero():
                    continue
                for ib in range(rb):
                    base = (ia * rb + ib) * ncols + ja * cb
                    brow = other.row(ib)
                    for jb in range(cb):
                        out[base + jb] = f.mul(a, brow[jb])
        return Matrix(f, ra * rb, ca * cb, out)

    def rank(self) -> int:
        return rref_kernel(self).rank

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


class RrefKernel(NamedTuple):
    rref: Matrix
    pivots: tuple
    rank: int
    kernel: Matrix  # columns span the null space, free-variable normal form


def _row_reduce(rows, field: Field):
    """In-place-ish RREF of a list of row lists; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    zero = field.zero()
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if rows[rr][c] != zero:
                piv = rr
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one():
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for rr in range(nrows):
            if rr != r and rows[rr][c] != zero:
                factor = rows[rr][c]
                rows[rr] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref_kernel(m: Matrix) -> RrefKernel:
    """Unique RREF plus the canonical kernel basis of m."""
    f = m.field
    reduced, pivots = _row_reduce(m.row_lists(), f)
    rank = len(pivots)
    rref = Matrix.from_rows(f, reduced) if reduced else Matrix.zeros(f, 0, m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    z, o = f.zero(), f.one()
    cols = []
    for fc in free:
        vec = [z] * m.cols
        vec[fc] = o
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(reduced[i][fc])
        cols.append(vec)
    kernel = Matrix(f, m.cols, len(cols), [cols[j][i] for i in range(m.cols) for j in range(len(cols))])
    return RrefKernel(rref, tuple(pivots), rank, kernel)


def kron(a: Matrix, b: Matrix) -> Matrix:
    return a.kron(b)


def echelon_rows(field: Field, rows):
    """Canonical nonzero RREF rows spanning the same space; [] for empty input."""
    rows = [list(r) for r in rows if any(x != field.zero() for x in r)]
    if not rows:
        return []
    reduced, pivots = _row_reduce(rows, field)
    return [tuple(reduced[i]) for i in range(len(pivots))]


def solve_linear(a: Matrix, b):
    """One solution x of a @ x = b, or None if inconsistent."""
    f = a.field
    aug = [list(a.row(i)) + [b[i]] for i in range(a.rows)]
    reduced, pivots = _row_reduce(aug, f)
    if any(p == a.cols for p in pivots):
        return None
    x = [f.zero()] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i][a.cols]
    return x


def in_row_span(rows, vec, field: Field) -> bool:
    """Whether vec lies in the span of echelon rows (rows must be RREF)."""
    v = list(vec)
    zero = field.zero()
    for row in rows:
        pc = next((j for j, x in enumerate(row) if x != zero), None)
        if pc is None:
            continue
        if v[pc] != zero:
            c = v[pc]
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return all(x == zero for x in v)


def coordinates_in_row_span(rows, vec, field: Field):
    """Coordinates of vec in the given RREF rows, or None if outside the span."""
    v = list(vec)
    zero = field.zero()
    coords = []
    for row in rows:
        pc = next((j for j, x in enumerate(row) if x != zero), None)
        if pc is None:
            coords.append(zero)
            continue
        c = v[pc]
        coords.append(c)
        if c != zero:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    if any(x != zero for x in v):
        return None
    return coords
