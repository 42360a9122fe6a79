"""Finite-dimensional coalgebras, dualization, grouplikes, coradical machinery.

Comultiplication is stored sparsely: ``comul[r]`` is a tuple of (i, j, coeff)
triples meaning Delta(b_r) = sum coeff * b_i (x) b_j.  Dualization against
FinDimAlgebra transposes structure constants on the fixed dual basis, so the
round trip is the identity entrywise.
"""

from __future__ import annotations

from .algebra import (
    AlgebraHom,
    FinDimAlgebra,
    Subspace,
    _basis_vec,
    _radical_trace_form,
    _check_radical_precondition,
    one_dim_characters,
    validate_algebra,
)
from .errors import (
    BadParamsError,
    CyclicQuiverError,
    InvalidInputError,
    NotACoalgebraMapError,
    NotInjectiveError,
)
from .kernel import Matrix, PrimeField, echelon_rows, rref_kernel
from .kernel.fields import Field
from typing import NamedTuple


class FinDimCoalgebra:
    __slots__ = ("field", "dim", "labels", "comul", "counit")

    def __init__(self, field: Field, labels, comul, counit):
        """comul[r] is an iterable of (i, j, coeff) triples."""
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        zero = field.zero()
        norm = []
        for r in range(self.dim):
            triples = [(i, j, c) for (i, j, c) in comul[r] if c != zero]
            triples.sort(key=lambda t: (t[0], t[1]))
            norm.append(tuple(triples))
        self.comul = tuple(norm)
        counit = tuple(counit)
        if len(counit) != self.dim:
            raise BadParamsError("counit vector has wrong length")
        self.counit = counit

    def delta_of_vector(self, vec):
        """Delta(vec) as a dense vector on the tensor-square basis (i*dim + j)."""
        f = self.field
        zero = f.zero()
        out = [zero] * (self.dim * self.dim)
        for r, xr in enumerate(vec):
            if xr == zero:
                continue
            for i, j, c in self.comul[r]:
                idx = i * self.dim + j
                out[idx] = f.add(out[idx], f.mul(xr, c))
        return out

    def counit_of_vector(self, vec):
        f = self.field
        acc = f.zero()
        for e, x in zip(self.counit, vec):
            acc = f.add(acc, f.mul(e, x))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, FinDimCoalgebra)
            and self.field == other.field
            and self.labels == other.labels
            and self.comul == other.comul
            and self.counit == other.counit
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.comul, self.counit))

    def __repr__(self):
        return f"FinDimCoalgebra(dim={self.dim}, field={self.field!r})"


class CoalgebraHom:
    """Linear map between coalgebras; columns of `matrix` are basis images."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FinDimCoalgebra, target: FinDimCoalgebra, matrix: Matrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise BadParamsError("hom matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec):
        return self.matrix.apply(list(vec))

    def is_valid(self) -> bool:
        src, tgt = self.source, self.target
        f = src.field
        images = [self.apply(_basis_vec(f, src.dim, r)) for r in range(src.dim)]
        for r in range(src.dim):
            if tgt.counit_of_vector(images[r]) != src.counit[r]:
                return False
            lhs = tgt.delta_of_vector(images[r])
            rhs = [f.zero()] * (tgt.dim * tgt.dim)
            for i, j, c in src.comul[r]:
                for x, fx in enumerate(images[i]):
                    if fx == f.zero():
                        continue
                    for y, fy in enumerate(images[j]):
                        if fy == f.zero():
                            continue
                        idx = x * tgt.dim + y
                        rhs[idx] = f.add(rhs[idx], f.mul(c, f.mul(fx, fy)))
            if lhs != rhs:
                return False
        return True

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    def __repr__(self):
        return f"CoalgebraHom({self.source.dim} -> {self.target.dim})"


class Quiver:
    """Finite quiver given by a vertex count and (source, target) arrows."""

    __slots__ = ("vertices", "arrows")

    def __init__(self, vertices: int, arrows):
        self.vertices = vertices
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in self.arrows:
            if not (0 <= s < vertices and 0 <= t < vertices):
                raise BadParamsError("arrow endpoint out of range")

    def is_acyclic(self) -> bool:
        indeg = [0] * self.vertices
        for _, t in self.arrows:
            indeg[t] += 1
        queue = [v for v in range(self.vertices) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        return seen == self.vertices


class CoalgebraValidation(NamedTuple):
    coassociative: bool
    counital: bool
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return self.coassociative and self.counital


def validate_coalgebra(c: FinDimCoalgebra) -> CoalgebraValidation:
    f = c.field
    zero = f.zero()
    witnesses = []
    coassoc = True
    for r in range(c.dim):
        lhs = {}
        rhs = {}
        for i, j, cf in c.comul[r]:
            for x, y, cf2 in c.comul[i]:
                key = (x, y, j)
                lhs[key] = f.add(lhs.get(key, zero), f.mul(cf, cf2))
            for x, y, cf2 in c.comul[j]:
                key = (i, x, y)
                rhs[key] = f.add(rhs.get(key, zero), f.mul(cf, cf2))
        for key in set(lhs) | set(rhs):
            if lhs.get(key, zero) != rhs.get(key, zero):
                coassoc = False
                witnesses.append(("coassociativity", (r,) + key))
                break
        if not coassoc:
            break
    counital = True
    for r in range(c.dim):
        left = [zero] * c.dim
        right = [zero] * c.dim
        for i, j, cf in c.comul[r]:
            left[j] = f.add(left[j], f.mul(cf, c.counit[i]))
            right[i] = f.add(right[i], f.mul(cf, c.counit[j]))
        target = _basis_vec(f, c.dim, r)
        if left != target or right != target:
            counital = False
            witnesses.append(("counit", (r,)))
            break
    return CoalgebraValidation(coassoc, counital, tuple(witnesses))


# ---------------------------------------------------------------------------
# dualization


def dualize_algebra(a: FinDimAlgebra) -> FinDimCoalgebra:
    """Coalgebra on the dual basis: Delta(b^r) = sum c_ij^r b^i (x) b^j."""
    if not validate_algebra(a).ok:
        raise InvalidInputError("algebra fails validation")
    comul = [[] for _ in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            for r, c in a.mul[i][j]:
                comul[r].append((i, j, c))
    return FinDimCoalgebra(a.field, a.labels, comul, a.unit)


def dualize_coalgebra(c: FinDimCoalgebra) -> FinDimAlgebra:
    """Convolution algebra on the dual basis: c_ij^r = D_r^ij, unit = counit."""
    if not validate_coalgebra(c).ok:
        raise InvalidInputError("coalgebra fails validation")
    mul = [[[] for _ in range(c.dim)] for _ in range(c.dim)]
    for r in range(c.dim):
        for i, j, cf in c.comul[r]:
            mul[i][j].append((r, cf))
    return FinDimAlgebra(c.field, c.labels, mul, c.counit)


# ---------------------------------------------------------------------------
# grouplikes and coradical


def grouplikes(c: FinDimCoalgebra):
    """All nonzero x with Delta(x) = x (x) x, via characters of the dual algebra."""
    chars = one_dim_characters(dualize_coalgebra(c))
    return [ch.values for ch in chars]


def grouplikes_bruteforce(c: FinDimCoalgebra, max_dim: int = 4):
    """Exhaustive solution set of Delta(x) = x (x) x over a small prime field."""
    f = c.field
    if not isinstance(f, PrimeField):
        raise BadParamsError("brute-force enumeration needs a prime field")
    if c.dim > max_dim:
        raise BadParamsError(f"dimension {c.dim} too large for brute force")
    out = []
    p = f.p
    total = p ** c.dim
    for code in range(1, total):
        vec = []
        x = code
        for _ in range(c.dim):
            vec.append(x % p)
            x //= p
        delta = c.delta_of_vector(vec)
        tensor = [f.mul(a, b) for a in vec for b in vec]
        if delta == tensor:
            out.append(tuple(vec))
    out.sort(key=lambda v: tuple(f.sort_key(x) for x in v))
    return out


def coradical(c: FinDimCoalgebra) -> Subspace:
    """Largest cosemisimple subcoalgebra, realized inside c as the
    annihilator of the radical of the dual algebra."""
    dual = dualize_coalgebra(c)
    _check_radical_precondition(dual)
    rad = _radical_trace_form(dual)
    if rad.dim == 0:
        return Subspace(c, [_basis_vec(c.field, c.dim, i) for i in range(c.dim)])
    mat = Matrix.from_rows(c.field, [list(r) for r in rad.rows])
    ker = rref_kernel(mat).kernel
    return Subspace(c, [[ker.get(i, j) for i in range(c.dim)] for j in range(ker.cols)])


def coradical_filtration(c: FinDimCoalgebra):
    """C_0 <= C_1 <= ... terminating at c, via Delta-preimages."""
    f = c.field
    levels = [coradical(c)]
    c0_rows = levels[0].rows
    n2 = c.dim * c.dim
    while levels[-1].dim < c.dim:
        prev = levels[-1]
        wedge_rows = []
        for i in range(c.dim):
            ei = _basis_vec(f, c.dim, i)
            for v in prev.rows:
                wedge_rows.append(_tensor_vec(f, ei, list(v)))
        for g in c0_rows:
            for j in range(c.dim):
                wedge_rows.append(_tensor_vec(f, list(g), _basis_vec(f, c.dim, j)))
        wedge = echelon_rows(f, wedge_rows)
        residual_cols = []
        for r in range(c.dim):
            delta = c.delta_of_vector(_basis_vec(f, c.dim, r))
            residual_cols.append(_reduce_against(f, wedge, delta))
        mat = Matrix(f, n2, c.dim,
                     [residual_cols[r][k] for k in range(n2) for r in range(c.dim)])
        ker = rref_kernel(mat).kernel
        nxt = Subspace(c, [[ker.get(i, j) for i in range(c.dim)] for j in range(ker.cols)])
        if nxt.dim <= prev.dim:
            raise InvalidInputError("coradical filtration failed to grow")
        levels.append(nxt)
    return levels


def _tensor_vec(f: Field, u, v):
    return [f.mul(a, b) for a in u for b in v]


def _reduce_against(f: Field, rref_rows, vec):
    v = list(vec)
    zero = f.zero()
    for row in rref_rows:
        pc = next(j for j, x in enumerate(row) if x != zero)
        cval = v[pc]
        if cval != zero:
            v = [f.sub(x, f.mul(cval, y)) for x, y in zip(v, row)]
    return v


class CoradicalReport(NamedTuple):
    preserved: bool
    witness: tuple | None


def coradical_preserved(hom: AlgebraHom) -> CoradicalReport:
    """Whether the dualized map sends corad(target*) into corad(source*)."""
    src_dual = dualize_algebra(hom.source)
    tgt_dual = dualize_algebra(hom.target)
    corad_src = coradical(src_dual)
    corad_tgt = coradical(tgt_dual)
    transpose = hom.matrix.transpose()
    for v in corad_tgt.rows:
        image = transpose.apply(list(v))
        if not corad_src.contains(image):
            return CoradicalReport(False, tuple(image))
    return CoradicalReport(True, None)


# ---------------------------------------------------------------------------
# named constructors


def comatrix_coalgebra(field: Field, d: int) -> FinDimCoalgebra:
    """Dual of the d x d matrix algebra on the basis E^ij."""
    if d < 1:
        raise BadParamsError("d must be >= 1")
    n = d * d
    one = field.one()
    comul = [[] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            comul[i * d + j] = [(i * d + r, r * d + j, one) for r in range(d)]
    counit = [one if i == j else field.zero() for i in range(d) for j in range(d)]
    labels = [f"E{i + 1}{j + 1}" for i in range(d) for j in range(d)]
    return FinDimCoalgebra(field, labels, comul, counit)


def triangular_coalgebra(field: Field, n: int) -> FinDimCoalgebra:
    """Dual of the upper-triangular algebra, basis E^ij for i <= j."""
    idx = {}
    labels = []
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(labels)
            labels.append(f"E{i + 1}{j + 1}")
    one = field.one()
    comul = [[] for _ in labels]
    for (i, j), r in idx.items():
        comul[r] = [(idx[(i, k)], idx[(k, j)], one) for k in range(i, j + 1)]
    counit = [one if i == j else field.zero() for (i, j) in idx]
    return FinDimCoalgebra(field, labels, comul, counit)


def grouplike_coalgebra(field: Field, points) -> FinDimCoalgebra:
    """Linearization of a finite set: every basis element is grouplike."""
    if isinstance(points, int):
        labels = [f"x{i}" for i in range(points)]
    else:
        labels = [str(x) for x in points]
    if not labels:
        raise BadParamsError("need at least one point")
    one = field.one()
    comul = [[(r, r, one)] for r in range(len(labels))]
    return FinDimCoalgebra(field, labels, comul, [one] * len(labels))


def divided_power_coalgebra(field: Field, m: int, label: str = "eps") -> FinDimCoalgebra:
    """Dual of k[t]/(t^m): Delta(eps_r) = sum_{i+j=r} eps_i (x) eps_j."""
    if m < 1:
        raise BadParamsError("m must be >= 1")
    one = field.one()
    comul = [[(i, r - i, one) for i in range(r + 1)] for r in range(m)]
    counit = [one] + [field.zero()] * (m - 1)
    return FinDimCoalgebra(field, [f"{label}{r}" for r in range(m)], comul, counit)


def line_dist_coalgebra(field: Field, points) -> FinDimCoalgebra:
    """Distributions on finitely many points of the affine line.

    `points` maps a point (int, coerced into the field) to the order of its
    infinitesimal neighborhood; the result is the direct sum of divided-power
    blocks with labels eps(point,i).
    """
    if isinstance(points, dict):
        items = list(points.items())
    else:
        items = list(points)
    if not items:
        raise BadParamsError("need at least one point")
    items = [(field.of(pt), int(mult)) for pt, mult in items]
    items.sort(key=lambda pm: field.sort_key(pm[0]))
    seen = set()
    labels = []
    blocks = []
    for pt, mult in items:
        if pt in seen:
            raise BadParamsError(f"duplicate point {pt}")
        seen.add(pt)
        if mult < 1:
            raise BadParamsError("multiplicity must be >= 1")
        base = len(labels)
        labels.extend(f"eps({pt},{i})" for i in range(mult))
        blocks.append((base, mult))
    one = field.one()
    comul = [[] for _ in labels]
    counit = [field.zero()] * len(labels)
    for base, mult in blocks:
        for r in range(mult):
            comul[base + r] = [(base + i, base + r - i, one) for i in range(r + 1)]
        counit[base] = one
    return FinDimCoalgebra(field, labels, comul, counit)


def path_coalgebra(field: Field, quiver: Quiver) -> FinDimCoalgebra:
    """Path coalgebra of a finite acyclic quiver.

    Basis: all paths, sorted by (target, source, length, arrow indices); a
    path is stored in travel order from its source vertex.  Splitting a path
    gives Delta(p) = sum target-end (x) source-end, so for the linearly
    oriented A_n quiver (arrows i+1 -> i) the result matches the triangular
    coalgebra entrywise.
    """
    if not quiver.is_acyclic():
        raise CyclicQuiverError("path coalgebra needs an acyclic quiver")
    paths = [((), v, v) for v in range(quiver.vertices)]  # (arrows, source, target)
    frontier = paths
    while frontier:
        nxt = []
        for arrows, src, tgt in frontier:
            for ai, (s, t) in enumerate(quiver.arrows):
                if s == tgt:
                    nxt.append((arrows + (ai,), src, t))
        paths.extend(nxt)
        frontier = nxt
    paths.sort(key=lambda p: (p[2], p[1], len(p[0]), p[0]))
    index = {p: n for n, p in enumerate(paths)}

    def label(p):
        arrows, src, tgt = p
        if not arrows:
            return f"v{src}"
        return "".join(f"a{i}" for i in reversed(arrows))

    one = field.one()
    comul = []
    counit = []
    for arrows, src, tgt in paths:
        terms = []
        for k in range(len(arrows) + 1):
            prefix = arrows[:k]
            suffix = arrows[k:]
            mid = quiver.arrows[arrows[k - 1]][1] if k else src
            left = (suffix, mid, tgt)
            right = (prefix, src, mid)
            terms.append((index[left], index[right], one))
        comul.append(terms)
        counit.append(one if not arrows else field.zero())
    return FinDimCoalgebra(field, [label(p) for p in paths], comul, counit)


def construct_coalgebra(kind: str, params: dict, field: Field) -> FinDimCoalgebra:
    """Dispatcher used by the CLI; see the named constructors."""
    if kind == "comatrix":
        return comatrix_coalgebra(field, int(params["d"]))
    if kind == "triangular":
        return triangular_coalgebra(field, int(params["n"]))
    if kind == "grouplike":
        return grouplike_coalgebra(field, params["points"])
    if kind == "divided-power":
        return divided_power_coalgebra(field, int(params["m"]))
    if kind == "line-dist":
        return line_dist_coalgebra(field, params["points"])
    if kind == "path":
        q = Quiver(int(params["vertices"]), params["arrows"])
        return path_coalgebra(field, q)
    raise BadParamsError(f"unknown coalgebra kind {kind!r}")


# ---------------------------------------------------------------------------
# dual towers


class DualTower:
    """A chain of finite-dimensional coalgebras with injective inclusions,
    realizing a finite stretch of a directed system of duals."""

    __slots__ = ("levels", "inclusions")

    def __init__(self, levels, inclusions, validated: bool = False):
        self.levels = tuple(levels)
        self.inclusions = tuple(inclusions)
        if len(self.inclusions) != max(len(self.levels) - 1, 0):
            raise BadParamsError("need one inclusion per consecutive pair")
        if not validated:
            for k, inc in enumerate(self.inclusions):
                _check_tower_step(self.levels[k], self.levels[k + 1], inc)

    @property
    def top(self) -> FinDimCoalgebra:
        return self.levels[-1]

    def __eq__(self, other):
        return (
            isinstance(other, DualTower)
            and self.levels == other.levels
            and all(a.matrix == b.matrix for a, b in zip(self.inclusions, other.inclusions))
        )

    def __repr__(self):
        dims = ", ".join(str(lv.dim) for lv in self.levels)
        return f"DualTower({dims})"


def _check_tower_step(small: FinDimCoalgebra, big: FinDimCoalgebra, inc: CoalgebraHom):
    if inc.source != small or inc.target != big:
        raise BadParamsError("inclusion endpoints do not match the levels")
    if big.labels[: small.dim] != small.labels:
        raise BadParamsError("level labels must extend by suffix")
    if not inc.is_injective():
        raise NotInjectiveError("inclusion matrix is not injective")
    if not inc.is_valid():
        raise NotACoalgebraMapError("inclusion is not a coalgebra morphism")


def canonical_inclusion(small: FinDimCoalgebra, big: FinDimCoalgebra) -> CoalgebraHom:
    """The prefix inclusion [I; 0] for label-compatible levels."""
    f = small.field
    ent = []
    for i in range(big.dim):
        for j in range(small.dim):
            ent.append(f.one() if i == j else f.zero())
    return CoalgebraHom(small, big, Matrix(f, big.dim, small.dim, ent))


def tower_extend(tower: DualTower, nxt: FinDimCoalgebra, inclusion: CoalgebraHom) -> DualTower:
    _check_tower_step(tower.top, nxt, inclusion)
    return DualTower(tower.levels + (nxt,), tower.inclusions + (inclusion,), validated=True)
