"""Truncated quantum planes at roots of unity over GF(p): q-twist
decomposition, irreducible representations, Azumaya census, and the
regular-point invariant check.

The quantum plane relation is y x = q * x y.  Truncations come in two kinds:
``box(a, b)`` kills x^a and y^b; ``central_fiber(c, d)`` reduces x^n -> c and
y^n -> d, producing the n^2-dimensional fiber algebra over the central point
(c, d).  Monomial bases are ordered x-major: x^i y^j at index i*b + j.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from .algebra import (
    FinDimAlgebra,
    SemisimpleProfile,
    _radical_trace_form,
    _semisimple_factors,
    center,
    one_dim_characters,
    quotient_algebra,
    semisimple_profile,
    subspace_product,
    validate_algebra,
)
from .coalgebra import DualTower, canonical_inclusion, dualize_algebra, tower_extend
from .errors import (
    BadParamsError,
    CharacteristicTooSmallError,
    GradingError,
    InvalidInputError,
    NotAzumayaError,
    OrderUnavailableError,
)
from .kernel import GF, Matrix, Poly, primitive_root_of_unity
from .twist import TwistingMap, check_twisting_map, tensor_swap
from .algebra import monogenic_algebra


class QPlaneTrunc(NamedTuple):
    n: int
    p: int
    q: int
    kind: str  # "box" or "central_fiber"
    params: tuple
    algebra: FinDimAlgebra


def q_number(m: int, q, field) -> object:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise BadParamsError("m must be >= 0")
    acc = field.zero()
    power = field.one()
    for _ in range(m):
        acc = field.add(acc, power)
        power = field.mul(power, q)
    return acc


def _require_root(n: int, p: int):
    field = GF(p)
    q = primitive_root_of_unity(field, n)
    return field, q


def oq_truncation(n: int, p: int, kind: str, params) -> QPlaneTrunc:
    """Finite quotient of the quantum plane on the monomial basis x^i y^j."""
    field, q = _require_root(n, p)
    if kind == "box":
        a, b = params
        if a < 1 or b < 1:
            raise BadParamsError("box truncation needs a, b >= 1")
        xmax, ymax = a, b

        def reduce_pow(i, j):
            if i >= a or j >= b:
                return ()
            return (((i, j), field.one()),)

    elif kind == "central_fiber":
        c, d = field.of(params[0]), field.of(params[1])
        xmax = ymax = n

        def reduce_pow(i, j):
            coeff = field.one()
            if i >= n:
                coeff = field.mul(coeff, c)
                i -= n
            if j >= n:
                coeff = field.mul(coeff, d)
                j -= n
            if coeff == field.zero():
                return ()
            return (((i, j), coeff),)

    else:
        raise BadParamsError(f"unknown truncation kind {kind!r}")

    dim = xmax * ymax
    labels = [f"x^{i}y^{j}" for i in range(xmax) for j in range(ymax)]
    mul = [[() for _ in range(dim)] for _ in range(dim)]
    for i1 in range(xmax):
        for j1 in range(ymax):
            left = i1 * ymax + j1
            for i2 in range(xmax):
                for j2 in range(ymax):
                    right = i2 * ymax + j2
                    scale = field.pow(q, j1 * i2)
                    pairs = []
                    for (i, j), coeff in reduce_pow(i1 + i2, j1 + j2):
                        pairs.append((i * ymax + j, field.mul(scale, coeff)))
                    mul[left][right] = tuple(pairs)
    unit = [field.zero()] * dim
    unit[0] = field.one()
    alg = FinDimAlgebra(field, labels, mul, unit)
    if not validate_algebra(alg).ok:
        raise InvalidInputError("quantum plane truncation failed validation")
    if kind == "box":
        return QPlaneTrunc(n, p, q, kind, (params[0], params[1]), alg)
    return QPlaneTrunc(n, p, q, kind, (field.of(params[0]), field.of(params[1])), alg)


class QTwistReport(NamedTuple):
    rho_q: TwistingMap
    tau_q: Matrix
    identity_holds: bool


def qtwist_decomposition(n: int, p: int, a: int, b: int) -> QTwistReport:
    """Build rho_q on k[x]/(x^a), k[y]/(y^b) and verify
    rho_q = swap - (1 - q) * tau_q on the Z/n-graded components."""
    field, q = _require_root(n, p)
    if a % n or b % n:
        raise GradingError("truncation levels must be multiples of n")
    ax = Poly(field, [field.zero()] * a + [field.one()])
    by = Poly(field, [field.zero()] * b + [field.one()])
    A = monogenic_algebra(field, ax, var="x")
    B = monogenic_algebra(field, by, var="y")
    size = a * b
    rho_ent = [field.zero()] * (size * size)
    tau_ent = [field.zero()] * (size * size)
    for yexp in range(b):
        for xexp in range(a):
            col = yexp * a + xexp
            row = xexp * b + yexp
            rho_ent[row * size + col] = field.pow(q, yexp * xexp)
            i0, j0 = yexp % n, xexp % n
            if i0 and j0:
                tau_ent[row * size + col] = q_number(i0 * j0, q, field)
    rho = TwistingMap(A, B, Matrix(field, size, size, rho_ent))
    tau = Matrix(field, size, size, tau_ent)
    sigma = tensor_swap(A, B).matrix
    one_minus_q = field.sub(field.one(), q)
    identity = rho.matrix == sigma - tau.scale(one_minus_q)
    if not check_twisting_map(rho).ok:
        raise InvalidInputError("rho_q failed the twisting-map axioms")
    return QTwistReport(rho, tau, identity)


class Irrep(NamedTuple):
    alpha: object
    beta: object
    dim: int
    x_matrix: Matrix
    y_matrix: Matrix
    irreducible: bool


def irrep(n: int, p: int, alpha, beta) -> Irrep:
    """The irreducible representation of the quantum plane at (alpha, beta):
    one-dimensional on the axes, x -> alpha*D / y -> beta*P off them."""
    field, q = _require_root(n, p)
    alpha = field.of(alpha)
    beta = field.of(beta)
    if field.mul(alpha, beta) == field.zero():
        x = Matrix(field, 1, 1, [alpha])
        y = Matrix(field, 1, 1, [beta])
        return Irrep(alpha, beta, 1, x, y, True)
    diag = Matrix(field, n, n,
                  [field.pow(q, i) if i == j else field.zero()
                   for i in range(n) for j in range(n)])
    perm = Matrix(field, n, n,
                  [field.one() if j == (i + 1) % n else field.zero()
                   for i in range(n) for j in range(n)])
    x = diag.scale(alpha)
    y = perm.scale(beta)
    if y @ x != (x @ y).scale(q):
        raise InvalidInputError("YX = qXY failed")
    image_rows = []
    for i in range(n):
        for j in range(n):
            m = _mat_pow(x, i) @ _mat_pow(y, j)
            image_rows.append(list(m.entries))
    rank = Matrix.from_rows(field, image_rows).rank()
    return Irrep(alpha, beta, n, x, y, rank == n * n)


def _mat_pow(m: Matrix, k: int) -> Matrix:
    acc = Matrix.identity(m.field, m.rows)
    for _ in range(k):
        acc = acc @ m
    return acc


class IrrepClassification(NamedTuple):
    one_dim: int
    n_dim_classes: int
    class_reps: tuple  # lexicographically least (alpha, beta) per class


def irrep_classify(n: int, p: int) -> IrrepClassification:
    """Count one-dimensional representations (axis points) and classify the
    n-dimensional ones by their central character (alpha^n, beta^n)."""
    field, _ = _require_root(n, p)
    one_dim = 0
    classes = {}
    for alpha in range(p):
        for beta in range(p):
            if alpha == 0 or beta == 0:
                one_dim += 1
                continue
            key = (field.pow(alpha, n), field.pow(beta, n))
            if key not in classes:
                classes[key] = (alpha, beta)
    reps = tuple(sorted(classes.values()))
    return IrrepClassification(one_dim, len(classes), reps)


class FiberRecord(NamedTuple):
    c: object
    d: object
    azumaya: bool
    profile: SemisimpleProfile


class CensusReport(NamedTuple):
    n: int
    p: int
    fibers: tuple
    aggregate: dict


def _fiber_record(n: int, p: int, c: int, d: int) -> FiberRecord:
    trunc = oq_truncation(n, p, "central_fiber", (c, d))
    prof = semisimple_profile(trunc.algebra)
    azumaya = prof.radical_dim == 0 and prof.factors == ((n * n, 1),)
    return FiberRecord(c, d, azumaya, prof)


def azumaya_census(n: int, p: int, threads: int | None = None) -> CensusReport:
    """Profile every central fiber (c, d) in GF(p)^2 and tabulate the
    Azumaya/axis split with its rational-point counts."""
    field, _ = _require_root(n, p)
    if p <= n * n:
        raise CharacteristicTooSmallError(f"census needs p > n^2; got p = {p}, n = {n}")
    if threads is None:
        threads = _default_threads()
    points = [(c, d) for c in range(p) for d in range(p)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            fibers = list(pool.map(lambda cd: _fiber_record(n, p, *cd), points))
    else:
        fibers = [_fiber_record(n, p, c, d) for c, d in points]
    azumaya_fibers = sum(1 for f in fibers if f.azumaya)
    axis_fibers = sum(1 for f in fibers if field.mul(f.c, f.d) == field.zero())
    identity = all(
        f.azumaya == (field.mul(f.c, f.d) != field.zero()) for f in fibers
    )
    rational_axis_points = 0
    nonsplit_axis_factors = 0
    for f in fibers:
        if field.mul(f.c, f.d) != field.zero():
            continue
        fiber_alg = oq_truncation(n, p, "central_fiber", (f.c, f.d)).algebra
        rational_axis_points += len(one_dim_characters(fiber_alg))
        nonsplit_axis_factors += sum(1 for _, cd in f.profile.factors if cd > 1)
    aggregate = {
        "azumaya_fibers": azumaya_fibers,
        "axis_fibers": axis_fibers,
        "azumaya_iff_off_axis": identity,
        "rational_axis_points": rational_axis_points,
        "rational_orbit_classes": irrep_classify(n, p).n_dim_classes,
        "nonsplit_axis_factors": nonsplit_axis_factors,
    }
    return CensusReport(n, p, tuple(fibers), aggregate)


def _default_threads() -> int:
    raw = os.environ.get("FINDUAL_THREADS", "")
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return 1


class PointInvariants(NamedTuple):
    total_dim: int
    radical_dim: int
    radical_square_zero: bool
    top_profile: tuple
    center_dim: int


def regular_point_jet_algebra(n: int, p: int, c, d) -> FinDimAlgebra:
    """R/(R m^2) at the central point m = (x^n - c, y^n - d), on the basis
    x^i y^j * {1, u, v} with u = x^n - c, v = y^n - d and (u, v)^2 = 0."""
    field, q = _require_root(n, p)
    c = field.of(c)
    d = field.of(d)
    if field.mul(c, d) == field.zero():
        raise NotAzumayaError("point lies on a coordinate axis (cd = 0)")
    jets = ((0, 0), (1, 0), (0, 1))
    jet_index = {e: k for k, e in enumerate(jets)}
    dim = n * n * 3

    def index(i, j, e):
        return (i * n + j) * 3 + jet_index[e]

    def label(i, j, e):
        tail = {(0, 0): "", (1, 0): "u", (0, 1): "v"}[e]
        return f"x^{i}y^{j}{tail}"

    labels = [label(i, j, e) for i in range(n) for j in range(n) for e in jets]
    mul = [[() for _ in range(dim)] for _ in range(dim)]
    for i1 in range(n):
        for j1 in range(n):
            for e1 in jets:
                row_idx = index(i1, j1, e1)
                for i2 in range(n):
                    for j2 in range(n):
                        for e2 in jets:
                            col_idx = index(i2, j2, e2)
                            acc = {}
                            base = field.pow(q, j1 * i2)
                            # (u, v)-degree of the product before overflow
                            ud = e1[0] + e2[0]
                            vd = e1[1] + e2[1]
                            if ud + vd > 1:
                                mul[row_idx][col_idx] = ()
                                continue
                            terms = [(ud, vd, base)]
                            i = i1 + i2
                            j = j1 + j2
                            if i >= n:
                                i -= n
                                terms = [t for term in terms for t in _times_u_plus_c(term, field, c)]
                            if j >= n:
                                j -= n
                                terms = [t for term in terms for t in _times_v_plus_d(term, field, d)]
                            for tud, tvd, coeff in terms:
                                if tud + tvd > 1 or coeff == field.zero():
                                    continue
                                key = index(i, j, (tud, tvd))
                                acc[key] = field.add(acc.get(key, field.zero()), coeff)
                            mul[row_idx][col_idx] = tuple(sorted(acc.items()))
    unit = [field.zero()] * dim
    unit[0] = field.one()
    alg = FinDimAlgebra(field, labels, mul, unit)
    if not validate_algebra(alg).ok:
        raise InvalidInputError("jet algebra failed validation")
    return alg


def _times_u_plus_c(term, field, c):
    ud, vd, coeff = term
    return [(ud + 1, vd, coeff), (ud, vd, field.mul(coeff, c))]


def _times_v_plus_d(term, field, d):
    ud, vd, coeff = term
    return [(ud, vd + 1, coeff), (ud, vd, field.mul(coeff, d))]


def azumaya_point_invariants(n: int, p: int, c, d) -> PointInvariants:
    """Structure invariants of R/(R m^2) at an Azumaya point: they match the
    matrix-jet model M_n(k[u, v]/(u, v)^2)."""
    if (3 * n) % p == 0:
        raise CharacteristicTooSmallError(
            f"trace form needs p coprime to 3n; got p = {p}, n = {n}"
        )
    alg = regular_point_jet_algebra(n, p, c, d)
    return measure_point_invariants(alg)


def measure_point_invariants(alg: FinDimAlgebra) -> PointInvariants:
    """Radical, radical-square, top factors, and center of a jet-type algebra
    (trace-form radical: callers guarantee the characteristic is safe)."""
    rad = _radical_trace_form(alg)
    rad_sq = subspace_product(alg, rad, rad)
    if rad.dim:
        top = quotient_algebra(alg, rad)[0]
    else:
        top = alg
    return PointInvariants(
        total_dim=alg.dim,
        radical_dim=rad.dim,
        radical_square_zero=rad_sq.dim == 0,
        top_profile=_semisimple_factors(top),
        center_dim=center(alg).dim,
    )


def box_dual_tower(n: int, p: int, steps) -> DualTower:
    """Duals of the box truncations box(kn, kn) for k in `steps`, with basis
    in shells (ordered by max exponent) so each level's labels are a prefix
    of the next and the canonical inclusions are coalgebra maps.

    This is the explicit cofinal chain realizing the finite dual of the
    quantum plane at desk scale.
    """
    steps = sorted(set(int(k) for k in steps))
    if not steps or steps[0] < 1:
        raise BadParamsError("steps must be positive integers")
    field, q = _require_root(n, p)
    levels = []
    for k in steps:
        side = k * n
        monomials = sorted(
            ((i, j) for i in range(side) for j in range(side)),
            key=lambda ij: (max(ij), ij[0], ij[1]),
        )
        index = {m: t for t, m in enumerate(monomials)}
        labels = [f"x^{i}y^{j}" for i, j in monomials]
        dim = side * side
        mul = [[() for _ in range(dim)] for _ in range(dim)]
        for (i1, j1), left in index.items():
            for (i2, j2), right in index.items():
                i, j = i1 + i2, j1 + j2
                if i < side and j < side:
                    mul[left][right] = ((index[(i, j)], field.pow(q, j1 * i2)),)
        unit = [field.zero()] * dim
        unit[index[(0, 0)]] = field.one()
        levels.append(dualize_algebra(FinDimAlgebra(field, labels, mul, unit)))
    tower = DualTower(levels[:1], [])
    for small, big in zip(levels, levels[1:]):
        tower = tower_extend(tower, big, canonical_inclusion(small, big))
    return tower
