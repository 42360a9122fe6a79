import random
from fractions import Fraction

import pytest

from findual.errors import OrderUnavailableError, ZeroPolynomialError
from findual.kernel import (
    GF,
    QQ,
    Matrix,
    Poly,
    factor_over_field,
    kron,
    primitive_root_of_unity,
    rref_kernel,
)


class TestPrimitiveRoots:
    def test_gf5_order_2(self):
        assert primitive_root_of_unity(GF(5), 2) == 4

    def test_gf5_order_4_smallest(self):
        # 2, 4, 8=3, 16=1: order of 2 is exactly 4 and 2 is the least such residue
        assert primitive_root_of_unity(GF(5), 4) == 2

    def test_gf5_order_3_unavailable(self):
        with pytest.raises(OrderUnavailableError):
            primitive_root_of_unity(GF(5), 3)

    def test_rationals(self):
        assert primitive_root_of_unity(QQ, 1) == Fraction(1)
        assert primitive_root_of_unity(QQ, 2) == Fraction(-1)
        with pytest.raises(OrderUnavailableError):
            primitive_root_of_unity(QQ, 4)

    @pytest.mark.parametrize("p,n", [(5, 1), (5, 2), (5, 4), (13, 2), (13, 3), (13, 4), (13, 6), (13, 12), (7, 3)])
    def test_order_is_exact(self, p, n):
        f = GF(p)
        q = primitive_root_of_unity(f, n)
        assert f.pow(q, n) == 1
        for d in range(1, n):
            if n % d == 0:
                assert f.pow(q, d) != 1


class TestFactor:
    def test_t2_minus_1_gf5(self):
        f = Poly.from_ints(GF(5), [-1, 0, 1])
        fac = factor_over_field(f)
        assert fac.complete
        # canonical order: degree, then lexicographic coefficients (lowest first)
        assert [(g.coeffs, m) for g, m in fac.factors] == [((1, 1), 1), ((4, 1), 1)]

    def test_t2_plus_1_gf5(self):
        f = Poly.from_ints(GF(5), [1, 0, 1])
        fac = factor_over_field(f)
        # 2^2 = 4 = -1 mod 5, so roots 2 and 3
        assert sorted(tuple(g.coeffs) for g, _ in fac.factors) == [(2, 1), (3, 1)]

    def test_t2_minus_2_gf5_irreducible(self):
        f = Poly.from_ints(GF(5), [-2, 0, 1])
        fac = factor_over_field(f)
        assert fac.complete
        assert len(fac.factors) == 1
        g, m = fac.factors[0]
        assert g.degree() == 2 and m == 1

    def test_zero_poly(self):
        with pytest.raises(ZeroPolynomialError):
            factor_over_field(Poly(GF(5), []))

    def test_multiplicities(self):
        # (t-1)^2 (t-2)^3 over GF(7)
        f7 = GF(7)
        f = Poly.from_ints(f7, [-1, 1])
        g = Poly.from_ints(f7, [-2, 1])
        h = f * f * g * g * g
        fac = factor_over_field(h)
        assert dict((tuple(q.coeffs), m) for q, m in fac.factors) == {(6, 1): 2, (5, 1): 3}
        assert fac.product(f7) == h

    def test_frobenius_power(self):
        # t^5 - t = t(t-1)(t-2)(t-3)(t-4) over GF(5)
        f = Poly.from_ints(GF(5), [0, -1, 0, 0, 0, 1])
        fac = factor_over_field(f)
        assert len(fac.factors) == 5
        assert all(g.degree() == 1 for g, _ in fac.factors)

    def test_pth_power(self):
        # (t-1)^5 over GF(5) has zero derivative
        f5 = GF(5)
        lin = Poly.from_ints(f5, [-1, 1])
        f = lin
        for _ in range(4):
            f = f * lin
        fac = factor_over_field(f)
        assert fac.factors == ((lin, 5),)

    def test_rational_split(self):
        f = Poly.from_ints(QQ, [2, -3, 1])  # (t-1)(t-2)
        fac = factor_over_field(f)
        assert fac.complete
        assert len(fac.factors) == 2

    def test_rational_not_split(self):
        f = Poly.from_ints(QQ, [-2, 0, 1])  # t^2 - 2
        fac = factor_over_field(f)
        assert not fac.complete

    def test_rational_fractional_root(self):
        f = Poly.from_ints(QQ, [-1, 0, 2])  # 2t^2 - 1? no: 2t^2 - 1 has irrational roots
        fac = factor_over_field(f)
        assert not fac.complete
        g = Poly.from_ints(QQ, [-1, 2])  # 2t - 1, root 1/2
        fac = factor_over_field(g * g)
        assert fac.complete
        assert fac.factors[0][1] == 2
        assert fac.product(QQ) == g * g

    def test_refinement_property(self):
        # factors of f*g refine the concatenated factors of f and g
        rng = random.Random(11)
        f5 = GF(5)
        for _ in range(25):
            f = Poly(f5, [rng.randrange(5) for _ in range(rng.randint(2, 5))])
            g = Poly(f5, [rng.randrange(5) for _ in range(rng.randint(2, 5))])
            if f.degree() < 1 or g.degree() < 1:
                continue
            combined = {}
            for q, m in factor_over_field(f).factors:
                combined[q] = combined.get(q, 0) + m
            for q, m in factor_over_field(g).factors:
                combined[q] = combined.get(q, 0) + m
            prod = factor_over_field(f * g)
            assert dict(prod.factors) == combined


class TestRref:
    def test_identity(self):
        res = rref_kernel(Matrix.identity(GF(5), 3))
        assert res.rank == 3
        assert res.kernel.cols == 0

    def test_rank_one(self):
        m = Matrix.from_int_rows(QQ, [[1, 2], [2, 4]])
        res = rref_kernel(m)
        assert res.rank == 1
        assert res.kernel.cols == 1
        assert res.kernel.col(0) == (Fraction(-2), Fraction(1))

    def test_zero(self):
        res = rref_kernel(Matrix.zeros(GF(5), 2, 3))
        assert res.rank == 0
        assert res.kernel.cols == 3

    def test_rank_nullity(self):
        rng = random.Random(3)
        f = GF(7)
        for _ in range(30):
            r, c = rng.randint(1, 5), rng.randint(1, 5)
            m = Matrix(f, r, c, [rng.randrange(7) for _ in range(r * c)])
            res = rref_kernel(m)
            assert res.rank + res.kernel.cols == c
            # kernel columns actually annihilate
            for j in range(res.kernel.cols):
                assert all(x == 0 for x in m.apply(list(res.kernel.col(j))))

    def test_idempotent(self):
        rng = random.Random(4)
        f = GF(5)
        for _ in range(20):
            m = Matrix(f, 3, 4, [rng.randrange(5) for _ in range(12)])
            r1 = rref_kernel(m).rref
            assert rref_kernel(r1).rref == r1


class TestKron:
    def test_identity(self):
        i2 = Matrix.identity(GF(5), 2)
        assert kron(i2, i2) == Matrix.identity(GF(5), 4)

    def test_shape(self):
        a = Matrix.zeros(QQ, 2, 3)
        b = Matrix.zeros(QQ, 4, 5)
        k = kron(a, b)
        assert (k.rows, k.cols) == (8, 15)

    def test_unit_entry(self):
        f = GF(5)
        e11 = Matrix.from_int_rows(f, [[1, 0], [0, 0]])
        k = kron(e11, e11)
        assert k.get(0, 0) == 1
        assert sum(1 for x in k.entries if x != 0) == 1

    def test_associativity(self):
        rng = random.Random(9)
        f = GF(5)
        for _ in range(10):
            a = Matrix(f, 2, 2, [rng.randrange(5) for _ in range(4)])
            b = Matrix(f, 2, 3, [rng.randrange(5) for _ in range(6)])
            c = Matrix(f, 3, 2, [rng.randrange(5) for _ in range(6)])
            assert kron(kron(a, b), c) == kron(a, kron(b, c))

    def test_mixed_product(self):
        rng = random.Random(10)
        f = GF(7)
        for _ in range(10):
            a = Matrix(f, 2, 2, [rng.randrange(7) for _ in range(4)])
            b = Matrix(f, 3, 3, [rng.randrange(7) for _ in range(9)])
            c = Matrix(f, 2, 2, [rng.randrange(7) for _ in range(4)])
            d = Matrix(f, 3, 3, [rng.randrange(7) for _ in range(9)])
            assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)
