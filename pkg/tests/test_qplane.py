import pytest

from findual.algebra import ideal_closure, validate_algebra
from findual.errors import (
    CharacteristicTooSmallError,
    GradingError,
    NotAzumayaError,
    OrderUnavailableError,
)
from findual.kernel import GF, Matrix
from findual.qplane import (
    azumaya_census,
    azumaya_point_invariants,
    box_dual_tower,
    irrep,
    irrep_classify,
    oq_truncation,
    q_number,
    qtwist_decomposition,
    regular_point_jet_algebra,
)
from findual.twist import twisted_product, verify_twisted_duality

F5 = GF(5)
F7 = GF(7)


class TestQNumber:
    def test_q_one(self):
        assert q_number(3, F7.one(), F7) == 3

    def test_q_minus_one(self):
        assert q_number(2, F5.of(-1), F5) == 0

    def test_gf7(self):
        assert q_number(3, F7.of(2), F7) == 0  # 1 + 2 + 4 = 7


class TestTruncations:
    def test_box_22(self):
        t = oq_truncation(2, 5, "box", (2, 2))
        assert t.algebra.dim == 4
        assert t.q == 4
        # y * x = 4 * xy  (basis 1, y, x, xy)
        assert dict(t.algebra.mul[1][2]) == {3: 4}

    def test_central_fiber_11(self):
        t = oq_truncation(2, 5, "central_fiber", (1, 1))
        assert t.algebra.dim == 4
        # x * x = x^2 -> 1
        assert dict(t.algebra.mul[2][2]) == {0: 1}

    def test_central_fiber_00_equals_box(self):
        fiber = oq_truncation(2, 5, "central_fiber", (0, 0))
        box = oq_truncation(2, 5, "box", (2, 2))
        assert fiber.algebra == box.algebra

    def test_order_unavailable(self):
        with pytest.raises(OrderUnavailableError):
            oq_truncation(3, 5, "box", (3, 3))

    def test_box22_mod_y_is_truncated_line(self):
        from findual.algebra import quotient_algebra, truncated_polynomial_algebra

        t = oq_truncation(2, 5, "box", (2, 2))
        y = [F5.zero()] * 4
        y[1] = F5.one()
        q, proj = quotient_algebra(t.algebra, ideal_closure(t.algebra, [y]))
        expected = truncated_polynomial_algebra(F5, 2)
        assert q.mul == expected.mul and q.unit == expected.unit
        assert proj.is_valid()

    def test_ideal_closure_of_xy_in_box33(self):
        t = oq_truncation(2, 5, "box", (3, 3))
        xy = [F5.zero()] * 9
        xy[1 * 3 + 1] = F5.one()
        sp = ideal_closure(t.algebra, [xy])
        assert sp.dim == 4
        for i in range(1, 3):
            for j in range(1, 3):
                vec = [F5.zero()] * 9
                vec[i * 3 + j] = F5.one()
                assert sp.contains(vec)


class TestQTwist:
    def test_q_equal_one_gives_swap(self):
        rep = qtwist_decomposition(1, 5, 2, 2)
        assert rep.tau_q.is_zero()
        assert rep.identity_holds

    def test_n2_p5_entries(self):
        rep = qtwist_decomposition(2, 5, 2, 2)
        # rho(y (x) x) = 4 * (x (x) y): column y(x)x = 1*2+1, row x(x)y = 1*2+1
        assert rep.rho_q.matrix.get(3, 3) == 4
        assert rep.tau_q.get(3, 3) == 1  # [1*1]_q = 1
        assert rep.identity_holds

    def test_grading_gate(self):
        with pytest.raises(GradingError):
            qtwist_decomposition(2, 5, 3, 2)

    @pytest.mark.parametrize("a,b", [(2, 2), (4, 4), (2, 4)])
    def test_twisted_product_is_box(self, a, b):
        rep = qtwist_decomposition(2, 5, a, b)
        prod = twisted_product(rep.rho_q)
        box = oq_truncation(2, 5, "box", (a, b)).algebra
        assert prod.mul == box.mul
        assert prod.unit == box.unit

    @pytest.mark.parametrize("a,b", [(2, 2), (4, 4)])
    def test_duality_on_boxes(self, a, b):
        rep = qtwist_decomposition(2, 5, a, b)
        assert verify_twisted_duality(rep.rho_q).equal

    def test_identity_across_parameters(self):
        for n, p in [(2, 5), (4, 5), (2, 13), (3, 7)]:
            rep = qtwist_decomposition(n, p, n, 2 * n)
            assert rep.identity_holds


class TestIrreps:
    def test_generic_point(self):
        r = irrep(2, 5, 1, 1)
        assert r.dim == 2
        assert r.x_matrix == Matrix.from_int_rows(F5, [[1, 0], [0, 4]])
        assert r.y_matrix == Matrix.from_int_rows(F5, [[0, 1], [1, 0]])
        assert (r.y_matrix @ r.x_matrix) == (r.x_matrix @ r.y_matrix).scale(F5.of(4))
        assert r.irreducible

    def test_axis_points(self):
        r = irrep(2, 5, 2, 0)
        assert r.dim == 1
        assert r.x_matrix.entries == (2,)
        assert r.y_matrix.entries == (0,)
        origin = irrep(2, 5, 0, 0)
        assert origin.dim == 1

    def test_central_character(self):
        for alpha in range(1, 5):
            for beta in range(1, 5):
                r = irrep(2, 5, alpha, beta)
                xn = r.x_matrix @ r.x_matrix
                yn = r.y_matrix @ r.y_matrix
                assert xn == Matrix.identity(F5, 2).scale(F5.pow(alpha, 2))
                assert yn == Matrix.identity(F5, 2).scale(F5.pow(beta, 2))
                assert r.irreducible

    def test_classify_n2_p5(self):
        rep = irrep_classify(2, 5)
        assert rep.one_dim == 9
        assert rep.n_dim_classes == 4
        assert (1, 1) in rep.class_reps
        assert (4, 4) not in rep.class_reps  # same orbit as (1, 1)

    def test_classify_n1(self):
        rep = irrep_classify(1, 3)
        assert rep.one_dim == 5
        assert rep.n_dim_classes == 4


class TestCensus:
    def test_n2_p5(self):
        report = azumaya_census(2, 5)
        agg = report.aggregate
        assert agg["azumaya_fibers"] == 16
        assert agg["axis_fibers"] == 9
        assert agg["rational_axis_points"] == 9
        assert agg["rational_orbit_classes"] == 4
        assert agg["nonsplit_axis_factors"] == 4
        assert agg["azumaya_iff_off_axis"]
        for f in report.fibers:
            if f.azumaya:
                assert f.profile == (0, ((4, 1),))
        # PI degree: no fiber exceeds the n^2 matrix factor
        assert max(d for f in report.fibers for d, _ in f.profile.factors) == 4

    def test_n1_p3_commutative(self):
        report = azumaya_census(1, 3)
        for f in report.fibers:
            if GF(3).mul(f.c, f.d) != 0:
                assert f.azumaya
                assert f.profile == (0, ((1, 1),))

    def test_threads_match_sequential(self):
        seq = azumaya_census(2, 5, threads=1)
        par = azumaya_census(2, 5, threads=2)
        assert seq == par

    def test_threads_env_var(self, monkeypatch):
        monkeypatch.setenv("FINDUAL_THREADS", "2")
        assert azumaya_census(2, 5) == azumaya_census(2, 5, threads=1)

    def test_precondition(self):
        with pytest.raises(CharacteristicTooSmallError):
            azumaya_census(2, 3)  # would need p > 4 but 2 | 3 - 1 fails first?
        with pytest.raises(OrderUnavailableError):
            azumaya_census(3, 5)


class TestPointInvariants:
    def test_n2_p5(self):
        inv = azumaya_point_invariants(2, 5, 1, 1)
        assert inv.total_dim == 12
        assert inv.radical_dim == 8
        assert inv.radical_square_zero
        assert inv.top_profile == ((4, 1),)
        assert inv.center_dim == 3

    def test_n2_p13(self):
        inv = azumaya_point_invariants(2, 13, 1, 1)
        assert (inv.total_dim, inv.radical_dim, inv.top_profile, inv.center_dim) == (12, 8, ((4, 1),), 3)

    def test_axis_point_rejected(self):
        with pytest.raises(NotAzumayaError):
            azumaya_point_invariants(2, 5, 1, 0)

    def test_jet_algebra_validates(self):
        alg = regular_point_jet_algebra(2, 5, 2, 3)
        assert validate_algebra(alg).ok
        assert alg.dim == 12

    def test_all_azumaya_points_same_shape(self):
        for c in (1, 2):
            for d in (1, 3):
                inv = azumaya_point_invariants(2, 5, c, d)
                assert (inv.total_dim, inv.radical_dim, inv.center_dim) == (12, 8, 3)
                assert inv.top_profile == ((4, 1),)


class TestHigherOrder:
    """The same machinery at n = 3: PI degree and jet shapes scale as n^2."""

    def test_census_3_13(self):
        rep = azumaya_census(3, 13)
        agg = rep.aggregate
        assert agg["azumaya_fibers"] == 144
        assert agg["axis_fibers"] == 25
        assert agg["rational_axis_points"] == 25
        assert agg["rational_orbit_classes"] == 16  # (12/3)^2
        assert agg["azumaya_iff_off_axis"]
        assert max(d for f in rep.fibers for d, _ in f.profile.factors) == 9

    def test_point_3_13(self):
        inv = azumaya_point_invariants(3, 13, 2, 5)
        assert (inv.total_dim, inv.radical_dim, inv.radical_square_zero,
                inv.top_profile, inv.center_dim) == (27, 18, True, ((9, 1),), 3)


class TestBoxTower:
    def test_levels_and_inclusions(self):
        tower = box_dual_tower(2, 5, [1, 2, 3])
        assert [lv.dim for lv in tower.levels] == [4, 16, 36]
        for small, big in zip(tower.levels, tower.levels[1:]):
            assert big.labels[: small.dim] == small.labels
