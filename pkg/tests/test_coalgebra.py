import pytest

from findual.algebra import (
    AlgebraHom,
    cyclic_group_algebra,
    diagonal_algebra,
    matrix_algebra,
    one_dim_characters,
    triangular_algebra,
    truncated_polynomial_algebra,
)
from findual.coalgebra import (
    CoalgebraHom,
    DualTower,
    FinDimCoalgebra,
    Quiver,
    canonical_inclusion,
    comatrix_coalgebra,
    coradical,
    coradical_filtration,
    coradical_preserved,
    divided_power_coalgebra,
    dualize_algebra,
    dualize_coalgebra,
    grouplike_coalgebra,
    grouplikes,
    grouplikes_bruteforce,
    line_dist_coalgebra,
    path_coalgebra,
    tower_extend,
    triangular_coalgebra,
    validate_coalgebra,
)
from findual.errors import CyclicQuiverError, NotACoalgebraMapError, NotInjectiveError
from findual.kernel import GF, QQ, Matrix, echelon_rows, in_row_span

F5 = GF(5)


class TestValidate:
    def test_comatrix_passes(self):
        assert validate_coalgebra(comatrix_coalgebra(F5, 2)).ok

    def test_perturbed_fails(self):
        c = comatrix_coalgebra(F5, 2)
        comul = [list(c.comul[r]) for r in range(c.dim)]
        i, j, cf = comul[1][0]
        comul[1][0] = (i, j, F5.add(cf, F5.one()))
        bad = FinDimCoalgebra(F5, c.labels, comul, c.counit)
        rep = validate_coalgebra(bad)
        assert not rep.ok

    def test_zero_counit_fails(self):
        c = comatrix_coalgebra(F5, 2)
        bad = FinDimCoalgebra(F5, c.labels, [list(t) for t in c.comul], [F5.zero()] * 4)
        rep = validate_coalgebra(bad)
        assert not rep.counital


class TestDualize:
    def test_m2_gives_comatrix(self):
        assert dualize_algebra(matrix_algebra(F5, 2)) == comatrix_coalgebra(F5, 2)

    def test_dual_numbers(self):
        c = dualize_algebra(truncated_polynomial_algebra(F5, 2, var="eps"))
        assert c.comul[1] == ((0, 1, 1), (1, 0, 1))
        assert c.counit == (1, 0)

    def test_group_algebra_dual(self):
        c = dualize_algebra(cyclic_group_algebra(F5, 2, var="g"))
        # mul table {1*1=1, 1*g=g, g*g=1} transposes to the stated coproduct
        assert c.comul[0] == ((0, 0, 1), (1, 1, 1))
        assert c.comul[1] == ((0, 1, 1), (1, 0, 1))

    def test_comatrix_dual_is_matrix_algebra(self):
        assert dualize_coalgebra(comatrix_coalgebra(F5, 2)) == matrix_algebra(F5, 2)

    def test_grouplike_dual_is_diagonal(self):
        kx = grouplike_coalgebra(F5, 3)
        assert dualize_coalgebra(kx).mul == diagonal_algebra(F5, 3).mul

    @pytest.mark.parametrize("alg", [
        matrix_algebra(F5, 2),
        matrix_algebra(QQ, 3),
        triangular_algebra(F5, 3),
        truncated_polynomial_algebra(F5, 4),
        cyclic_group_algebra(QQ, 5),
        diagonal_algebra(F5, 4),
    ])
    def test_round_trip_algebra(self, alg):
        assert dualize_coalgebra(dualize_algebra(alg)) == alg

    @pytest.mark.parametrize("coalg", [
        comatrix_coalgebra(F5, 2),
        triangular_coalgebra(QQ, 3),
        divided_power_coalgebra(F5, 5),
        grouplike_coalgebra(F5, 4),
        line_dist_coalgebra(F5, {0: 2, 1: 1}),
    ])
    def test_round_trip_coalgebra(self, coalg):
        assert dualize_algebra(dualize_coalgebra(coalg)) == coalg


class TestGrouplikes:
    def test_triangular(self):
        gl = grouplikes(triangular_coalgebra(F5, 2))
        assert gl == [(1, 0, 0), (0, 0, 1)] or gl == [(0, 0, 1), (1, 0, 0)]

    def test_grouplike_coalgebra(self):
        gl = grouplikes(grouplike_coalgebra(F5, 3))
        assert sorted(gl) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_comatrix_has_none(self):
        assert grouplikes(comatrix_coalgebra(F5, 2)) == []

    @pytest.mark.parametrize("coalg", [
        comatrix_coalgebra(F5, 2),
        triangular_coalgebra(F5, 2),
        grouplike_coalgebra(F5, 3),
        divided_power_coalgebra(F5, 4),
        line_dist_coalgebra(F5, {0: 2, 2: 2}),
        dualize_algebra(cyclic_group_algebra(F5, 4)),
    ])
    def test_agrees_with_bruteforce(self, coalg):
        assert sorted(grouplikes(coalg)) == sorted(grouplikes_bruteforce(coalg))

    def test_counit_one_and_independent(self):
        for coalg in [triangular_coalgebra(GF(7), 3), grouplike_coalgebra(GF(7), 5)]:
            f = coalg.field
            gl = grouplikes(coalg)
            for g in gl:
                assert coalg.counit_of_vector(g) == f.one()
            rows = echelon_rows(f, [list(g) for g in gl])
            assert len(rows) == len(gl)

    def test_bijection_with_characters(self):
        for alg in [cyclic_group_algebra(F5, 4), triangular_algebra(F5, 2), diagonal_algebra(F5, 3)]:
            chars = one_dim_characters(alg)
            gl = grouplikes(dualize_algebra(alg))
            assert sorted(ch.values for ch in chars) == sorted(gl)


class TestCoradical:
    def test_comatrix_cosemisimple(self):
        flt = coradical_filtration(comatrix_coalgebra(F5, 2))
        assert len(flt) == 1 and flt[0].dim == 4

    def test_divided_power_levels(self):
        m = 4
        flt = coradical_filtration(divided_power_coalgebra(F5, m))
        assert [lv.dim for lv in flt] == [1, 2, 3, 4]
        for i, lv in enumerate(flt):
            for k in range(i + 1):
                vec = [F5.zero()] * m
                vec[k] = F5.one()
                assert lv.contains(vec)

    def test_triangular_two_steps(self):
        flt = coradical_filtration(triangular_coalgebra(F5, 2))
        assert [lv.dim for lv in flt] == [2, 3]
        assert flt[0].contains([1, 0, 0]) and flt[0].contains([0, 0, 1])
        assert not flt[0].contains([0, 1, 0])

    def test_filtration_over_rationals(self):
        flt = coradical_filtration(divided_power_coalgebra(QQ, 5))
        assert [lv.dim for lv in flt] == [1, 2, 3, 4, 5]

    def test_grouplikes_inside_coradical(self):
        for coalg in [
            triangular_coalgebra(GF(7), 3),
            line_dist_coalgebra(F5, {0: 2, 1: 1}),
            dualize_algebra(cyclic_group_algebra(F5, 4)),
        ]:
            c0 = coradical(coalg)
            for g in grouplikes(coalg):
                assert c0.contains(list(g))

    def test_sweedler_filtration_property(self):
        for coalg in [
            triangular_coalgebra(GF(7), 3),
            divided_power_coalgebra(F5, 4),
            line_dist_coalgebra(F5, {0: 3}),
        ]:
            f = coalg.field
            flt = coradical_filtration(coalg)
            for n, lv in enumerate(flt):
                rows = []
                for i in range(n + 1):
                    j = n - i
                    ci = flt[min(i, len(flt) - 1)].rows
                    cj = flt[min(j, len(flt) - 1)].rows
                    for u in ci:
                        for v in cj:
                            rows.append([f.mul(a, b) for a in u for b in v])
                span = echelon_rows(f, rows)
                for v in lv.rows:
                    delta = coalg.delta_of_vector(list(v))
                    assert in_row_span(span, delta, f)


class TestConstructors:
    def test_divided_power_table(self):
        c = divided_power_coalgebra(F5, 3)
        assert c.comul[2] == ((0, 2, 1), (1, 1, 1), (2, 0, 1))
        assert c.counit == (1, 0, 0)

    def test_path_a2_matches_triangular(self):
        q = Quiver(2, [(1, 0)])
        pc = path_coalgebra(F5, q)
        tc = triangular_coalgebra(F5, 2)
        assert pc.comul == tc.comul and pc.counit == tc.counit

    def test_path_a3_matches_triangular(self):
        q = Quiver(3, [(1, 0), (2, 1)])
        pc = path_coalgebra(QQ, q)
        tc = triangular_coalgebra(QQ, 3)
        assert pc.comul == tc.comul and pc.counit == tc.counit

    def test_path_multi_arrow(self):
        # Kronecker-style: two arrows between two vertices (still acyclic)
        q = Quiver(2, [(1, 0), (1, 0)])
        pc = path_coalgebra(F5, q)
        assert pc.dim == 4
        assert validate_coalgebra(pc).ok

    def test_cyclic_quiver_rejected(self):
        with pytest.raises(CyclicQuiverError):
            path_coalgebra(F5, Quiver(2, [(0, 1), (1, 0)]))

    def test_line_dist(self):
        c = line_dist_coalgebra(F5, {0: 2, 1: 1})
        assert c.dim == 3
        gl = grouplikes(c)
        assert len(gl) == 2
        assert validate_coalgebra(c).ok

    def test_all_constructors_validate(self):
        for c in [
            comatrix_coalgebra(QQ, 3),
            triangular_coalgebra(F5, 3),
            grouplike_coalgebra(QQ, 5),
            divided_power_coalgebra(QQ, 5),
            line_dist_coalgebra(QQ, [(0, 2), (1, 1), (2, 1)]),
            path_coalgebra(F5, Quiver(4, [(1, 0), (2, 1), (3, 2), (3, 0)])),
        ]:
            assert validate_coalgebra(c).ok


class TestCoradicalPreserved:
    def test_counterexample_t_to_e12(self):
        src = truncated_polynomial_algebra(F5, 3)
        tgt = matrix_algebra(F5, 2)
        cols = [list(tgt.unit), [0, 1, 0, 0], [0, 0, 0, 0]]
        mat = Matrix(F5, 4, 3, [cols[j][i] for i in range(4) for j in range(3)])
        hom = AlgebraHom(src, tgt, mat)
        assert hom.is_valid()
        rep = coradical_preserved(hom)
        assert not rep.preserved
        assert rep.witness is not None

    def test_identity_on_m2(self):
        m2 = matrix_algebra(F5, 2)
        hom = AlgebraHom(m2, m2, Matrix.identity(F5, 4))
        assert coradical_preserved(hom).preserved

    def test_commutative_semisimple_targets(self):
        t2 = triangular_algebra(F5, 2)
        # quotient by the radical: T2 -> k x k
        from findual.algebra import quotient_algebra, radical

        q, proj = quotient_algebra(t2, radical(t2))
        assert coradical_preserved(proj).preserved
        # a character of a group algebra
        g4 = cyclic_group_algebra(F5, 4)
        for ch in one_dim_characters(g4):
            hom = AlgebraHom(g4, diagonal_algebra(F5, 1), Matrix(F5, 1, 4, ch.values))
            assert hom.is_valid()
            assert coradical_preserved(hom).preserved


class TestTowers:
    def test_divided_power_chain(self):
        levels = [divided_power_coalgebra(F5, m) for m in (1, 2, 3)]
        tower = DualTower([levels[0]], [])
        tower = tower_extend(tower, levels[1], canonical_inclusion(levels[0], levels[1]))
        tower = tower_extend(tower, levels[2], canonical_inclusion(levels[1], levels[2]))
        assert [lv.dim for lv in tower.levels] == [1, 2, 3]

    def test_line_dist_chain(self):
        small = line_dist_coalgebra(F5, {0: 1})
        big = line_dist_coalgebra(F5, {0: 1, 1: 1})
        tower = DualTower([small], [])
        tower = tower_extend(tower, big, canonical_inclusion(small, big))
        assert tower.top.dim == 2

    def test_bad_inclusion_rejected(self):
        small = divided_power_coalgebra(F5, 2)
        big = divided_power_coalgebra(F5, 3)
        tower = DualTower([small], [])
        ent = [F5.zero()] * (3 * 2)
        ent[0] = F5.one()  # rank-1 map: not injective
        with pytest.raises(NotInjectiveError):
            tower_extend(tower, big, CoalgebraHom(small, big, Matrix(F5, 3, 2, ent)))
        # full-rank but not a coalgebra morphism
        ent = [F5.zero()] * (3 * 2)
        ent[0 * 2 + 0] = F5.one()
        ent[2 * 2 + 1] = F5.one()  # eps1 -> eps2
        with pytest.raises(NotACoalgebraMapError):
            tower_extend(tower, big, CoalgebraHom(small, big, Matrix(F5, 3, 2, ent)))


class TestEmbeddingFunctor:
    def test_set_maps_induce_coalgebra_homs(self):
        kx = grouplike_coalgebra(F5, 3)
        ky = grouplike_coalgebra(F5, 2)
        # the set map {0,1,2} -> {0,1}: 0,1 -> 0; 2 -> 1
        f = F5
        cols = [[1, 0], [1, 0], [0, 1]]
        mat = Matrix(f, 2, 3, [cols[j][i] for i in range(2) for j in range(3)])
        hom = CoalgebraHom(kx, ky, mat)
        assert hom.is_valid()
        assert sorted(grouplikes(kx)) == sorted(grouplikes_bruteforce(kx))

    def test_contravariance_of_transpose(self):
        a = cyclic_group_algebra(F5, 2)
        b = diagonal_algebra(F5, 2)
        k1 = diagonal_algebra(F5, 1)
        chars = one_dim_characters(a)
        fmat = Matrix(F5, 2, 2, [*chars[0].values, *chars[1].values])
        f = AlgebraHom(a, b, fmat)
        assert f.is_valid()
        g = AlgebraHom(b, k1, Matrix(F5, 1, 2, [1, 0]))
        assert g.is_valid()
        gf = g.compose(f)
        assert gf.matrix.transpose() == f.matrix.transpose() @ g.matrix.transpose()
