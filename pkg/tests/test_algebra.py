import pytest

from findual.algebra import (
    AlgebraHom,
    Character,
    FinDimAlgebra,
    Subspace,
    center,
    cyclic_group_algebra,
    diagonal_algebra,
    ideal_closure,
    matrix_algebra,
    minimal_polynomial,
    monogenic_algebra,
    one_dim_characters,
    quotient_algebra,
    radical,
    semisimple_profile,
    subspace_product,
    triangular_algebra,
    truncated_polynomial_algebra,
    validate_algebra,
)
from findual.errors import (
    CharacteristicTooSmallError,
    ImproperIdealError,
    NotAnIdealError,
    NotSplitError,
)
from findual.kernel import GF, QQ, Matrix, Poly

F5 = GF(5)


def basis_vec(field, dim, i):
    v = [field.zero()] * dim
    v[i] = field.one()
    return v


class TestValidate:
    def test_matrix_algebra_passes(self):
        rep = validate_algebra(matrix_algebra(F5, 2))
        assert rep.associative and rep.unital

    def test_perturbed_matrix_algebra_fails(self):
        m2 = matrix_algebra(F5, 2)
        # zero out E12 * E21 = E11
        mul = [[list(m2.mul[i][j]) for j in range(4)] for i in range(4)]
        mul[1][2] = []
        bad = FinDimAlgebra(F5, m2.labels, mul, m2.unit)
        rep = validate_algebra(bad)
        assert not rep.associative
        assert rep.witnesses[0][0] == "associativity"

    def test_zero_unit_fails(self):
        m2 = matrix_algebra(F5, 2)
        bad = FinDimAlgebra(F5, m2.labels, m2.mul, [F5.zero()] * 4)
        rep = validate_algebra(bad)
        assert not rep.unital

    @pytest.mark.parametrize("alg", [
        matrix_algebra(F5, 3),
        triangular_algebra(F5, 3),
        truncated_polynomial_algebra(QQ, 4),
        cyclic_group_algebra(F5, 4),
        diagonal_algebra(QQ, 3),
        monogenic_algebra(F5, Poly.from_ints(F5, [-2, 0, 1])),
    ])
    def test_named_constructors_valid(self, alg):
        assert validate_algebra(alg).ok


class TestIdealClosure:
    def test_e12_generates_m2(self):
        m2 = matrix_algebra(F5, 2)
        sp = ideal_closure(m2, [basis_vec(F5, 4, 1)])
        assert sp.dim == 4

    def test_eps_in_dual_numbers(self):
        a = truncated_polynomial_algebra(F5, 2)
        sp = ideal_closure(a, [basis_vec(F5, 2, 1)])
        assert sp.dim == 1
        assert sp.contains([0, 1])

    def test_monotone_idempotent(self):
        t2 = triangular_algebra(F5, 2)
        sp = ideal_closure(t2, [basis_vec(F5, 3, 1)])
        again = ideal_closure(t2, [list(r) for r in sp.rows])
        assert again.rows == sp.rows
        # monotone: closing a larger generating set contains the smaller closure
        bigger = ideal_closure(t2, [basis_vec(F5, 3, 1), basis_vec(F5, 3, 0)])
        assert bigger.contains_subspace(sp)


class TestQuotient:
    def test_t3_by_t2(self):
        a = truncated_polynomial_algebra(F5, 3)
        ideal = ideal_closure(a, [basis_vec(F5, 3, 2)])
        q, proj = quotient_algebra(a, ideal)
        assert q.mul == truncated_polynomial_algebra(F5, 2).mul
        assert q.unit == truncated_polynomial_algebra(F5, 2).unit
        assert proj.is_valid()

    def test_t2_by_radical_is_k_times_k(self):
        t2 = triangular_algebra(F5, 2)
        rad = radical(t2)
        q, proj = quotient_algebra(t2, rad)
        assert q.dim == 2
        assert q.mul == diagonal_algebra(F5, 2).mul
        assert proj.is_valid()

    def test_improper_ideal(self):
        a = truncated_polynomial_algebra(F5, 2)
        with pytest.raises(ImproperIdealError):
            quotient_algebra(a, ideal_closure(a, [basis_vec(F5, 2, 0)]))

    def test_not_an_ideal(self):
        m2 = matrix_algebra(F5, 2)
        with pytest.raises(NotAnIdealError):
            quotient_algebra(m2, Subspace(m2, [basis_vec(F5, 4, 1)]))


class TestRadical:
    def test_m2_simple(self):
        assert radical(matrix_algebra(F5, 2)).dim == 0

    def test_dual_numbers(self):
        rad = radical(truncated_polynomial_algebra(F5, 2))
        assert rad.dim == 1
        assert rad.contains([0, 1])

    def test_triangular(self):
        rad = radical(triangular_algebra(F5, 2))
        assert rad.dim == 1
        assert rad.contains(basis_vec(F5, 3, 1))  # E12

    def test_characteristic_gate(self):
        with pytest.raises(CharacteristicTooSmallError):
            radical(matrix_algebra(GF(3), 2))

    def test_radical_nilpotent_and_quotient_semisimple(self):
        for alg in [triangular_algebra(GF(7), 3), truncated_polynomial_algebra(QQ, 4)]:
            rad = radical(alg)
            power = rad
            for _ in range(alg.dim):
                if power.dim == 0:
                    break
                power = subspace_product(alg, power, rad)
            assert power.dim == 0
            if rad.dim:
                q, _ = quotient_algebra(alg, rad)
                assert radical(q).dim == 0


class TestCharacters:
    def test_m2_has_none(self):
        assert one_dim_characters(matrix_algebra(F5, 2)) == []

    def test_group_algebra_z2(self):
        chars = one_dim_characters(cyclic_group_algebra(F5, 2, var="t"))
        assert [c.values for c in chars] == [(1, 1), (1, 4)]

    def test_dual_numbers(self):
        chars = one_dim_characters(truncated_polynomial_algebra(F5, 2))
        assert [c.values for c in chars] == [(1, 0)]

    def test_diagonal(self):
        chars = one_dim_characters(diagonal_algebra(F5, 3))
        assert len(chars) == 3
        for c in chars:
            assert c.is_valid()

    def test_nonsplit_field_factor_gf(self):
        # GF(25) = GF(5)[t]/(t^2 - 2) has no GF(5)-characters
        a = monogenic_algebra(F5, Poly.from_ints(F5, [-2, 0, 1]))
        assert one_dim_characters(a) == []

    def test_nonsplit_over_q_raises(self):
        a = monogenic_algebra(QQ, Poly.from_ints(QQ, [-2, 0, 1]))
        with pytest.raises(NotSplitError):
            one_dim_characters(a)

    def test_split_over_q(self):
        a = monogenic_algebra(QQ, Poly.from_ints(QQ, [2, -3, 1]))  # (t-1)(t-2)
        chars = one_dim_characters(a)
        assert sorted(c.values[1] for c in chars) == [1, 2]

    def test_characters_kill_radical_and_commutators(self):
        for alg in [triangular_algebra(F5, 2), triangular_algebra(GF(7), 3)]:
            f = alg.field
            rad = radical(alg)
            chars = one_dim_characters(alg)
            assert chars
            for ch in chars:
                for r in rad.rows:
                    assert ch.evaluate(r) == f.zero()
                for i in range(alg.dim):
                    for j in range(alg.dim):
                        ij = ch.evaluate(alg.basis_product(i, j))
                        ji = ch.evaluate(alg.basis_product(j, i))
                        assert ij == ji


class TestProfile:
    def test_m2(self):
        assert semisimple_profile(matrix_algebra(F5, 2)) == (0, ((4, 1),))

    def test_triangular(self):
        assert semisimple_profile(triangular_algebra(F5, 2)) == (1, ((1, 1), (1, 1)))

    def test_field_extension_factor(self):
        a = monogenic_algebra(F5, Poly.from_ints(F5, [-2, 0, 1]))
        assert semisimple_profile(a) == (0, ((2, 2),))

    def test_mixed_factors(self):
        # k[t]/((t^2 - 2)(t - 1)): one rational point and one GF(25) factor
        f = Poly.from_ints(F5, [-2, 0, 1]) * Poly.from_ints(F5, [-1, 1])
        a = monogenic_algebra(F5, f)
        assert semisimple_profile(a) == (0, ((1, 1), (2, 2)))

    def test_dims_add_up(self):
        for alg in [
            matrix_algebra(F5, 2),
            triangular_algebra(GF(7), 3),
            diagonal_algebra(F5, 4),
            truncated_polynomial_algebra(QQ, 3),
            cyclic_group_algebra(GF(7), 6),
        ]:
            prof = semisimple_profile(alg)
            assert prof.radical_dim + sum(d for d, _ in prof.factors) == alg.dim

    def test_m3(self):
        assert semisimple_profile(matrix_algebra(GF(11), 3)) == (0, ((9, 1),))


class TestHoms:
    def test_composition_valid(self):
        t2 = triangular_algebra(F5, 2)
        rad = radical(t2)
        q, proj = quotient_algebra(t2, rad)
        chars = one_dim_characters(q)
        row = Matrix(F5, 1, q.dim, chars[0].values)
        k_alg = diagonal_algebra(F5, 1)
        to_k = AlgebraHom(q, k_alg, row)
        assert to_k.is_valid()
        comp = to_k.compose(proj)
        assert comp.is_valid()

    def test_minimal_polynomial(self):
        a = cyclic_group_algebra(F5, 4, var="g")
        mu = minimal_polynomial(a, basis_vec(F5, 4, 1))
        assert mu == Poly.from_ints(F5, [-1, 0, 0, 0, 1])

    def test_center_of_matrix_algebra(self):
        assert center(matrix_algebra(F5, 3)).dim == 1
        assert center(diagonal_algebra(F5, 3)).dim == 3
