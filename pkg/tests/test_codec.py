import pytest

from findual.algebra import matrix_algebra, triangular_algebra, truncated_polynomial_algebra
from findual.coalgebra import (
    DualTower,
    canonical_inclusion,
    divided_power_coalgebra,
    dualize_algebra,
    line_dist_coalgebra,
    tower_extend,
)
from findual.codec import census_to_csv, codec_roundtrip, encode, loads, to_canonical_json
from findual.errors import SchemaMismatchError
from findual.kernel import GF, QQ, Matrix
from findual.qplane import azumaya_census
from findual.selftest import sweedler_crossed_instance
from findual.twist import grouplike_bialgebra, tensor_swap

F5 = GF(5)


def divided_power_tower():
    levels = [divided_power_coalgebra(F5, m) for m in (1, 2, 3)]
    tower = DualTower(levels[:1], [])
    for small, big in zip(levels, levels[1:]):
        tower = tower_extend(tower, big, canonical_inclusion(small, big))
    return tower


ROUND_TRIP_VALUES = [
    matrix_algebra(F5, 2),
    matrix_algebra(QQ, 2),
    triangular_algebra(F5, 3),
    truncated_polynomial_algebra(QQ, 3),
    dualize_algebra(matrix_algebra(F5, 2)),
    line_dist_coalgebra(F5, {0: 2, 1: 1}),
    Matrix.from_int_rows(F5, [[1, 2], [3, 4]]),
    Matrix.from_int_rows(QQ, [[1, 2, 3]]),
    tensor_swap(matrix_algebra(F5, 2), truncated_polynomial_algebra(F5, 2)),
    grouplike_bialgebra(F5, 2),
    divided_power_tower(),
]


@pytest.mark.parametrize("value", ROUND_TRIP_VALUES, ids=lambda v: type(v).__name__)
def test_round_trip(value):
    assert codec_roundtrip(value) == value


def test_census_round_trip():
    report = azumaya_census(2, 5)
    assert codec_roundtrip(report) == report


def test_cotwist_round_trip():
    _, _, rho, phi = sweedler_crossed_instance()
    assert codec_roundtrip(rho) == rho
    assert codec_roundtrip(phi) == phi


def test_canonical_bytes_stable():
    a = matrix_algebra(F5, 2)
    text1 = to_canonical_json(a)
    text2 = to_canonical_json(codec_roundtrip(a))
    assert text1 == text2
    assert text1.endswith("\n")


def test_rational_scalar_form():
    doc = encode(truncated_polynomial_algebra(QQ, 2))
    assert doc["unit"] == ["1/1", "0/1"]


def test_sparse_triples_sorted():
    doc = encode(matrix_algebra(F5, 2))
    assert doc["mul"] == sorted(doc["mul"], key=lambda t: t[:3])


def test_foreign_document_rejected():
    with pytest.raises(SchemaMismatchError):
        loads('{"hello": "world"}')
    with pytest.raises(SchemaMismatchError):
        loads('{"type": "algebra", "field": {"kind": "prime-field", "p": 5}}')
    with pytest.raises(SchemaMismatchError):
        loads("not json at all")


def test_malformed_indices_rejected():
    doc = encode(matrix_algebra(F5, 2))
    doc["mul"][0][0] = 99
    with pytest.raises(SchemaMismatchError):
        loads(to_canonical_json(doc))


def test_csv_emitter():
    report = azumaya_census(2, 5)
    csv = census_to_csv(report)
    lines = csv.strip().split("\n")
    assert lines[0] == "n,p,c,d,azumaya,radical_dim,factors"
    assert len(lines) == 1 + 25
    assert "2,5,1,1,1,0,4x1" in lines
