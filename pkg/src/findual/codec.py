"""Canonical JSON encoding for every domain value.

Encodings are byte-deterministic: sparse triples are emitted in sorted order,
objects carry a "type" tag, and `to_canonical_json` fixes key order and
separators.  Decoding foreign or malformed documents raises
SchemaMismatchError rather than crashing.
"""

from __future__ import annotations

import json

from .algebra import FinDimAlgebra, SemisimpleProfile
from .coalgebra import CoalgebraHom, DualTower, FinDimCoalgebra
from .errors import SchemaMismatchError
from .kernel import Matrix, field_from_json, field_to_json
from .kernel.fields import Field
from .qplane import CensusReport, FiberRecord
from .twist import Bialgebra, CotwistingMap, TwistingMap

SCHEMA_VERSION = 1


def _scalars_out(field: Field, values):
    return [field.scalar_to_json(v) for v in values]


def _scalars_in(field: Field, doc, expected_len=None):
    if not isinstance(doc, list):
        raise SchemaMismatchError("expected a list of scalars")
    if expected_len is not None and len(doc) != expected_len:
        raise SchemaMismatchError(f"expected {expected_len} scalars, got {len(doc)}")
    try:
        return [field.scalar_from_json(v) for v in doc]
    except Exception as exc:
        raise SchemaMismatchError(f"bad scalar: {exc}") from exc


def _require(doc, key, types=None):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaMismatchError(f"missing key {key!r}")
    val = doc[key]
    if types is not None and not isinstance(val, types):
        raise SchemaMismatchError(f"key {key!r} has wrong type")
    return val


def encode(value):
    if isinstance(value, FinDimAlgebra):
        f = value.field
        triples = []
        for i in range(value.dim):
            for j in range(value.dim):
                for r, c in value.mul[i][j]:
                    triples.append([i, j, r, f.scalar_to_json(c)])
        return {
            "type": "algebra",
            "field": field_to_json(f),
            "dim": value.dim,
            "labels": list(value.labels),
            "mul": triples,
            "unit": _scalars_out(f, value.unit),
        }
    if isinstance(value, FinDimCoalgebra):
        f = value.field
        triples = []
        for r in range(value.dim):
            for i, j, c in value.comul[r]:
                triples.append([r, i, j, f.scalar_to_json(c)])
        return {
            "type": "coalgebra",
            "field": field_to_json(f),
            "dim": value.dim,
            "labels": list(value.labels),
            "comul": triples,
            "counit": _scalars_out(f, value.counit),
        }
    if isinstance(value, Matrix):
        return {
            "type": "matrix",
            "field": field_to_json(value.field),
            "rows": value.rows,
            "cols": value.cols,
            "entries": _scalars_out(value.field, value.entries),
        }
    if isinstance(value, TwistingMap):
        return {
            "type": "twisting-map",
            "a": encode(value.a),
            "b": encode(value.b),
            "matrix": _scalars_out(value.a.field, value.matrix.entries),
        }
    if isinstance(value, CotwistingMap):
        return {
            "type": "cotwisting-map",
            "c": encode(value.c),
            "d": encode(value.d),
            "matrix": _scalars_out(value.c.field, value.matrix.entries),
        }
    if isinstance(value, Bialgebra):
        alg_doc = encode(value.alg)
        coalg_doc = encode(value.coalg)
        return {
            "type": "bialgebra",
            "field": alg_doc["field"],
            "dim": value.dim,
            "labels": list(value.labels),
            "mul": alg_doc["mul"],
            "unit": alg_doc["unit"],
            "comul": coalg_doc["comul"],
            "counit": coalg_doc["counit"],
            "antipode": (
                _scalars_out(value.field, value.antipode.entries)
                if value.antipode is not None
                else None
            ),
        }
    if isinstance(value, DualTower):
        return {
            "type": "dual-tower",
            "levels": [encode(lv) for lv in value.levels],
            "inclusions": [
                _scalars_out(inc.source.field, inc.matrix.entries)
                for inc in value.inclusions
            ],
        }
    if isinstance(value, CensusReport):
        return {
            "type": "census-report",
            "n": value.n,
            "p": value.p,
            "fibers": [
                {
                    "c": int(f.c),
                    "d": int(f.d),
                    "azumaya": f.azumaya,
                    "profile": {
                        "radical_dim": f.profile.radical_dim,
                        "factors": [list(pair) for pair in f.profile.factors],
                    },
                }
                for f in value.fibers
            ],
            "aggregate": dict(value.aggregate),
        }
    raise SchemaMismatchError(f"cannot encode value of type {type(value).__name__}")


def decode(doc):
    tag = _require(doc, "type", str)
    if tag == "algebra":
        return _decode_algebra(doc)
    if tag == "coalgebra":
        return _decode_coalgebra(doc)
    if tag == "matrix":
        return _decode_matrix(doc)
    if tag == "twisting-map":
        a = _decode_algebra(_require(doc, "a", dict))
        b = _decode_algebra(_require(doc, "b", dict))
        n = a.dim * b.dim
        ent = _scalars_in(a.field, _require(doc, "matrix", list), n * n)
        return TwistingMap(a, b, Matrix(a.field, n, n, ent))
    if tag == "cotwisting-map":
        c = _decode_coalgebra(_require(doc, "c", dict))
        d = _decode_coalgebra(_require(doc, "d", dict))
        n = c.dim * d.dim
        ent = _scalars_in(c.field, _require(doc, "matrix", list), n * n)
        return CotwistingMap(c, d, Matrix(c.field, n, n, ent))
    if tag == "bialgebra":
        field = field_from_json(_require(doc, "field", dict))
        dim = _require(doc, "dim", int)
        labels = _require(doc, "labels", list)
        alg = _decode_algebra(
            {"type": "algebra", "field": doc["field"], "dim": dim,
             "labels": labels, "mul": doc.get("mul"), "unit": doc.get("unit")}
        )
        coalg = _decode_coalgebra(
            {"type": "coalgebra", "field": doc["field"], "dim": dim,
             "labels": labels, "comul": doc.get("comul"), "counit": doc.get("counit")}
        )
        anti = doc.get("antipode")
        antipode = None
        if anti is not None:
            antipode = Matrix(field, dim, dim, _scalars_in(field, anti, dim * dim))
        return Bialgebra(alg, coalg, antipode)
    if tag == "dual-tower":
        levels = [_decode_coalgebra(lv) for lv in _require(doc, "levels", list)]
        incs_raw = _require(doc, "inclusions", list)
        if len(incs_raw) != max(len(levels) - 1, 0):
            raise SchemaMismatchError("wrong number of inclusions")
        inclusions = []
        for k, ent in enumerate(incs_raw):
            small, big = levels[k], levels[k + 1]
            vals = _scalars_in(small.field, ent, big.dim * small.dim)
            inclusions.append(
                CoalgebraHom(small, big, Matrix(small.field, big.dim, small.dim, vals))
            )
        return DualTower(levels, inclusions)
    if tag == "census-report":
        n = _require(doc, "n", int)
        p = _require(doc, "p", int)
        fibers = []
        for fd in _require(doc, "fibers", list):
            prof = _require(fd, "profile", dict)
            fibers.append(
                FiberRecord(
                    _require(fd, "c", int),
                    _require(fd, "d", int),
                    _require(fd, "azumaya", bool),
                    SemisimpleProfile(
                        _require(prof, "radical_dim", int),
                        tuple(tuple(pair) for pair in _require(prof, "factors", list)),
                    ),
                )
            )
        return CensusReport(n, p, tuple(fibers), dict(_require(doc, "aggregate", dict)))
    raise SchemaMismatchError(f"unknown document type {tag!r}")


def _decode_algebra(doc) -> FinDimAlgebra:
    if _require(doc, "type", str) != "algebra":
        raise SchemaMismatchError("expected an algebra document")
    field = field_from_json(_require(doc, "field", dict))
    dim = _require(doc, "dim", int)
    labels = _require(doc, "labels", list)
    if len(labels) != dim:
        raise SchemaMismatchError("label count does not match dim")
    mul = [[[] for _ in range(dim)] for _ in range(dim)]
    for triple in _require(doc, "mul", list):
        if not (isinstance(triple, list) and len(triple) == 4):
            raise SchemaMismatchError("mul entries must be [i, j, r, scalar]")
        i, j, r, c = triple
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, r)):
            raise SchemaMismatchError("mul index out of range")
        mul[i][j].append((r, field.scalar_from_json(c)))
    unit = _scalars_in(field, _require(doc, "unit", list), dim)
    return FinDimAlgebra(field, labels, mul, unit)


def _decode_coalgebra(doc) -> FinDimCoalgebra:
    if _require(doc, "type", str) != "coalgebra":
        raise SchemaMismatchError("expected a coalgebra document")
    field = field_from_json(_require(doc, "field", dict))
    dim = _require(doc, "dim", int)
    labels = _require(doc, "labels", list)
    if len(labels) != dim:
        raise SchemaMismatchError("label count does not match dim")
    comul = [[] for _ in range(dim)]
    for triple in _require(doc, "comul", list):
        if not (isinstance(triple, list) and len(triple) == 4):
            raise SchemaMismatchError("comul entries must be [r, i, j, scalar]")
        r, i, j, c = triple
        if not all(isinstance(x, int) and 0 <= x < dim for x in (r, i, j)):
            raise SchemaMismatchError("comul index out of range")
        comul[r].append((i, j, field.scalar_from_json(c)))
    counit = _scalars_in(field, _require(doc, "counit", list), dim)
    return FinDimCoalgebra(field, labels, comul, counit)


def _decode_matrix(doc) -> Matrix:
    field = field_from_json(_require(doc, "field", dict))
    rows = _require(doc, "rows", int)
    cols = _require(doc, "cols", int)
    ent = _scalars_in(field, _require(doc, "entries", list), rows * cols)
    return Matrix(field, rows, cols, ent)


def to_canonical_json(value) -> str:
    """Byte-deterministic serialization (sorted keys, fixed separators)."""
    doc = value if isinstance(value, dict) else encode(value)
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaMismatchError(f"malformed JSON: {exc}") from exc
    return decode(doc)


def codec_roundtrip(value):
    """decode(encode(v)); equality with v is the round-trip contract."""
    return decode(json.loads(to_canonical_json(value)))


def census_to_csv(report: CensusReport) -> str:
    """One row per fiber for external plotting."""
    lines = ["n,p,c,d,azumaya,radical_dim,factors"]
    for f in report.fibers:
        factors = ";".join(f"{d}x{cd}" for d, cd in f.profile.factors)
        lines.append(
            f"{report.n},{report.p},{int(f.c)},{int(f.d)},"
            f"{int(f.azumaya)},{f.profile.radical_dim},{factors}"
        )
    return "\n".join(lines) + "\n"
