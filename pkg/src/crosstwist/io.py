"""Bit-exact JSON interchange for every domain value.

A document carries a format version, a field declaration, and a named map of
objects.  Scalars are canonical strings: ``a/b`` in lowest terms with positive
denominator over the rationals (zero is ``0/1``), bare integers below p over
GF(p).  Serialization sorts keys and is byte-deterministic, so golden-file
comparisons are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any, Union

from .algebra import Algebra, PointedSpace
from .corpus import GaugeTransformation, QuasiBialgebra, RightModuleAlgebra
from .crossed import CrossedData
from .fields import Field, FieldError, PrimeField, Rationals, Scalar
from .linmap import LinMap, ShapeError
from .report import AxiomReport
from .twist import TwistPair

FORMAT_VERSION = "1"

DomainObject = Union[
    Algebra,
    PointedSpace,
    LinMap,
    CrossedData,
    TwistPair,
    QuasiBialgebra,
    GaugeTransformation,
    RightModuleAlgebra,
]


class DocumentError(ValueError):
    """Parse or validation failure, carrying the path of the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class SpecDocument:
    field: Field
    objects: dict[str, DomainObject] = dc_field(default_factory=dict)
    format_version: str = FORMAT_VERSION


# ---------------------------------------------------------------------------
# encoding


def _encode_scalar(field: Field, x: Scalar) -> str:
    return field.format(x)


def _encode_vector(field: Field, v) -> list[str]:
    return [field.format(x) for x in v]


def _encode_linmap(field: Field, f: LinMap) -> dict:
    return {
        "domain_dims": list(f.domain_dims),
        "codomain_dims": list(f.codomain_dims),
        "matrix": [[field.format(x) for x in row] for row in f.matrix],
    }


def _encode_object(field: Field, obj: DomainObject) -> dict:
    if isinstance(obj, Algebra):
        return {
            "type": "algebra",
            "dim": obj.dim,
            "mult": _encode_linmap(field, obj.mult),
            "unit": _encode_vector(field, obj.unit),
            "label": obj.label,
        }
    if isinstance(obj, PointedSpace):
        return {
            "type": "pointed_space",
            "dim": obj.dim,
            "point": _encode_vector(field, obj.point),
            "label": obj.label,
        }
    if isinstance(obj, LinMap):
        return {"type": "linmap", **_encode_linmap(field, obj)}
    if isinstance(obj, CrossedData):
        return {
            "type": "crossed_data",
            "algebra": _encode_object(field, obj.a),
            "space": _encode_object(field, obj.v),
            "r": _encode_linmap(field, obj.r),
            "sigma": _encode_linmap(field, obj.sigma),
            "label": obj.label,
        }
    if isinstance(obj, TwistPair):
        return {
            "type": "twist_pair",
            "theta": _encode_linmap(field, obj.theta),
            "gamma": _encode_linmap(field, obj.gamma),
        }
    if isinstance(obj, QuasiBialgebra):
        return {
            "type": "quasi_bialgebra",
            "algebra": _encode_object(field, obj.algebra),
            "comult": _encode_linmap(field, obj.comult),
            "counit": _encode_linmap(field, obj.counit),
            "associator": _encode_vector(field, obj.associator),
            "associator_inverse": _encode_vector(field, obj.associator_inverse),
            "label": obj.label,
        }
    if isinstance(obj, GaugeTransformation):
        return {
            "type": "gauge_transformation",
            "f": _encode_vector(field, obj.f),
            "f_inverse": _encode_vector(field, obj.f_inverse),
        }
    if isinstance(obj, RightModuleAlgebra):
        return {
            "type": "right_module_algebra",
            "dim": obj.dim,
            "mult": _encode_linmap(field, obj.mult),
            "unit": _encode_vector(field, obj.unit),
            "action": _encode_linmap(field, obj.action),
            "label": obj.label,
        }
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def _encode_field(field: Field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "rationals"}
    if isinstance(field, PrimeField):
        return {"kind": "prime_field", "p": field.p}
    raise TypeError(f"unknown field {field!r}")


def serialize(doc: SpecDocument) -> str:
    payload = {
        "format_version": doc.format_version,
        "field": _encode_field(doc.field),
        "objects": {
            name: _encode_object(doc.field, obj) for name, obj in doc.objects.items()
        },
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_to_json(report: AxiomReport) -> str:
    payload = {
        "checks": [
            {
                "law_name": c.law,
                "passed": c.passed,
                "first_counterexample": (
                    list(c.first_counterexample) if c.first_counterexample is not None else None
                ),
                "detail": c.detail,
            }
            for c in report.checks
        ]
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# decoding


def _expect(raw: Any, kind: type, path: str) -> Any:
    if not isinstance(raw, kind) or (kind is int and isinstance(raw, bool)):
        raise DocumentError(path, f"expected {kind.__name__}, got {type(raw).__name__}")
    return raw


def _get(raw: dict, key: str, kind: type, path: str) -> Any:
    if key not in raw:
        raise DocumentError(f"{path}.{key}", "missing field")
    return _expect(raw[key], kind, f"{path}.{key}")


def _decode_scalar(field: Field, raw: Any, path: str) -> Scalar:
    text = _expect(raw, str, path)
    try:
        return field.parse(text)
    except FieldError as exc:
        raise DocumentError(path, str(exc)) from exc


def _decode_vector(field: Field, raw: Any, path: str) -> tuple[Scalar, ...]:
    items = _expect(raw, list, path)
    return tuple(_decode_scalar(field, x, f"{path}[{i}]") for i, x in enumerate(items))


def _decode_dims(raw: Any, path: str) -> tuple[int, ...]:
    items = _expect(raw, list, path)
    dims = []
    for i, x in enumerate(items):
        _expect(x, int, f"{path}[{i}]")
        if x <= 0:
            raise DocumentError(f"{path}[{i}]", f"dimension must be positive, got {x}")
        dims.append(x)
    if not dims:
        raise DocumentError(path, "at least one tensor factor is required")
    return tuple(dims)


def _decode_linmap(field: Field, raw: Any, path: str) -> LinMap:
    raw = _expect(raw, dict, path)
    domain_dims = _decode_dims(raw.get("domain_dims"), f"{path}.domain_dims")
    codomain_dims = _decode_dims(raw.get("codomain_dims"), f"{path}.codomain_dims")
    rows_raw = _get(raw, "matrix", list, path)
    dt = 1
    for d in domain_dims:
        dt *= d
    ct = 1
    for d in codomain_dims:
        ct *= d
    if len(rows_raw) != ct:
        raise DocumentError(f"{path}.matrix", f"expected {ct} rows, got {len(rows_raw)}")
    rows = []
    for i, row_raw in enumerate(rows_raw):
        row = _expect(row_raw, list, f"{path}.matrix[{i}]")
        if len(row) != dt:
            raise DocumentError(
                f"{path}.matrix[{i}]", f"row length {len(row)} != domain total {dt}"
            )
        rows.append(
            tuple(
                _decode_scalar(field, x, f"{path}.matrix[{i}][{j}]")
                for j, x in enumerate(row)
            )
        )
    return LinMap(field, domain_dims, codomain_dims, tuple(rows))


def _decode_algebra(field: Field, raw: dict, path: str) -> Algebra:
    dim = _get(raw, "dim", int, path)
    mult = _decode_linmap(field, raw.get("mult"), f"{path}.mult")
    unit = _decode_vector(field, raw.get("unit"), f"{path}.unit")
    label = raw.get("label", "")
    try:
        return Algebra(dim, mult, unit, label=_expect(label, str, f"{path}.label"))
    except ShapeError as exc:
        raise DocumentError(path, str(exc)) from exc


def _decode_pointed_space(field: Field, raw: dict, path: str) -> PointedSpace:
    dim = _get(raw, "dim", int, path)
    point = _decode_vector(field, raw.get("point"), f"{path}.point")
    label = _expect(raw.get("label", ""), str, f"{path}.label")
    if all(x == field.zero() for x in point):
        raise DocumentError(f"{path}.point", "distinguished point must be nonzero")
    try:
        return PointedSpace(dim, point, label=label)
    except ShapeError as exc:
        raise DocumentError(path, str(exc)) from exc


def _decode_object(field: Field, raw: Any, path: str) -> DomainObject:
    raw = _expect(raw, dict, path)
    kind = _get(raw, "type", str, path)
    try:
        if kind == "algebra":
            return _decode_algebra(field, raw, path)
        if kind == "pointed_space":
            return _decode_pointed_space(field, raw, path)
        if kind == "linmap":
            return _decode_linmap(field, raw, path)
        if kind == "crossed_data":
            return CrossedData(
                a=_decode_algebra(field, _get(raw, "algebra", dict, path), f"{path}.algebra"),
                v=_decode_pointed_space(field, _get(raw, "space", dict, path), f"{path}.space"),
                r=_decode_linmap(field, raw.get("r"), f"{path}.r"),
                sigma=_decode_linmap(field, raw.get("sigma"), f"{path}.sigma"),
                label=_expect(raw.get("label", ""), str, f"{path}.label"),
            )
        if kind == "twist_pair":
            return TwistPair(
                theta=_decode_linmap(field, raw.get("theta"), f"{path}.theta"),
                gamma=_decode_linmap(field, raw.get("gamma"), f"{path}.gamma"),
            )
        if kind == "quasi_bialgebra":
            return QuasiBialgebra(
                algebra=_decode_algebra(field, _get(raw, "algebra", dict, path), f"{path}.algebra"),
                comult=_decode_linmap(field, raw.get("comult"), f"{path}.comult"),
                counit=_decode_linmap(field, raw.get("counit"), f"{path}.counit"),
                associator=_decode_vector(field, raw.get("associator"), f"{path}.associator"),
                associator_inverse=_decode_vector(
                    field, raw.get("associator_inverse"), f"{path}.associator_inverse"
                ),
                label=_expect(raw.get("label", ""), str, f"{path}.label"),
            )
        if kind == "gauge_transformation":
            return GaugeTransformation(
                f=_decode_vector(field, raw.get("f"), f"{path}.f"),
                f_inverse=_decode_vector(field, raw.get("f_inverse"), f"{path}.f_inverse"),
            )
        if kind == "right_module_algebra":
            return RightModuleAlgebra(
                dim=_get(raw, "dim", int, path),
                mult=_decode_linmap(field, raw.get("mult"), f"{path}.mult"),
                unit=_decode_vector(field, raw.get("unit"), f"{path}.unit"),
                action=_decode_linmap(field, raw.get("action"), f"{path}.action"),
                label=_expect(raw.get("label", ""), str, f"{path}.label"),
            )
    except ShapeError as exc:
        raise DocumentError(path, str(exc)) from exc
    raise DocumentError(f"{path}.type", f"unknown object type {kind!r}")


def _decode_field(raw: Any, path: str) -> Field:
    raw = _expect(raw, dict, path)
    kind = _get(raw, "kind", str, path)
    if kind == "rationals":
        return Rationals()
    if kind == "prime_field":
        p = _get(raw, "p", int, path)
        try:
            return PrimeField(p)
        except FieldError as exc:
            raise DocumentError(f"{path}.p", str(exc)) from exc
    raise DocumentError(f"{path}.kind", f"unknown field kind {kind!r}")


def parse(text: str) -> SpecDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"not valid JSON: {exc}") from exc
    raw = _expect(raw, dict, "$")
    version = _get(raw, "format_version", str, "$")
    if version != FORMAT_VERSION:
        raise DocumentError("$.format_version", f"unsupported format version {version!r}")
    field = _decode_field(raw.get("field"), "$.field")
    objects_raw = _get(raw, "objects", dict, "$")
    objects = {}
    for name in objects_raw:
        objects[name] = _decode_object(field, objects_raw[name], f"$.objects.{name}")
    return SpecDocument(field=field, objects=objects, format_version=version)
