"""JSON documents for shapes, contents and fillings, validated with jsonschema.

Input documents may carry ``"schemaVersion": 1``; every output document does.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .expansion import Expansion
from .polyring import SparsePoly
from .shapes import Filling, SkewShape

SCHEMA_VERSION = 1


class InvalidInputError(ValueError):
    """Raised for any malformed or inconsistent user input."""


_PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_VERSION = {"const": SCHEMA_VERSION}

SHAPE_SCHEMA = {
    "type": "object",
    "properties": {"schemaVersion": _VERSION, "lambda": _PARTITION, "mu": _PARTITION},
    "required": ["lambda"],
    "additionalProperties": False,
}

CONTENT_SCHEMA = {"type": "array", "items": {"type": "integer", "minimum": 0}}

FILLING_SCHEMA = {
    "type": "object",
    "properties": {
        "schemaVersion": _VERSION,
        "shape": SHAPE_SCHEMA,
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
        "m": {"type": "integer", "minimum": 1},
    },
    "required": ["shape", "rows"],
    "additionalProperties": False,
}


def _validate(doc: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise InvalidInputError(f"invalid {what}: {exc.message}") from None


def load_json_arg(value: str) -> Any:
    """Parse a flag value that is either inline JSON or a path to a JSON file."""
    text = value.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(value).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidInputError(f"cannot read {value!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON in {value!r}: {exc.msg}") from None


def shape_from_json(doc: Any) -> SkewShape:
    _validate(doc, SHAPE_SCHEMA, "shape")
    try:
        return SkewShape(tuple(doc["lambda"]), tuple(doc.get("mu", ())))
    except ValueError as exc:
        raise InvalidInputError(str(exc)) from None


def content_from_json(doc: Any) -> tuple[int, ...]:
    _validate(doc, CONTENT_SCHEMA, "content")
    return tuple(doc)


def filling_from_json(doc: Any) -> Filling:
    _validate(doc, FILLING_SCHEMA, "filling")
    shape = shape_from_json(doc["shape"])
    try:
        return Filling.from_rows(shape, doc["rows"], doc.get("m", 0))
    except ValueError as exc:
        raise InvalidInputError(str(exc)) from None


def shape_to_json(shape: SkewShape) -> dict:
    return {"lambda": list(shape.lam), "mu": list(shape.mu)}


def tableau_to_json(f: Filling) -> list[list[int]]:
    return [list(r) for r in f.rows]


def filling_to_json(f: Filling) -> dict:
    return {"schemaVersion": SCHEMA_VERSION, "shape": shape_to_json(f.shape), "rows": tableau_to_json(f), "m": f.m}


def expansion_to_json(e: Expansion) -> dict:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "basis": e.basis,
        "shape": shape_to_json(e.context.shape),
        "content": list(e.context.content),
        "coeffs": [
            {"index": i + 1, "tableau": tableau_to_json(t), "coeff": a} for i, t, a in e.terms()
        ],
    }
    if e.is_zero():
        doc["note"] = "zero element"
    return doc


def poly_to_json(p: SparsePoly) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "text": str(p),
        "terms": [
            {"monomial": [[i, j, e] for (i, j), e in m], "coeff": c} for m, c in p.sorted_terms()
        ],
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
