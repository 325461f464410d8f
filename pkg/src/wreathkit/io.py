"""JSON input documents: schemas, parsing and construction of the algebraic objects."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import jsonschema

from .beck import BeckModule, make_beck_module
from .errors import SchemaError
from .extensions import Extension, extension_from_maps
from .groups import FiniteGroup, cyclic, make_group
from .lie.algebra import LieAlgebra, LieExtension, LinearSection, make_lie, make_lie_extension, make_section
from .lie.linalg import fmt

SCHEMA_VERSION = "1"

_int = {"type": "integer", "minimum": 0}
_rational = {
    "oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]
}

GROUP = {
    "oneOf": [
        {"type": "string", "pattern": r"^Z[1-9]\d*$"},
        {
            "type": "object",
            "properties": {
                "name": {"type": "string"},
                "table": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _int}},
                "permutations": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _int}},
            },
            "oneOf": [{"type": "object", "required": ["table"]}, {"type": "object", "required": ["permutations"]}],
        },
    ]
}

EXTENSION = {
    "type": "object",
    "properties": {
        "A": GROUP,
        "G": GROUP,
        "B": GROUP,
        "k": {"type": "array", "items": _int},
        "f": {"type": "array", "items": _int},
    },
    "required": ["A", "G", "B", "k", "f"],
}

BECK = {
    "type": "object",
    "properties": {
        "B": GROUP,
        "M": GROUP,
        "rho": {"type": "array", "items": {"type": "array", "items": _int}},
    },
    "required": ["B", "M", "rho"],
}

GAMMA = {
    "oneOf": [
        {"type": "array", "items": _int},
        {
            "type": "object",
            "properties": {"target": GROUP, "map": {"type": "array", "items": _int}},
            "required": ["map"],
        },
    ]
}

_matrix = {"type": "array", "items": {"type": "array", "items": _rational}}

LIE = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "dim": _int,
        "brackets": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_int, _int, {"type": "array", "items": _rational}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["dim"],
}

LIE_EXTENSION = {
    "type": "object",
    "properties": {"A": LIE, "G": LIE, "B": LIE, "k": _matrix, "f": _matrix},
    "required": ["A", "G", "B", "k", "f"],
}

SECTION = {
    "oneOf": [
        {"type": "integer", "minimum": 0},
        {"type": "array", "items": _int},
        {"type": "object", "properties": {"map": {"type": "array", "items": _int}}, "required": ["map"]},
    ]
}

LIE_SECTION = {
    "oneOf": [_matrix, {"type": "object", "properties": {"matrix": _matrix}, "required": ["matrix"]}]
}

SCHEMAS = {
    "group": GROUP,
    "extension": EXTENSION,
    "beck": BECK,
    "gamma": GAMMA,
    "lie": LIE,
    "lie-extension": LIE_EXTENSION,
    "section": SECTION,
    "lie-section": LIE_SECTION,
}


@dataclass(frozen=True)
class InputDocument:
    kind: str
    data: Any
    source: str
    version: str = SCHEMA_VERSION


def _path_text(path) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def validate(data: Any, kind: str, source: str = "<inline>") -> InputDocument:
    schema = SCHEMAS[kind]
    validator = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(validator.iter_errors(data))
    if err is not None:
        # oneOf failures hide the real problem in their context; take the deepest one
        while err.context:
            err = jsonschema.exceptions.best_match(err.context)
        where = _path_text(err.absolute_path)
        missing = re.match(r"'([^']+)' is a required property", err.message)
        if missing:
            where = f"{where}.{missing.group(1)}" if where != "$" else f"$.{missing.group(1)}"
        raise SchemaError(f"{source}: {kind} document invalid at {where}: {err.message}", witness=where)
    return InputDocument(kind, data, source)


def parse_text(text: str, kind: str, source: str = "<inline>") -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}: not valid JSON ({exc.msg} at line {exc.lineno})", witness="$") from exc
    return validate(data, kind, source)


def parse_input(path: str | Path, kind: str) -> InputDocument:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise SchemaError(f"{p}: cannot read ({exc.strerror})", witness=str(p)) from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SchemaError(f"{p}: not UTF-8 text", witness="$") from exc
    return parse_text(text, kind, str(p))


def build_group(spec, name: str = "G") -> FiniteGroup:
    if isinstance(spec, str):
        return cyclic(int(spec[1:]))
    name = spec.get("name", name)
    if "table" in spec:
        return make_group(table=spec["table"], name=name)
    return make_group(permutations=spec["permutations"], name=name)


def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, "table": [list(row) for row in G.table]}


def build_extension(doc: InputDocument | dict) -> Extension:
    d = doc.data if isinstance(doc, InputDocument) else doc
    A, G, B = (build_group(d[x], x) for x in ("A", "G", "B"))
    return extension_from_maps(A, G, B, d["k"], d["f"])


def extension_to_json(E: Extension) -> dict:
    return {
        "A": group_to_json(E.A),
        "G": group_to_json(E.G),
        "B": group_to_json(E.B),
        "k": list(E.k.map),
        "f": list(E.f.map),
    }


def build_beck(doc: InputDocument | dict) -> BeckModule:
    d = doc.data if isinstance(doc, InputDocument) else doc
    return make_beck_module(build_group(d["B"], "B"), build_group(d["M"], "M"), d["rho"])


def beck_to_json(mod: BeckModule) -> dict:
    return {"B": group_to_json(mod.B), "M": group_to_json(mod.M), "rho": [list(r) for r in mod.rho]}


def build_lie(d: dict) -> LieAlgebra:
    return make_lie(d["dim"], [tuple(b) for b in d.get("brackets", [])], d.get("name", "L"))


def lie_to_json(L: LieAlgebra) -> dict:
    brackets = [
        [i, j, [fmt(x) for x in L.c[i][j]]]
        for i in range(L.dim)
        for j in range(i + 1, L.dim)
        if any(L.c[i][j])
    ]
    return {"name": L.name, "dim": L.dim, "brackets": brackets}


def build_lie_extension(doc: InputDocument | dict) -> LieExtension:
    d = doc.data if isinstance(doc, InputDocument) else doc
    A, G, B = (build_lie(d[x]) for x in ("A", "G", "B"))
    return make_lie_extension(A, G, B, d["k"], d["f"])


def lie_extension_to_json(E: LieExtension) -> dict:
    return {
        "A": lie_to_json(E.A),
        "G": lie_to_json(E.G),
        "B": lie_to_json(E.B),
        "k": [[fmt(x) for x in row] for row in E.k.matrix],
        "f": [[fmt(x) for x in row] for row in E.f.matrix],
    }


def build_lie_section(E: LieExtension, doc: InputDocument | Any) -> LinearSection:
    d = doc.data if isinstance(doc, InputDocument) else doc
    return make_section(E, d["matrix"] if isinstance(d, dict) else d)
