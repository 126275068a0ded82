"""Reading and writing configuration files.

A configuration file is a JSON object::

    {"geometry": "euclidean", "dim": 2, "points": [[0, 0], [1, 0], [0, 1]]}

Hyperbolic files carry Poincare disk coordinates and may omit ``dim``.
Coordinates are written with 17 significant digits, which round-trips
every double exactly.
"""

from __future__ import annotations

import json

import jsonschema

from .configuration import Configuration

SCHEMA = {
    "type": "object",
    "required": ["geometry", "points"],
    "properties": {
        "geometry": {"enum": ["euclidean", "hyperbolic"]},
        "dim": {"type": "integer", "minimum": 2},
        "points": {
            "type": "array",
            "minItems": 3,
            "items": {"type": "array", "minItems": 2, "items": {"type": "number"}},
        },
    },
}


class SchemaError(ValueError):
    """The file is not a well-formed configuration file."""


def _check_shape(doc):
    geometry = doc["geometry"]
    dim = doc.get("dim", 2)
    if geometry == "hyperbolic" and dim != 2:
        raise SchemaError("field 'dim': hyperbolic configurations have dim 2")
    for i, p in enumerate(doc["points"]):
        if len(p) != dim:
            raise SchemaError(f"field 'points[{i}]': expected {dim} coordinates, got {len(p)}")


def parse_config(text: str) -> Configuration:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as e:
        where = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in e.absolute_path)
        raise SchemaError(f"field '{where.lstrip('.') or '<root>'}': {e.message}") from None
    _check_shape(doc)
    # geometry-domain checks (disk membership, coincident points) raise DomainError
    return Configuration(doc["geometry"], doc["points"])


def read_config(path) -> Configuration:
    with open(path) as fh:
        return parse_config(fh.read())


def _num(x: float) -> str:
    return format(float(x), ".17g")


def dumps_config(config: Configuration) -> str:
    rows = ",\n    ".join("[" + ", ".join(_num(v) for v in p) + "]" for p in config.points)
    return (
        "{\n"
        f'  "geometry": "{config.geometry}",\n'
        f'  "dim": {config.dim},\n'
        f'  "points": [\n    {rows}\n  ]\n'
        "}\n"
    )


def write_config(path, config: Configuration) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_config(config))
