"""Canonical JSON formats for hives, tetra functions, and pairs.

Hive: {"n": 2, "values": [[0, 2, 2], [1, 2], [1]]} with row j holding the
values f(0, j) ... f(n-j, j), rows ascending in j.  Tetra function: the same
idea one level deeper, "values" indexed by z, then y, then x.  Pairs wrap
two hives under fixed keys.  Canonical serialization uses a fixed key order
and no whitespace, so equal objects produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .bijections import GluedPair, WallPair
from .hive import Hive
from .octahedron import TetraFunction


class SchemaError(ValueError):
    """Raised when a JSON document does not match the expected format."""


def _int_rows(rows: Any, what: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError(f"{what}: 'values' must be a list of lists")
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise SchemaError(f"{what}: non-integer value {v!r}")
    return tuple(tuple(r) for r in rows)


def hive_to_obj(h: Hive) -> dict:
    return {"n": h.n, "values": [list(row) for row in h.rows]}


def hive_from_obj(obj: Any) -> Hive:
    if not isinstance(obj, dict) or set(obj) != {"n", "values"}:
        raise SchemaError("hive: expected an object with keys 'n' and 'values'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError(f"hive: 'n' must be a non-negative integer, got {n!r}")
    rows = _int_rows(obj["values"], "hive")
    if len(rows) != n + 1 or any(len(r) != n - j + 1 for j, r in enumerate(rows)):
        raise SchemaError("hive: 'values' rows must have lengths n+1 .. 1")
    return Hive(rows)


def tetra_to_obj(t: TetraFunction) -> dict:
    return {"n": t.n,
            "values": [[list(row) for row in layer] for layer in t.layers]}


def tetra_from_obj(obj: Any) -> TetraFunction:
    if not isinstance(obj, dict) or set(obj) != {"n", "values"}:
        raise SchemaError("tetra: expected an object with keys 'n' and 'values'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError(f"tetra: 'n' must be a non-negative integer, got {n!r}")
    layers = obj["values"]
    if not isinstance(layers, list) or len(layers) != n + 1:
        raise SchemaError("tetra: 'values' must be a list of n+1 layers")
    rows = tuple(_int_rows(layer, f"tetra layer z={z}")
                 for z, layer in enumerate(layers))
    try:
        return TetraFunction(rows)
    except ValueError as exc:
        raise SchemaError(f"tetra: {exc}") from exc


def glued_pair_to_obj(p: GluedPair) -> dict:
    return {"f1": hive_to_obj(p.f1), "f2": hive_to_obj(p.f2)}


def glued_pair_from_obj(obj: Any) -> GluedPair:
    if not isinstance(obj, dict) or set(obj) != {"f1", "f2"}:
        raise SchemaError("glued pair: expected an object with keys 'f1' and 'f2'")
    return GluedPair(hive_from_obj(obj["f1"]), hive_from_obj(obj["f2"]))


def wall_pair_to_obj(p: WallPair) -> dict:
    return {"w1": hive_to_obj(p.w1), "w2": hive_to_obj(p.w2)}


def wall_pair_from_obj(obj: Any) -> WallPair:
    if not isinstance(obj, dict) or set(obj) != {"w1", "w2"}:
        raise SchemaError("wall pair: expected an object with keys 'w1' and 'w2'")
    return WallPair(hive_from_obj(obj["w1"]), hive_from_obj(obj["w2"]))


def dumps(obj: Any, canonical: bool = True) -> str:
    """Serialize; canonical mode is byte-stable (sorted keys, no spaces)."""
    if canonical:
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
