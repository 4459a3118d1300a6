"""Stable JSON rendering for reports.

Integers are written as decimal strings (JSON numbers lose precision past
2**53), fractions as ``"a/b"``, polynomials as dense coefficient lists, and
dataclass fields keep their declaration order so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction

from .polyring import IntPoly

SCHEMA_VERSION = "1"


def to_jsonable(obj):
    if obj is None or isinstance(obj, (str, bool)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, IntPoly):
        return [str(c) for c in obj.coeffs]
    if hasattr(obj, "to_json_dict"):
        return to_jsonable(obj.to_json_dict())
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, kind: str | None = None) -> str:
    """Render ``obj`` as a versioned JSON document."""
    doc = {"schema": SCHEMA_VERSION}
    if kind is not None:
        doc["kind"] = kind
    doc["result"] = to_jsonable(obj)
    return json.dumps(doc, indent=2)
