"""JSON file format for frames, operator frames and vectors.

Every complex scalar is written as a two-element ``[re, im]`` array.  Floats
are rendered with ``repr``, the shortest decimal string that parses back to
the same double, so ``load(dump(obj))`` is bit-identical.

Example::

    {
      "schema_version": 1,
      "kind": "frame",
      "dim": 2,
      "data": [
        [[1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [1.0, 0.0]]
      ]
    }

Operator frames carry ``dim_h``, ``dim_k``, ``data`` of shape
``count x dim_h x dim_k x 2`` and an optional ``index_labels`` list.  Unknown
fields are rejected.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError
from .frames import Frame
from .tensor import OperatorFrame

SCHEMA_VERSION = 1

_FIELDS = {
    "frame": ({"schema_version", "kind", "dim", "data"}, set()),
    "operator_frame": ({"schema_version", "kind", "dim_h", "dim_k", "data"}, {"index_labels"}),
    "vector": ({"schema_version", "kind", "dim", "data"}, set()),
}


def _scalar(z: complex) -> str:
    re, im = float(z.real), float(z.imag)
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ValueError("cannot serialize non-finite values")
    return f"[{re!r}, {im!r}]"


def _row(values) -> str:
    return "[" + ", ".join(_scalar(z) for z in values) + "]"


def dumps(obj) -> str:
    """Serialize a :class:`Frame`, :class:`OperatorFrame` or 1-D array."""
    if isinstance(obj, Frame):
        head = {"schema_version": SCHEMA_VERSION, "kind": "frame", "dim": obj.dim}
        body = ",\n    ".join(_row(v) for v in obj.vectors)
        data = f"[\n    {body}\n  ]"
    elif isinstance(obj, OperatorFrame):
        head = {
            "schema_version": SCHEMA_VERSION,
            "kind": "operator_frame",
            "dim_h": obj.dim_h,
            "dim_k": obj.dim_k,
        }
        if obj.index_labels is not None:
            head["index_labels"] = [list(p) for p in obj.index_labels]
        blocks = []
        for m in obj.elements:
            rows = ",\n      ".join(_row(r) for r in m)
            blocks.append(f"[\n      {rows}\n    ]")
        data = "[\n    " + ",\n    ".join(blocks) + "\n  ]"
    else:
        v = np.asarray(obj, dtype=np.complex128)
        if v.ndim != 1:
            raise TypeError(f"cannot serialize object of type {type(obj).__name__}")
        head = {"schema_version": SCHEMA_VERSION, "kind": "vector", "dim": v.shape[0]}
        data = _row(v)
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in head.items()]
    lines.append(f'  "data": {data}')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj))


def _reject_constant(name):
    raise ValueError(f"non-finite literal {name}")


def _positive_int(doc, key):
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
        raise ParseError("expected a positive integer", field=key)
    return v


def _complex_array(data, shape, field="data") -> np.ndarray:
    """Parse nested ``[re, im]`` lists into a complex array of the given shape."""

    def walk(node, depth, path):
        if depth == len(shape):
            if (
                not isinstance(node, list)
                or len(node) != 2
                or not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in node)
            ):
                raise ParseError("expected a [re, im] pair of numbers", field=path)
            return complex(float(node[0]), float(node[1]))
        if not isinstance(node, list):
            raise ParseError("expected an array", field=path)
        if shape[depth] is not None and len(node) != shape[depth]:
            raise ParseError(f"expected {shape[depth]} entries, got {len(node)}", field=path)
        if not node:
            raise ParseError("empty array", field=path)
        return [walk(child, depth + 1, f"{path}[{i}]") for i, child in enumerate(node)]

    return np.array(walk(data, 0, field), dtype=np.complex128)


def loads(text: str):
    """Parse a frame file; returns a Frame, OperatorFrame or complex vector.

    Raises :class:`ParseError` naming the offending line or field.
    """
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("schema_version", "kind"):
        if key not in doc:
            raise ParseError("missing required field", field=key)
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {doc['schema_version']!r}", field="schema_version")
    kind = doc["kind"]
    if kind not in _FIELDS:
        raise ParseError(f"unknown kind {kind!r}", field="kind")
    required, optional = _FIELDS[kind]
    missing = sorted(required - doc.keys())
    if missing:
        raise ParseError("missing required field", field=missing[0])
    unknown = sorted(doc.keys() - required - optional)
    if unknown:
        raise ParseError("unknown field", field=unknown[0])

    if kind == "vector":
        dim = _positive_int(doc, "dim")
        return _complex_array(doc["data"], (dim,))
    if kind == "frame":
        dim = _positive_int(doc, "dim")
        return Frame(_complex_array(doc["data"], (None, dim)))

    dim_h = _positive_int(doc, "dim_h")
    dim_k = _positive_int(doc, "dim_k")
    elements = _complex_array(doc["data"], (None, dim_h, dim_k))
    labels = doc.get("index_labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(i, int) and not isinstance(i, bool) for i in p)
            for p in labels
        ):
            raise ParseError("expected a list of [n, m] integer pairs", field="index_labels")
        if len(labels) != elements.shape[0]:
            raise ParseError(f"{len(labels)} labels for {elements.shape[0]} elements", field="index_labels")
    return OperatorFrame(elements, labels)


def load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
