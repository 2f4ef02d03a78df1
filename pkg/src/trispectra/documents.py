"""The triring document format: JSON with a fixed schema.

Two shapes are accepted::

    {"name": "...", "even": RING, "odd": RING,
     "lambda": [odd indices, one per even element], "rho": [...]}

    {"kind": "triquaternion", "base": RING, "name": "..."}

where RING is ``{"kind":"zn","n":N}``, ``{"kind":"product","factors":
[RING,...]}`` or ``{"kind":"table","size":K,"add":[[...]],"mul":[[...]],
"one":J}``.  ``name`` is optional.  Serialization is canonical: UTF-8,
sorted keys, no insignificant whitespace, trailing newline; parsing then
re-serializing any accepted document is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from trispectra.commring import DEFAULT_MAX_SIZE, make_ring
from trispectra.errors import ParseError, RangeError, SchemaError
from trispectra.triring import Triring, build_triring, triquaternions_over

_RING_KINDS = ("zn", "product", "table")


@dataclass(frozen=True)
class TriringDocument:
    name: str
    kind: str  # "standard" | "triquaternion"
    even: dict | None = None
    odd: dict | None = None
    lam: tuple[int, ...] | None = None
    rho: tuple[int, ...] | None = None
    base: dict | None = None


def _require_object(value, field: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(field, f"expected an object, got {type(value).__name__}")
    return value


def _require_int(value, field: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(field, f"expected an integer, got {type(value).__name__}")
    return value


def _check_ring_descriptor(desc, field: str) -> None:
    desc = _require_object(desc, field)
    kind = desc.get("kind")
    if kind not in _RING_KINDS:
        raise SchemaError(f"{field}.kind", f"expected one of {_RING_KINDS}, got {kind!r}")
    if kind == "zn":
        if set(desc) != {"kind", "n"}:
            raise SchemaError(field, "zn descriptor takes exactly the keys kind, n")
        n = _require_int(desc["n"], f"{field}.n")
        if n < 1:
            raise SchemaError(f"{field}.n", "must be >= 1")
    elif kind == "product":
        if set(desc) != {"kind", "factors"}:
            raise SchemaError(field, "product descriptor takes exactly the keys kind, factors")
        factors = desc["factors"]
        if not isinstance(factors, list) or not factors:
            raise SchemaError(f"{field}.factors", "expected a nonempty list")
        for i, f in enumerate(factors):
            _check_ring_descriptor(f, f"{field}.factors[{i}]")
    else:
        if set(desc) != {"kind", "size", "add", "mul", "one"}:
            raise SchemaError(field, "table descriptor takes exactly the keys kind, size, add, mul, one")
        size = _require_int(desc["size"], f"{field}.size")
        if size < 1:
            raise SchemaError(f"{field}.size", "must be >= 1")
        for tname in ("add", "mul"):
            table = desc[tname]
            if not isinstance(table, list) or len(table) != size:
                raise SchemaError(f"{field}.{tname}", f"expected {size} rows")
            for r, row in enumerate(table):
                if not isinstance(row, list) or len(row) != size:
                    raise SchemaError(f"{field}.{tname}[{r}]", f"expected {size} entries")
                for v in row:
                    v = _require_int(v, f"{field}.{tname}[{r}]")
                    if not 0 <= v < size:
                        raise RangeError(f"{field}.{tname}[{r}]", v)
        one = _require_int(desc["one"], f"{field}.one")
        if not 0 <= one < size:
            raise RangeError(f"{field}.one", one)


def _descriptor_size(desc: dict) -> int:
    if desc["kind"] == "zn":
        return desc["n"]
    if desc["kind"] == "product":
        total = 1
        for f in desc["factors"]:
            total *= _descriptor_size(f)
        return total
    return desc["size"]


def _check_index_list(values, field: str, length: int, bound: int) -> tuple[int, ...]:
    if not isinstance(values, list):
        raise SchemaError(field, f"expected a list, got {type(values).__name__}")
    if len(values) != length:
        raise SchemaError(field, f"expected length {length}, got {len(values)}")
    out = []
    for v in values:
        v = _require_int(v, field)
        if not 0 <= v < bound:
            raise RangeError(field, v)
        out.append(v)
    return tuple(out)


def parse_document(text: bytes | str) -> TriringDocument:
    """Parse and validate a triring document."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(1, e.start + 1, "valid UTF-8") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.colno, e.msg) from None
    data = _require_object(data, "(document)")

    name = data.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("name", "expected a string")

    if data.get("kind") == "triquaternion":
        allowed = {"kind", "base", "name"}
        extra = set(data) - allowed
        if extra:
            raise SchemaError(sorted(extra)[0], "unknown field")
        if "base" not in data:
            raise SchemaError("base", "missing")
        _check_ring_descriptor(data["base"], "base")
        return TriringDocument(name=name, kind="triquaternion", base=data["base"])

    allowed = {"name", "even", "odd", "lambda", "rho"}
    extra = set(data) - allowed
    if extra:
        raise SchemaError(sorted(extra)[0], "unknown field")
    for key in ("even", "odd", "lambda", "rho"):
        if key not in data:
            raise SchemaError(key, "missing")
    _check_ring_descriptor(data["even"], "even")
    _check_ring_descriptor(data["odd"], "odd")
    n_even = _descriptor_size(data["even"])
    n_odd = _descriptor_size(data["odd"])
    lam = _check_index_list(data["lambda"], "lambda", n_even, n_odd)
    rho = _check_index_list(data["rho"], "rho", n_even, n_odd)
    return TriringDocument(name=name, kind="standard", even=data["even"],
                           odd=data["odd"], lam=lam, rho=rho)


def document_dict(doc: TriringDocument) -> dict:
    if doc.kind == "triquaternion":
        out = {"kind": "triquaternion", "base": doc.base}
    else:
        out = {"even": doc.even, "odd": doc.odd,
               "lambda": list(doc.lam), "rho": list(doc.rho)}
    if doc.name:
        out["name"] = doc.name
    return out


def serialize_document(doc: TriringDocument) -> bytes:
    """Canonical bytes: sorted keys, compact separators, trailing newline."""
    return canonical_json_bytes(document_dict(doc))


def canonical_json_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def document_to_triring(doc: TriringDocument,
                        max_size: int = DEFAULT_MAX_SIZE) -> Triring:
    """Build and fully validate the triring a document describes."""
    if doc.kind == "triquaternion":
        base = make_ring(doc.base, max_size=max_size)
        return triquaternions_over(base, max_size=max_size)
    even = make_ring(doc.even, max_size=max_size)
    odd = make_ring(doc.odd, max_size=max_size)
    return build_triring(even, odd, list(doc.lam), list(doc.rho),
                         name=doc.name or "document")
