"""ArrayDocument JSON and text rendering."""

from __future__ import annotations

import json
from typing import Any

from .core import HeffterArray
from .errors import HeffterError, ParseError, SchemaError
from .field import make_field

PROVENANCE_METHODS = ("perfect", "agreeable", "search", "external")


def to_document(a: HeffterArray, provenance: dict | None = None) -> dict[str, Any]:
    f = a.field
    field_doc: dict[str, Any] = {"p": f.p, "k": f.k}
    if f.k > 1:
        field_doc["modulus"] = list(f.modulus)
    doc: dict[str, Any] = {
        "field": field_doc,
        "m": a.m,
        "n": a.n,
        "entries": [[f.coeffs(x) for x in row] for row in a.entries],
    }
    if provenance is not None:
        if provenance.get("method") not in PROVENANCE_METHODS:
            raise SchemaError(f"unknown provenance method {provenance.get('method')!r}")
        doc["provenance"] = provenance
    return doc


def serialize(a: HeffterArray, provenance: dict | None = None) -> bytes:
    """Canonical bytes: sorted keys, no insignificant whitespace, trailing newline."""
    text = json.dumps(to_document(a, provenance), sort_keys=True, separators=(",", ":"))
    return (text + "\n").encode("utf-8")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def from_document(doc: Any) -> tuple[HeffterArray, dict | None]:
    _require(isinstance(doc, dict), "document must be a JSON object")
    for key in ("field", "m", "n", "entries"):
        _require(key in doc, f"missing key {key!r}")
    fd = doc["field"]
    _require(isinstance(fd, dict) and _is_int(fd.get("p")) and _is_int(fd.get("k")), "field needs integer p and k")
    p, k = fd["p"], fd["k"]
    modulus = fd.get("modulus")
    if k == 1 and modulus is not None:
        raise SchemaError("modulus must be omitted for prime fields")
    try:
        f = make_field(p, k, modulus)
    except HeffterError as exc:
        raise SchemaError(f"bad field: {exc}") from exc
    m, n, entries = doc["m"], doc["n"], doc["entries"]
    _require(_is_int(m) and _is_int(n), "m and n must be integers")
    _require(f.q == 2 * m * n + 1, f"field order {f.q} != 2*{m}*{n}+1")
    _require(isinstance(entries, list) and len(entries) == m, f"entries must have {m} rows")
    rows = []
    for i, row in enumerate(entries):
        _require(isinstance(row, list) and len(row) == n, f"row {i + 1} must have {n} entries")
        codes = []
        for j, v in enumerate(row):
            if _is_int(v) and k == 1:
                _require(0 <= v < p, f"entry ({i + 1},{j + 1}) out of range")
                code = v
            else:
                _require(
                    isinstance(v, list) and len(v) == k and all(_is_int(c) and 0 <= c < p for c in v),
                    f"entry ({i + 1},{j + 1}) must be {k} coefficients in [0,{p})",
                )
                code = f.from_coeffs(v)
            _require(code != 0, f"entry ({i + 1},{j + 1}) is zero")
            codes.append(code)
        rows.append(codes)
    try:
        arr = HeffterArray(f, rows)
    except HeffterError as exc:
        raise SchemaError(str(exc)) from exc
    prov = doc.get("provenance")
    if prov is not None:
        _require(isinstance(prov, dict) and prov.get("method") in PROVENANCE_METHODS, "bad provenance")
    return arr, prov


def parse(data: bytes | str) -> HeffterArray:
    return parse_document(data)[0]


def parse_document(data: bytes | str) -> tuple[HeffterArray, dict | None]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return from_document(doc)


def render_text(a: HeffterArray) -> str:
    """One line per row, entries in field text format separated by single spaces."""
    return "\n".join(" ".join(row) for row in a.formatted()) + "\n"
