"""The vrmesh JSON document and OBJ export.

A vrmesh file is canonical JSON: fixed key order (format, version, vertices,
triangles, normals, node_id_map, fields, provenance), reals rendered in
shortest round-trip form, compact separators, a single LF at the end.  Equal
meshes serialize to identical bytes.
"""

from __future__ import annotations

import json
import logging
import math
from typing import BinaryIO

import numpy as np

from .errors import VrMeshFormatError
from .mesh import ConversionReport, ScalarField, VrMesh

logger = logging.getLogger(__name__)

FORMAT_NAME = "vrmesh"
FORMAT_VERSION = 1

_DOCUMENT_KEYS = (
    "format",
    "version",
    "vertices",
    "triangles",
    "normals",
    "node_id_map",
    "fields",
    "provenance",
)
_FIELD_KEYS = ("values", "min", "max", "units")


def document_from_mesh(mesh: VrMesh, report: ConversionReport | None = None) -> dict:
    """The JSON-ready document for a mesh, keys in canonical order."""
    fields = {}
    for name, f in mesh.fields.items():
        entry = {
            "values": [None if v is None else float(v) for v in f.values],
            "min": float(f.min),
            "max": float(f.max),
        }
        if f.units is not None:
            entry["units"] = f.units
        fields[name] = entry
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "vertices": [[float(x) for x in row] for row in mesh.vertices],
        "triangles": [[int(i) for i in row] for row in mesh.triangles],
        "normals": [[float(x) for x in row] for row in mesh.normals],
        "node_id_map": [int(i) for i in mesh.node_id_map],
        "fields": fields,
        "provenance": (report or ConversionReport()).as_dict(),
    }


def write_vrmesh(mesh: VrMesh, report: ConversionReport | None, sink: BinaryIO) -> None:
    """Serialize to canonical JSON bytes; deterministic for equal meshes."""
    document = document_from_mesh(mesh, report)
    try:
        text = json.dumps(document, ensure_ascii=False, allow_nan=False, separators=(",", ":"))
    except ValueError as exc:
        raise VrMeshFormatError(f"mesh contains non-finite numbers: {exc}") from exc
    sink.write(text.encode("utf-8"))
    sink.write(b"\n")


def read_vrmesh(source: BinaryIO) -> VrMesh:
    """Parse and validate a vrmesh document.

    Unknown extra keys are ignored with a warning; structural violations
    (wrong version, length mismatches, out-of-range indices, non-finite
    numbers) raise VrMeshFormatError naming the offending key or index.
    """
    document = read_document(source)
    return mesh_from_document(document)


def read_document(source: BinaryIO) -> dict:
    """Load the raw JSON document (schema checked by mesh_from_document)."""
    return read_document_bytes(source.read())


def read_document_bytes(data: bytes | str) -> dict:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if not data.strip():
        raise VrMeshFormatError("empty input, expected a vrmesh JSON document")
    try:
        document = json.loads(data)
    except json.JSONDecodeError as exc:
        raise VrMeshFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise VrMeshFormatError("top-level JSON value must be an object")
    return document


def mesh_from_document(document: dict) -> VrMesh:
    for key in document:
        if key not in _DOCUMENT_KEYS:
            logger.warning("ignoring unknown key %r in vrmesh document", key)

    if document.get("format") != FORMAT_NAME:
        raise VrMeshFormatError(f"format must be {FORMAT_NAME!r}, got {document.get('format')!r}")
    version = document.get("version")
    if version != FORMAT_VERSION:
        raise VrMeshFormatError(f"unsupported version {version!r}, expected {FORMAT_VERSION}")

    vertices = _real_rows(document, "vertices")
    normals = _real_rows(document, "normals")
    vertex_count = vertices.shape[0]
    if normals.shape[0] != vertex_count:
        raise VrMeshFormatError(
            f"normals length {normals.shape[0]} does not match vertices length {vertex_count}"
        )

    triangles_raw = _require_list(document, "triangles")
    triangles = np.zeros((len(triangles_raw), 3), dtype=np.int64)
    for t, row in enumerate(triangles_raw):
        if not (isinstance(row, list) and len(row) == 3) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in row
        ):
            raise VrMeshFormatError(f"triangle {t} must be a list of 3 integers")
        if min(row) < 0 or max(row) >= vertex_count:
            raise VrMeshFormatError(f"triangle {t} index out of range")
        triangles[t] = row

    id_map_raw = _require_list(document, "node_id_map")
    if len(id_map_raw) != vertex_count:
        raise VrMeshFormatError(
            f"node_id_map length {len(id_map_raw)} does not match vertices length {vertex_count}"
        )
    if not all(isinstance(i, int) and not isinstance(i, bool) for i in id_map_raw):
        raise VrMeshFormatError("node_id_map entries must be integers")
    if len(set(id_map_raw)) != len(id_map_raw):
        raise VrMeshFormatError("node_id_map contains duplicate node ids")
    node_id_map = np.asarray(id_map_raw, dtype=np.int64)

    fields_raw = document.get("fields", {})
    if not isinstance(fields_raw, dict):
        raise VrMeshFormatError("fields must be an object")
    fields: dict[str, ScalarField] = {}
    for name, entry in fields_raw.items():
        fields[name] = _parse_field(name, entry, vertex_count)

    return VrMesh(
        vertices=vertices,
        triangles=triangles,
        normals=normals,
        node_id_map=node_id_map,
        fields=fields,
    )


def _require_list(document: dict, key: str) -> list:
    value = document.get(key)
    if not isinstance(value, list):
        raise VrMeshFormatError(f"{key} must be an array")
    return value


def _real_rows(document: dict, key: str) -> np.ndarray:
    rows = _require_list(document, key)
    out = np.zeros((len(rows), 3), dtype=np.float64)
    for i, row in enumerate(rows):
        if not (isinstance(row, list) and len(row) == 3):
            raise VrMeshFormatError(f"{key}[{i}] must be a list of 3 numbers")
        for x in row:
            if not isinstance(x, (int, float)) or isinstance(x, bool) or not math.isfinite(x):
                raise VrMeshFormatError(f"{key}[{i}] contains a non-finite or non-number value")
        out[i] = row
    return out


def _parse_field(name: str, entry, vertex_count: int) -> ScalarField:
    if not isinstance(entry, dict):
        raise VrMeshFormatError(f"fields.{name} must be an object")
    for key in entry:
        if key not in _FIELD_KEYS:
            logger.warning("ignoring unknown key %r in field %r", key, name)
    values = entry.get("values")
    if not isinstance(values, list):
        raise VrMeshFormatError(f"fields.{name}.values must be an array")
    if len(values) != vertex_count:
        raise VrMeshFormatError(
            f"fields.{name}.values length {len(values)} does not match vertices length {vertex_count}"
        )
    for i, v in enumerate(values):
        if v is None:
            continue
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise VrMeshFormatError(f"fields.{name}.values[{i}] is not a finite number")
    lo, hi = entry.get("min"), entry.get("max")
    for label, bound in (("min", lo), ("max", hi)):
        if not isinstance(bound, (int, float)) or isinstance(bound, bool) or not math.isfinite(bound):
            raise VrMeshFormatError(f"fields.{name}.{label} must be a finite number")
    units = entry.get("units")
    if units is not None and not isinstance(units, str):
        raise VrMeshFormatError(f"fields.{name}.units must be a string")
    return ScalarField(name=name, values=list(values), min=float(lo), max=float(hi), units=units)


def write_obj(mesh: VrMesh, sink: BinaryIO) -> None:
    """Plain OBJ: v/vn lines plus f with matching 1-based v//vn indices."""
    lines = ["# exported by fea2vr"]
    for x, y, z in mesh.vertices:
        lines.append(f"v {float(x)!r} {float(y)!r} {float(z)!r}")
    for x, y, z in mesh.normals:
        lines.append(f"vn {float(x)!r} {float(y)!r} {float(z)!r}")
    for a, b, c in mesh.triangles:
        a, b, c = int(a) + 1, int(b) + 1, int(c) + 1
        lines.append(f"f {a}//{a} {b}//{b} {c}//{c}")
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))
