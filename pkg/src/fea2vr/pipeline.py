"""Full conversion workflow: listings in, renumbered triangle mesh out.

Stages: classify elements, compute node maps from the surface-node set,
triangulate (batched kernels), collect the node ids actually used by
triangles, renumber them ascending, assemble vertices/normals, and fill the
conversion report.  With no surface set the pipeline runs in "full" mode
(all-zero node maps); interior faces shared by adjacent volume elements are
then emitted twice unless face dedup is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping, Sequence

import numpy as np

from . import geometry, kernels
from .errors import ConversionError
from .listing import ElementRecord, NodeRecord
from .mesh import ConversionReport, ScalarField, VrMesh
from .model import ClassifiedElement, ElementClass, classify

_CLASS_CODES = {
    ElementClass.SHELL: kernels.CLASS_SHELL,
    ElementClass.HEX8: kernels.CLASS_HEX8,
    ElementClass.SOLID92: kernels.CLASS_SOLID92,
}

_MAX_NODES = 10  # widest supported element (10-node tet)


@dataclass(frozen=True)
class BuildOptions:
    dedup_faces: bool = False
    drop_degenerate: bool = False
    allow_empty: bool = False


def renumber(used_original_ids: Iterable[int]) -> dict[int, int]:
    """Bijection original node id -> contiguous 0-based vertex index.

    Indices are assigned in ascending original-id order, which keeps outputs
    stable across element orderings.
    """
    return {node_id: v for v, node_id in enumerate(sorted(set(used_original_ids)))}


def build_mesh(
    nodes: Sequence[NodeRecord],
    elements: Sequence[ElementRecord],
    mapping: Mapping[int, ElementClass],
    surface: AbstractSet[int] | None = None,
    options: BuildOptions = BuildOptions(),
) -> tuple[VrMesh, ConversionReport]:
    """Convert parsed listings into a VrMesh plus its ConversionReport.

    Raises:
        ElementError: from classification (propagated).
        ConversionError: missing node references, or an empty result without
            ``options.allow_empty``.
    """
    report = ConversionReport(input_nodes=len(nodes))
    report.surface_nodes = len(surface) if surface is not None else None

    positions = {record.id: record.position for record in nodes}
    if len(positions) != len(nodes):
        raise ConversionError("node list contains duplicate ids")

    classified: list[ClassifiedElement] = []
    for record in elements:
        element = classify(record, mapping)
        if element.element_class is ElementClass.UNSUPPORTED:
            report.unsupported_elements += 1
            continue
        name = element.element_class.value
        report.elements_per_class[name] = report.elements_per_class.get(name, 0) + 1
        classified.append(element)

    supported_ids = {e.record.id for e in classified}
    if len(supported_ids) != len(classified):
        raise ConversionError("element list contains duplicate ids")

    rows = _triangulate_all(classified, positions, surface)

    if options.dedup_faces:
        rows = _dedup_faces(rows)

    used_ids = np.unique(rows[:, :3]) if rows.shape[0] else np.empty(0, dtype=np.int64)
    if used_ids.shape[0] == 0:
        if options.allow_empty:
            report.excluded_nodes = report.input_nodes
            report.orphan_vertices_removed = _orphan_count(classified, surface, used_ids)
            return _empty_mesh(), report
        if not classified:
            raise ConversionError("no elements to convert")
        raise ConversionError("empty surface")

    vertices, triangles, node_id_map = _assemble(rows, used_ids, positions)

    degenerate = geometry.degenerate_triangles(vertices, triangles)
    report.degenerate_triangles = int(degenerate.sum())
    if options.drop_degenerate and report.degenerate_triangles:
        rows = rows[~degenerate]
        used_ids = np.unique(rows[:, :3]) if rows.shape[0] else np.empty(0, dtype=np.int64)
        if used_ids.shape[0] == 0:
            if options.allow_empty:
                report.excluded_nodes = report.input_nodes
                report.orphan_vertices_removed = _orphan_count(classified, surface, used_ids)
                return _empty_mesh(), report
            raise ConversionError("all triangles degenerate")
        vertices, triangles, node_id_map = _assemble(rows, used_ids, positions)

    report.emitted_triangles = int(triangles.shape[0])
    report.excluded_nodes = report.input_nodes - int(used_ids.shape[0])
    report.orphan_vertices_removed = _orphan_count(classified, surface, used_ids)
    report.dropped_empty_elements = len(supported_ids) - len(set(rows[:, 3].tolist()))

    mesh = VrMesh(
        vertices=vertices,
        triangles=triangles,
        normals=geometry.vertex_normals(vertices, triangles),
        node_id_map=node_id_map,
    )
    return mesh, report


def _triangulate_all(classified, positions, surface) -> np.ndarray:
    """Run the batched kernels; returns (m, 6) rows of (a, b, c, eid, f, t)."""
    n = len(classified)
    conn = np.zeros((n, _MAX_NODES), dtype=np.int64)
    counts = np.zeros(n, dtype=np.int64)
    class_codes = np.zeros(n, dtype=np.int64)
    elem_ids = np.zeros(n, dtype=np.int64)
    for i, element in enumerate(classified):
        node_ids = element.record.node_ids
        conn[i, : len(node_ids)] = node_ids
        counts[i] = len(node_ids)
        class_codes[i] = _CLASS_CODES[element.element_class]
        elem_ids[i] = element.record.id

    _check_node_references(classified, conn, counts, positions)

    if surface is None:
        masks = np.zeros(n, dtype=np.int64)
    else:
        surface_sorted = np.unique(np.fromiter(surface, dtype=np.int64, count=len(surface)))
        masks = kernels.compute_masks(conn, counts, surface_sorted)

    return kernels.emit_triangles(class_codes, conn, counts, masks, elem_ids)


def _check_node_references(classified, conn, counts, positions):
    if not classified:
        return
    referenced = np.unique(conn[conn > 0])
    known = np.fromiter(positions.keys(), dtype=np.int64, count=len(positions))
    missing = referenced[~np.isin(referenced, known)]
    if missing.shape[0] == 0:
        return
    missing_set = set(missing.tolist())
    for element in classified:  # slow path, error reporting only
        for node_id in element.record.node_ids:
            if node_id in missing_set:
                raise ConversionError(
                    f"element {element.record.id} references missing node {node_id}"
                )


def _dedup_faces(rows: np.ndarray) -> np.ndarray:
    """Drop faces whose node-id set occurs more than once across elements."""
    face_sets: dict[tuple[int, int], frozenset] = {}
    occurrences: dict[frozenset, int] = {}
    for a, b, c, eid, f, _t in rows.tolist():
        key = (eid, f)
        ids = face_sets.get(key, frozenset()) | {a, b, c}
        face_sets[key] = ids
    for ids in face_sets.values():
        occurrences[ids] = occurrences.get(ids, 0) + 1
    keep = np.fromiter(
        (occurrences[face_sets[(eid, f)]] == 1 for _a, _b, _c, eid, f, _t in rows.tolist()),
        dtype=bool,
        count=rows.shape[0],
    )
    return rows[keep]


def _orphan_count(classified, surface, used_ids) -> int:
    candidates: set[int] = set()
    for element in classified:
        candidates.update(element.record.node_ids)
    if surface is not None:
        candidates &= set(surface)
    return len(candidates) - int(used_ids.shape[0])


def _assemble(rows, used_ids, positions):
    vertices = np.array([positions[int(i)] for i in used_ids], dtype=np.float64)
    triangles = np.searchsorted(used_ids, rows[:, :3])
    return vertices, triangles.astype(np.int64), used_ids.copy()


def _empty_mesh() -> VrMesh:
    return VrMesh(
        vertices=np.zeros((0, 3), dtype=np.float64),
        triangles=np.zeros((0, 3), dtype=np.int64),
        normals=np.zeros((0, 3), dtype=np.float64),
        node_id_map=np.zeros(0, dtype=np.int64),
    )


def remap_field(
    name: str,
    raw: Mapping[int, float],
    node_id_map: np.ndarray,
    fill_missing: bool = False,
    units: str | None = None,
) -> ScalarField:
    """Reorder per-node values into vertex order, dropping excluded nodes.

    Values are carried through untouched (bit-identical reals).  A retained
    vertex with no source value is an error unless ``fill_missing``, in which
    case the entry becomes None.

    Raises:
        ConversionError: missing value without ``fill_missing``, or a field
            with no values at all for the retained vertices.
    """
    values: list = []
    for node_id in node_id_map.tolist():
        if node_id in raw:
            values.append(raw[node_id])
        elif fill_missing:
            values.append(None)
        else:
            raise ConversionError(f"field {name}: missing result for node {node_id}")
    present = [v for v in values if v is not None]
    if not present:
        raise ConversionError(f"field {name}: no values for any retained node")
    return ScalarField(name=name, values=values, min=min(present), max=max(present), units=units)
