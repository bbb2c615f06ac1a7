"""In-memory mesh model produced by the conversion pipeline.

A built VrMesh is immutable by convention: nothing in the package mutates one
after construction, so instances are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class ScalarField:
    """Named per-vertex result values in analysis units.

    ``values`` has one entry per vertex; an entry may be None when the source
    listing had no value for that node and missing values were allowed.
    min/max are taken over the present values only.
    """

    name: str
    values: list
    min: float
    max: float
    units: str | None = None


@dataclass
class VrMesh:
    """Renumbered triangle mesh with per-vertex data.

    vertices: (V, 3) float64 positions.
    triangles: (T, 3) int64 0-based vertex indices.
    normals: (V, 3) float64 unit vertex normals.
    node_id_map: (V,) int64, entry v = original solver node id of vertex v.
    fields: scalar fields keyed by name.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    normals: np.ndarray
    node_id_map: np.ndarray
    fields: dict[str, ScalarField] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def triangle_count(self) -> int:
        return int(self.triangles.shape[0])


# Fixed order of triangulable classes in reports.
_CLASS_ORDER = ("shell", "hex8", "solid92")


@dataclass
class ConversionReport:
    """Element/node/triangle accounting for every pipeline stage."""

    input_nodes: int = 0
    surface_nodes: int | None = None
    excluded_nodes: int = 0
    elements_per_class: dict[str, int] = field(default_factory=dict)
    unsupported_elements: int = 0
    emitted_triangles: int = 0
    dropped_empty_elements: int = 0
    orphan_vertices_removed: int = 0
    degenerate_triangles: int = 0

    def as_dict(self) -> dict:
        """Counts in a fixed key order, for deterministic serialization."""
        return {
            "input_nodes": self.input_nodes,
            "surface_nodes": self.surface_nodes,
            "excluded_nodes": self.excluded_nodes,
            "elements_per_class": {
                name: self.elements_per_class.get(name, 0) for name in _CLASS_ORDER
            },
            "unsupported_elements": self.unsupported_elements,
            "emitted_triangles": self.emitted_triangles,
            "dropped_empty_elements": self.dropped_empty_elements,
            "orphan_vertices_removed": self.orphan_vertices_removed,
            "degenerate_triangles": self.degenerate_triangles,
        }
