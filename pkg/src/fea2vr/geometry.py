"""Normals and mesh validation.

A triangle counts as degenerate when its cross-product norm is below
1e-12 times the square of its longest edge; such triangles contribute no
normal and are reported by validate().
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from .mesh import VrMesh

logger = logging.getLogger(__name__)

DEGENERACY_RATIO = 1e-12
FALLBACK_NORMAL = (0.0, 0.0, 1.0)


class IssueKind(enum.Enum):
    INDEX_OUT_OF_RANGE = "IndexOutOfRange"
    DEGENERATE_TRIANGLE = "DegenerateTriangle"
    DUPLICATE_TRIANGLE = "DuplicateTriangle"
    NON_FINITE_COORDINATE = "NonFiniteCoordinate"


@dataclass(frozen=True)
class MeshIssue:
    kind: IssueKind
    location: int  # triangle index, or vertex index for NON_FINITE_COORDINATE

    def __str__(self):
        what = "vertex" if self.kind is IssueKind.NON_FINITE_COORDINATE else "triangle"
        return f"{self.kind.value} at {what} {self.location}"


def face_normal(p0, p1, p2):
    """Unit normal of a triangle, or None when it is degenerate."""
    p0 = np.asarray(p0, dtype=np.float64)
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    cross = np.cross(p1 - p0, p2 - p0)
    norm = float(np.linalg.norm(cross))
    longest = max(
        float(np.linalg.norm(p1 - p0)),
        float(np.linalg.norm(p2 - p1)),
        float(np.linalg.norm(p0 - p2)),
    )
    if norm < DEGENERACY_RATIO * longest * longest or norm == 0.0:
        return None
    return cross / norm


def _triangle_crosses(vertices: np.ndarray, triangles: np.ndarray):
    """Raw cross products per triangle plus a degeneracy flag per triangle."""
    if triangles.shape[0] == 0:
        return np.zeros((0, 3)), np.zeros(0, dtype=bool)
    p0 = vertices[triangles[:, 0]]
    p1 = vertices[triangles[:, 1]]
    p2 = vertices[triangles[:, 2]]
    cross = np.cross(p1 - p0, p2 - p0)
    norms = np.linalg.norm(cross, axis=1)
    edges = np.stack(
        [
            np.linalg.norm(p1 - p0, axis=1),
            np.linalg.norm(p2 - p1, axis=1),
            np.linalg.norm(p0 - p2, axis=1),
        ]
    )
    longest = edges.max(axis=0)
    degenerate = (norms < DEGENERACY_RATIO * longest * longest) | (norms == 0.0)
    return cross, degenerate


def degenerate_triangles(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Boolean flag per triangle: geometrically degenerate (zero area)."""
    _, flags = _triangle_crosses(vertices, triangles)
    return flags


def vertex_normals(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Per-vertex unit normals, area-weighted over incident faces.

    The raw cross product of a face already carries twice its area, so
    accumulating crosses is the area weighting.  Vertices with no
    non-degenerate incident face fall back to (0, 0, 1).
    """
    cross, degenerate = _triangle_crosses(vertices, triangles)
    sums = np.zeros_like(vertices, dtype=np.float64)
    live = ~degenerate
    for column in range(3):
        np.add.at(sums, triangles[live, column], cross[live])
    lengths = np.linalg.norm(sums, axis=1)
    flat = lengths < 1e-30
    if np.any(flat):
        logger.warning(
            "%d vertex normal(s) had no face contribution, using fallback %s",
            int(flat.sum()),
            FALLBACK_NORMAL,
        )
        sums[flat] = FALLBACK_NORMAL
        lengths[flat] = 1.0
    return sums / lengths[:, None]


def validate(mesh: VrMesh) -> list[MeshIssue]:
    """Exhaustively report mesh defects; an empty list means clean."""
    issues: list[MeshIssue] = []
    vcount = mesh.vertex_count
    finite = np.isfinite(mesh.vertices).all(axis=1)
    for v in np.nonzero(~finite)[0]:
        issues.append(MeshIssue(IssueKind.NON_FINITE_COORDINATE, int(v)))

    in_range = np.ones(mesh.triangle_count, dtype=bool)
    for t in range(mesh.triangle_count):
        tri = mesh.triangles[t]
        if tri.min() < 0 or tri.max() >= vcount:
            issues.append(MeshIssue(IssueKind.INDEX_OUT_OF_RANGE, t))
            in_range[t] = False

    if np.all(finite):
        safe = mesh.triangles[in_range]
        flags = degenerate_triangles(mesh.vertices, safe)
        for t, flag in zip(np.nonzero(in_range)[0], flags):
            if flag:
                issues.append(MeshIssue(IssueKind.DEGENERATE_TRIANGLE, int(t)))

    seen: dict[frozenset, int] = {}
    for t in range(mesh.triangle_count):
        key = frozenset(int(i) for i in mesh.triangles[t])
        if key in seen:
            issues.append(MeshIssue(IssueKind.DUPLICATE_TRIANGLE, t))
        else:
            seen[key] = t
    return issues


@dataclass
class MeshStats:
    vertex_count: int
    triangle_count: int
    bbox_min: tuple[float, float, float] | None
    bbox_max: tuple[float, float, float] | None
    fields: dict[str, dict[str, float]]


def stats(mesh: VrMesh) -> MeshStats:
    """Aggregate size, bounding box and per-field min/max/mean."""
    if mesh.vertex_count:
        bbox_min = tuple(float(x) for x in mesh.vertices.min(axis=0))
        bbox_max = tuple(float(x) for x in mesh.vertices.max(axis=0))
    else:
        bbox_min = bbox_max = None
    field_stats = {}
    for name, scalar_field in mesh.fields.items():
        present = [v for v in scalar_field.values if v is not None]
        field_stats[name] = {
            "min": scalar_field.min,
            "max": scalar_field.max,
            "mean": float(np.mean(present)) if present else float("nan"),
        }
    return MeshStats(
        vertex_count=mesh.vertex_count,
        triangle_count=mesh.triangle_count,
        bbox_min=bbox_min,
        bbox_max=bbox_max,
        fields=field_stats,
    )
