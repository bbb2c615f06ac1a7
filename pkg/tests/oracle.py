"""Independent brute-force oracles for structured hex grids.

Boundary faces are found by enumerating every cell face directly from grid
indices and keeping the faces that occur exactly once (shared faces occur
twice).  This never looks at node maps, the face tables, or anything else in
the conversion path, so its counts are an independent check.
"""

from __future__ import annotations

from collections import Counter

from fea2vr.synthetic import HexGrid


def cell_faces(grid: HexGrid, cx: int, cy: int, cz: int) -> list[frozenset]:
    """The six faces of one cell as node-id sets, derived from grid indices."""
    n = grid.node_id
    return [
        frozenset(n(cx, cy + dy, cz + dz) for dy, dz in ((0, 0), (0, 1), (1, 0), (1, 1))),
        frozenset(n(cx + 1, cy + dy, cz + dz) for dy, dz in ((0, 0), (0, 1), (1, 0), (1, 1))),
        frozenset(n(cx + dx, cy, cz + dz) for dx, dz in ((0, 0), (0, 1), (1, 0), (1, 1))),
        frozenset(n(cx + dx, cy + 1, cz + dz) for dx, dz in ((0, 0), (0, 1), (1, 0), (1, 1))),
        frozenset(n(cx + dx, cy + dy, cz) for dx, dy in ((0, 0), (0, 1), (1, 0), (1, 1))),
        frozenset(n(cx + dx, cy + dy, cz + 1) for dx, dy in ((0, 0), (0, 1), (1, 0), (1, 1))),
    ]


def all_faces(grid: HexGrid) -> list[frozenset]:
    faces = []
    for cz in range(grid.nz):
        for cy in range(grid.ny):
            for cx in range(grid.nx):
                faces.extend(cell_faces(grid, cx, cy, cz))
    return faces


def boundary_faces(grid: HexGrid) -> list[frozenset]:
    """Faces belonging to exactly one cell."""
    counts = Counter(all_faces(grid))
    return [face for face, count in counts.items() if count == 1]


def expected_full_counts(grid: HexGrid) -> tuple[int, int]:
    """(vertices, triangles) for the unoptimized conversion."""
    n_cells = grid.nx * grid.ny * grid.nz
    n_nodes = (grid.nx + 1) * (grid.ny + 1) * (grid.nz + 1)
    return n_nodes, n_cells * 6 * 2


def expected_optimized_counts(grid: HexGrid) -> tuple[int, int]:
    """(vertices, triangles) for the surface-optimized conversion."""
    faces = boundary_faces(grid)
    used = set()
    for face in faces:
        used |= face
    return len(used), 2 * len(faces)


def surface_node_ids(grid: HexGrid) -> set[int]:
    """Surface nodes derived from boundary faces (not from coordinates)."""
    used = set()
    for face in boundary_faces(grid):
        used |= face
    return used
