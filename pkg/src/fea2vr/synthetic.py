"""Structured hex-grid listing generator for tests, demos and benchmarks.

Produces the four listing kinds for an nx x ny x nz grid of unit hexes.
Element node order is the package's hex convention: locals 1-4 are the
bottom quad counterclockwise seen from +z, locals 5-8 sit directly above.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HexGrid:
    nx: int
    ny: int
    nz: int
    spacing: float = 1.0

    @property
    def node_counts(self) -> tuple[int, int, int]:
        return self.nx + 1, self.ny + 1, self.nz + 1

    def node_id(self, i: int, j: int, k: int) -> int:
        px, py, _ = self.node_counts
        return 1 + i + j * px + k * px * py

    def node_index(self, node_id: int) -> tuple[int, int, int]:
        px, py, _ = self.node_counts
        linear = node_id - 1
        return linear % px, linear // px % py, linear // (px * py)

    def node_position(self, i: int, j: int, k: int) -> tuple[float, float, float]:
        return (i * self.spacing, j * self.spacing, k * self.spacing)

    def node_ids(self) -> list[int]:
        px, py, pz = self.node_counts
        return [
            self.node_id(i, j, k)
            for k in range(pz)
            for j in range(py)
            for i in range(px)
        ]

    def boundary_node_ids(self) -> set[int]:
        """Nodes on the outer skin: any grid index at its min or max."""
        px, py, pz = self.node_counts
        return {
            self.node_id(i, j, k)
            for k in range(pz)
            for j in range(py)
            for i in range(px)
            if i in (0, px - 1) or j in (0, py - 1) or k in (0, pz - 1)
        }

    def element_corner_ids(self, cx: int, cy: int, cz: int) -> tuple[int, ...]:
        n = self.node_id
        return (
            n(cx, cy, cz),
            n(cx + 1, cy, cz),
            n(cx + 1, cy + 1, cz),
            n(cx, cy + 1, cz),
            n(cx, cy, cz + 1),
            n(cx + 1, cy, cz + 1),
            n(cx + 1, cy + 1, cz + 1),
            n(cx, cy + 1, cz + 1),
        )

    def elements(self) -> list[tuple[int, ...]]:
        return [
            self.element_corner_ids(cx, cy, cz)
            for cz in range(self.nz)
            for cy in range(self.ny)
            for cx in range(self.nx)
        ]

    def node_list_text(self) -> str:
        px, py, pz = self.node_counts
        lines = ["NODE   X   Y   Z"]
        for k in range(pz):
            for j in range(py):
                for i in range(px):
                    x, y, z = self.node_position(i, j, k)
                    lines.append(f"{self.node_id(i, j, k)} {x!r} {y!r} {z!r}")
        return "\n".join(lines) + "\n"

    def element_list_text(self, type_ref: int = 1) -> str:
        lines = ["EL MAT TYP REL ESY SEC NODES"]
        for eid, corners in enumerate(self.elements(), start=1):
            node_cols = " ".join(str(n) for n in corners)
            lines.append(f"{eid} 1 {type_ref} 1 0 {eid} {node_cols}")
        return "\n".join(lines) + "\n"

    def surface_node_list_text(self) -> str:
        return "".join(f"{i}\n" for i in sorted(self.boundary_node_ids()))

    def result_list_text(self, values: dict[int, float]) -> str:
        return "".join(f"{node_id} {values[node_id]!r}\n" for node_id in sorted(values))


def unit_cube() -> HexGrid:
    return HexGrid(1, 1, 1)
