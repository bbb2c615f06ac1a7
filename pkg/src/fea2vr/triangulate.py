"""Per-element triangulation into triangles of original node ids.

Shells collapse to their distinct unmasked nodes and become one triangle or a
split quad.  Volume elements emit a face only when every node of that face is
unmasked, which is what turns the node map into a surface skin: faces touching
a skipped (inner) node disappear.

These are the reference implementations; the pipeline runs the batched
kernels in :mod:`fea2vr.kernels`, which are tested for parity against these.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ClassifiedElement, ElementClass

# Hex faces as 0-based local-index quadruples. With locals 0-3 the bottom
# quad and 4-7 directly above, each quadruple winds outward.
HEX_FACES = (
    (0, 3, 2, 1),
    (4, 5, 6, 7),
    (0, 1, 5, 4),
    (1, 2, 6, 5),
    (2, 3, 7, 6),
    (3, 0, 4, 7),
)

# 10-node tet: corners I J K L at locals 0-3, midsides M=IJ N=JK O=KI P=IL
# Q=JL R=KL at locals 4-9. Each face lists 3 corners then the midside
# opposite each corner pair: (c0, c1, c2, m01, m12, m20).
TET_FACES = (
    (0, 1, 2, 4, 5, 6),
    (0, 3, 1, 7, 8, 4),
    (1, 3, 2, 8, 9, 5),
    (2, 3, 0, 9, 7, 6),
)


@dataclass(frozen=True)
class IdTriangle:
    """Triangle of original node ids with its provenance inside the element."""

    a: int
    b: int
    c: int
    source_element: int
    face_index: int
    tri_index: int

    @property
    def ids(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def split_quad(q: tuple[int, int, int, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a quad along the 0-2 diagonal: (q0,q1,q2) and (q0,q2,q3)."""
    return (q[0], q[1], q[2]), (q[0], q[2], q[3])


def _emit(element_id, face_index, triples):
    out = []
    tri_index = 0
    for triple in triples:
        # Degenerate collapsed faces produce repeated ids; those triangles
        # are dropped, never emitted.
        if len(set(triple)) == 3:
            out.append(IdTriangle(*triple, element_id, face_index, tri_index))
            tri_index += 1
    return out


def triangulate_shell(element: ClassifiedElement) -> list[IdTriangle]:
    """Triangulate a shell: drop masked nodes, collapse repeats, then fan.

    Fewer than 3 survivors is a valid empty result (the element vanished
    from the skin), 3 make a triangle, 4 a split quad.
    """
    survivors: list[int] = []
    for i, node_id in enumerate(element.record.node_ids):
        if not element.node_map.skips(i) and node_id not in survivors:
            survivors.append(node_id)
    if len(survivors) < 3:
        return []
    if len(survivors) == 3:
        return _emit(element.record.id, 0, [tuple(survivors)])
    return _emit(element.record.id, 0, split_quad(tuple(survivors)))


def triangulate_hex(element: ClassifiedElement) -> list[IdTriangle]:
    """Emit two triangles per hex face whose four nodes are all unmasked."""
    nodes = element.record.node_ids
    node_map = element.node_map
    out: list[IdTriangle] = []
    for face_index, face in enumerate(HEX_FACES):
        if any(node_map.skips(i) for i in face):
            continue
        quad = tuple(nodes[i] for i in face)
        out.extend(_emit(element.record.id, face_index, split_quad(quad)))
    return out


def triangulate_solid92(element: ClassifiedElement) -> list[IdTriangle]:
    """Emit the 4-triangle subdivision of each fully unmasked tet face.

    A face needs its 3 corners and 3 midsides unmasked; the subdivision is
    (c0,m01,m20), (m01,c1,m12), (m20,m12,c2), (m01,m12,m20).
    """
    nodes = element.record.node_ids
    node_map = element.node_map
    out: list[IdTriangle] = []
    for face_index, face in enumerate(TET_FACES):
        if any(node_map.skips(i) for i in face):
            continue
        c0, c1, c2, m01, m12, m20 = (nodes[i] for i in face)
        triples = [(c0, m01, m20), (m01, c1, m12), (m20, m12, c2), (m01, m12, m20)]
        out.extend(_emit(element.record.id, face_index, triples))
    return out


def triangulate_element(element: ClassifiedElement) -> list[IdTriangle]:
    """Dispatch on element class; unsupported classes yield nothing."""
    if element.element_class is ElementClass.SHELL:
        return triangulate_shell(element)
    if element.element_class is ElementClass.HEX8:
        return triangulate_hex(element)
    if element.element_class is ElementClass.SOLID92:
        return triangulate_solid92(element)
    return []
