"""Pure-Python batch kernels, the fallback when the C extension is absent.

Must stay behaviorally identical to _ckernels.pyx; tests/test_kernels.py
checks both against the per-element reference in fea2vr.triangulate.
"""

from __future__ import annotations

import numpy as np

CLASS_SHELL = 0
CLASS_HEX8 = 1
CLASS_SOLID92 = 2
CLASS_UNSUPPORTED = 3

_HEX_FACES = (
    (0, 3, 2, 1),
    (4, 5, 6, 7),
    (0, 1, 5, 4),
    (1, 2, 6, 5),
    (2, 3, 7, 6),
    (3, 0, 4, 7),
)
_TET_FACES = (
    (0, 1, 2, 4, 5, 6),
    (0, 3, 1, 7, 8, 4),
    (1, 3, 2, 8, 9, 5),
    (2, 3, 0, 9, 7, 6),
)


def compute_masks(conn, counts, surface_ids):
    """Bitmask per element: bit i set iff node i is not in surface_ids."""
    surface = set(int(s) for s in surface_ids)
    n = conn.shape[0]
    masks = np.zeros(n, dtype=np.int64)
    for e in range(n):
        bits = 0
        for i in range(counts[e]):
            if int(conn[e, i]) not in surface:
                bits |= 1 << i
        masks[e] = bits
    return masks


def _shell_survivors(conn_row, count, mask):
    survivors = []
    for i in range(count):
        node = int(conn_row[i])
        if not (mask >> i & 1) and node not in survivors:
            survivors.append(node)
    return survivors


def _face_triples(cls, conn_row, count, mask):
    """Candidate triangles for one element, as (a, b, c, face_index) tuples."""
    triples = []
    if cls == CLASS_SHELL:
        s = _shell_survivors(conn_row, count, mask)
        if len(s) == 3:
            triples.append((s[0], s[1], s[2], 0))
        elif len(s) == 4:
            triples.append((s[0], s[1], s[2], 0))
            triples.append((s[0], s[2], s[3], 0))
    elif cls == CLASS_HEX8:
        for f, face in enumerate(_HEX_FACES):
            if any(mask >> i & 1 for i in face):
                continue
            q = [int(conn_row[i]) for i in face]
            triples.append((q[0], q[1], q[2], f))
            triples.append((q[0], q[2], q[3], f))
    elif cls == CLASS_SOLID92:
        for f, face in enumerate(_TET_FACES):
            if any(mask >> i & 1 for i in face):
                continue
            c0, c1, c2, m01, m12, m20 = (int(conn_row[i]) for i in face)
            triples.append((c0, m01, m20, f))
            triples.append((m01, c1, m12, f))
            triples.append((m20, m12, c2, f))
            triples.append((m01, m12, m20, f))
    return [(a, b, c, f) for a, b, c, f in triples if a != b and b != c and a != c]


def emit_triangles(class_codes, conn, counts, masks, elem_ids):
    """Triangulate all elements.

    Returns an int64 array of shape (m, 6) with columns
    (a, b, c, element_id, face_index, tri_index), in element input order.
    """
    rows = []
    for e in range(conn.shape[0]):
        face_index = -1
        tri_index = 0
        for a, b, c, f in _face_triples(
            int(class_codes[e]), conn[e], int(counts[e]), int(masks[e])
        ):
            tri_index = tri_index + 1 if f == face_index else 0
            face_index = f
            rows.append((a, b, c, int(elem_ids[e]), f, tri_index))
    if not rows:
        return np.empty((0, 6), dtype=np.int64)
    return np.array(rows, dtype=np.int64)
