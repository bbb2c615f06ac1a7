# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled batch kernels; behavioral twin of _pykernels.py."""

import numpy as np

cimport numpy as cnp

cdef enum:
    C_SHELL = 0
    C_HEX8 = 1
    C_SOLID92 = 2
    C_UNSUPPORTED = 3

CLASS_SHELL = C_SHELL
CLASS_HEX8 = C_HEX8
CLASS_SOLID92 = C_SOLID92
CLASS_UNSUPPORTED = C_UNSUPPORTED

cdef int HEXF[6][4]
cdef int TETF[4][6]
_hf = ((0, 3, 2, 1), (4, 5, 6, 7), (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7))
_tf = ((0, 1, 2, 4, 5, 6), (0, 3, 1, 7, 8, 4), (1, 3, 2, 8, 9, 5), (2, 3, 0, 9, 7, 6))
for _i in range(6):
    for _j in range(4):
        HEXF[_i][_j] = _hf[_i][_j]
for _i in range(4):
    for _j in range(6):
        TETF[_i][_j] = _tf[_i][_j]


cdef inline bint _contains(const cnp.int64_t[::1] sorted_ids, Py_ssize_t n, cnp.int64_t x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_ids[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and sorted_ids[lo] == x


def compute_masks(const cnp.int64_t[:, ::1] conn,
                  const cnp.int64_t[::1] counts,
                  const cnp.int64_t[::1] surface_ids):
    """Bitmask per element: bit i set iff node i is not in surface_ids.

    surface_ids must be sorted ascending and duplicate-free.
    """
    cdef Py_ssize_t n = conn.shape[0]
    cdef Py_ssize_t ns = surface_ids.shape[0]
    masks_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] masks = masks_arr
    cdef Py_ssize_t e, i
    cdef cnp.int64_t bits
    with nogil:
        for e in range(n):
            bits = 0
            for i in range(counts[e]):
                if not _contains(surface_ids, ns, conn[e, i]):
                    bits |= (<cnp.int64_t>1) << i
            masks[e] = bits
    return masks_arr


cdef inline int _element_tris(cnp.int64_t cls, const cnp.int64_t[:, ::1] conn, Py_ssize_t e,
                              cnp.int64_t count, cnp.int64_t mask,
                              cnp.int64_t* out) noexcept nogil:
    """Write up to 16 candidate (a, b, c, face) quadruples; return how many."""
    cdef cnp.int64_t surv[10]
    cdef cnp.int64_t q[4]
    cdef cnp.int64_t t[6]
    cdef int nsurv = 0, ntri = 0, i, j, f
    cdef bint seen, dead
    cdef cnp.int64_t node

    if cls == C_SHELL:
        for i in range(count):
            if mask >> i & 1:
                continue
            node = conn[e, i]
            seen = False
            for j in range(nsurv):
                if surv[j] == node:
                    seen = True
                    break
            if not seen and nsurv < 10:
                surv[nsurv] = node
                nsurv += 1
        if nsurv == 3:
            ntri = _push(out, ntri, surv[0], surv[1], surv[2], 0)
        elif nsurv == 4:
            ntri = _push(out, ntri, surv[0], surv[1], surv[2], 0)
            ntri = _push(out, ntri, surv[0], surv[2], surv[3], 0)
    elif cls == C_HEX8:
        for f in range(6):
            dead = False
            for j in range(4):
                if mask >> HEXF[f][j] & 1:
                    dead = True
                    break
            if dead:
                continue
            for j in range(4):
                q[j] = conn[e, HEXF[f][j]]
            ntri = _push(out, ntri, q[0], q[1], q[2], f)
            ntri = _push(out, ntri, q[0], q[2], q[3], f)
    elif cls == C_SOLID92:
        for f in range(4):
            dead = False
            for j in range(6):
                if mask >> TETF[f][j] & 1:
                    dead = True
                    break
            if dead:
                continue
            for j in range(6):
                t[j] = conn[e, TETF[f][j]]
            # t = (c0, c1, c2, m01, m12, m20)
            ntri = _push(out, ntri, t[0], t[3], t[5], f)
            ntri = _push(out, ntri, t[3], t[1], t[4], f)
            ntri = _push(out, ntri, t[5], t[4], t[2], f)
            ntri = _push(out, ntri, t[3], t[4], t[5], f)
    return ntri


cdef inline int _push(cnp.int64_t* out, int ntri,
                      cnp.int64_t a, cnp.int64_t b, cnp.int64_t c, int f) noexcept nogil:
    # Degenerate collapsed faces produce repeated ids; drop those triangles.
    if a == b or b == c or a == c:
        return ntri
    out[4 * ntri] = a
    out[4 * ntri + 1] = b
    out[4 * ntri + 2] = c
    out[4 * ntri + 3] = f
    return ntri + 1


def emit_triangles(const cnp.int64_t[::1] class_codes,
                   const cnp.int64_t[:, ::1] conn,
                   const cnp.int64_t[::1] counts,
                   const cnp.int64_t[::1] masks,
                   const cnp.int64_t[::1] elem_ids):
    """Triangulate all elements.

    Returns an int64 array of shape (m, 6) with columns
    (a, b, c, element_id, face_index, tri_index), in element input order.
    """
    cdef Py_ssize_t n = conn.shape[0]
    cdef cnp.int64_t buf[64]
    cdef Py_ssize_t e
    cdef int k, ntri
    cdef cnp.int64_t total = 0, row = 0, face_index, tri_index

    with nogil:
        for e in range(n):
            total += _element_tris(class_codes[e], conn, e, counts[e], masks[e], buf)

    out_arr = np.empty((total, 6), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] out = out_arr
    with nogil:
        for e in range(n):
            ntri = _element_tris(class_codes[e], conn, e, counts[e], masks[e], buf)
            face_index = -1
            tri_index = 0
            for k in range(ntri):
                if buf[4 * k + 3] == face_index:
                    tri_index += 1
                else:
                    tri_index = 0
                face_index = buf[4 * k + 3]
                out[row, 0] = buf[4 * k]
                out[row, 1] = buf[4 * k + 1]
                out[row, 2] = buf[4 * k + 2]
                out[row, 3] = elem_ids[e]
                out[row, 4] = face_index
                out[row, 5] = tri_index
                row += 1
    return out_arr
