#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Builds a large structured hex grid, runs the two hot stages (node-map
computation and triangulation) through both implementations on identical
arrays, checks the outputs match, and prints timings.

Usage: python benchmarks/bench_kernels.py [grid-edge-cells] [repeats]
"""

import sys
import time

import numpy as np

from fea2vr import _pykernels
from fea2vr.synthetic import HexGrid

try:
    from fea2vr import _ckernels
except ImportError:
    _ckernels = None


def grid_arrays(n):
    grid = HexGrid(n, n, n)
    elements = grid.elements()
    count = len(elements)
    conn = np.zeros((count, 10), dtype=np.int64)
    for i, corners in enumerate(elements):
        conn[i, :8] = corners
    counts = np.full(count, 8, dtype=np.int64)
    class_codes = np.full(count, _pykernels.CLASS_HEX8, dtype=np.int64)
    elem_ids = np.arange(1, count + 1, dtype=np.int64)
    surface = np.fromiter(sorted(grid.boundary_node_ids()), dtype=np.int64)
    return class_codes, conn, counts, elem_ids, surface


def best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    class_codes, conn, counts, elem_ids, surface = grid_arrays(n)
    print(f"grid: {n}x{n}x{n} = {conn.shape[0]} hex elements, "
          f"{surface.shape[0]} surface nodes, repeats={repeats}")

    t_py_mask, masks_py = best_of(repeats, _pykernels.compute_masks, conn, counts, surface)
    t_py_emit, rows_py = best_of(
        repeats, _pykernels.emit_triangles, class_codes, conn, counts, masks_py, elem_ids
    )
    print(f"python  compute_masks  {t_py_mask * 1e3:9.2f} ms")
    print(f"python  emit_triangles {t_py_emit * 1e3:9.2f} ms   ({rows_py.shape[0]} triangles)")

    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return

    t_c_mask, masks_c = best_of(repeats, _ckernels.compute_masks, conn, counts, surface)
    t_c_emit, rows_c = best_of(
        repeats, _ckernels.emit_triangles, class_codes, conn, counts, masks_c, elem_ids
    )
    print(f"c       compute_masks  {t_c_mask * 1e3:9.2f} ms   ({t_py_mask / t_c_mask:6.1f}x)")
    print(f"c       emit_triangles {t_c_emit * 1e3:9.2f} ms   ({t_py_emit / t_c_emit:6.1f}x)")

    assert np.array_equal(masks_py, masks_c), "mask outputs differ"
    assert np.array_equal(rows_py, rows_c), "triangle outputs differ"
    print("outputs identical across implementations")


if __name__ == "__main__":
    main()
