"""Kernel selection: the compiled extension when built, pure Python otherwise.

Set FEA2VR_PURE=1 to force the pure-Python kernels (used by the benchmark and
by tests that exercise both implementations).
"""

from __future__ import annotations

import os

from fea2vr import _pykernels

if os.environ.get("FEA2VR_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from fea2vr import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

IMPLEMENTATION = "c" if _impl is not _pykernels else "python"

CLASS_SHELL = _pykernels.CLASS_SHELL
CLASS_HEX8 = _pykernels.CLASS_HEX8
CLASS_SOLID92 = _pykernels.CLASS_SOLID92
CLASS_UNSUPPORTED = _pykernels.CLASS_UNSUPPORTED

compute_masks = _impl.compute_masks
emit_triangles = _impl.emit_triangles
