"""Kernel selection: compiled scan when built, numpy fallback otherwise.

IMPLEMENTATION names the active backend ("compiled" or "python"); the
compiled kernel only handles a single 64-vote bit plane, so wider profiles
always take the fallback.
"""

from __future__ import annotations

import numpy as np

from ._scan_py import dangerous_scan as _dangerous_py
from ._scan_py import dominance_masks

try:
    from ._scanc import dangerous_scan as _dangerous_c

    IMPLEMENTATION = "compiled"
except ImportError:
    _dangerous_c = None
    IMPLEMENTATION = "python"

Record = tuple[int, int, int, int, int, int]


def dangerous_scan(dom: np.ndarray, j: int) -> list[Record]:
    """(x, y, z, mask_x, mask_y, mask_z) records, ordered by triple."""
    if _dangerous_c is not None and dom.shape[0] == 1:
        plane = np.ascontiguousarray(dom[0])
        return [
            (x, y, z, int(a), int(b), int(c))
            for x, y, z, a, b, c in _dangerous_c(plane, j)
        ]
    return _dangerous_py(dom, j)


__all__ = ["IMPLEMENTATION", "dangerous_scan", "dominance_masks"]
