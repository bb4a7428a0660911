"""Pure numpy implementation of the triple-scan kernel.

Votes are packed into uint64 bit planes: plane p, bit b covers vote 64*p+b.
dominance_masks builds the pairwise dominance bitmasks; dangerous_scan
enumerates candidate triples whose three position classes are all nonempty.
"""

from __future__ import annotations

import numpy as np

U64 = np.uint64


def dominance_masks(ranks: np.ndarray) -> np.ndarray:
    """dom[p, x, y] has vote bit v set iff vote v ranks x above y.

    ranks: (n, m) integer positions, 0 = most preferred.
    Returns (planes, m, m) uint64 with planes = ceil(n/64), at least 1.
    """
    n, m = ranks.shape
    planes = max(1, (n + 63) // 64)
    dom = np.zeros((planes, m, m), dtype=U64)
    for v in range(n):
        above = ranks[v][:, None] < ranks[v][None, :]
        dom[v >> 6] |= above.astype(U64) << U64(v & 63)
    return dom


def _combine(cols: np.ndarray) -> int:
    # cols: (planes,) uint64 -> arbitrary-width Python int
    out = 0
    for p in range(cols.shape[0] - 1, -1, -1):
        out = (out << 64) | int(cols[p])
    return out


def dangerous_scan(dom: np.ndarray, j: int) -> list[tuple[int, int, int, int, int, int]]:
    """All (x, y, z, mask_x, mask_y, mask_z) with x < y < z, masks nonzero.

    mask_x holds the votes placing x at position j within {x, y, z}; a triple
    is reported iff all three masks are nonzero. Output is ordered by
    (x, y, z) ascending. Masks are Python ints (any vote count).
    """
    planes, m, _ = dom.shape
    out: list[tuple[int, int, int, int, int, int]] = []
    for x in range(m - 2):
        rest = m - x - 1
        iy, iz = np.triu_indices(rest, k=1)
        if iy.size == 0:
            continue
        ys = iy + x + 1
        zs = iz + x + 1
        dxy = dom[:, x, ys]
        dyx = dom[:, ys, x]
        dxz = dom[:, x, zs]
        dzx = dom[:, zs, x]
        dyz = dom[:, ys, zs]
        dzy = dom[:, zs, ys]
        if j == 1:
            ca = dxy & dxz
            cb = dyx & dyz
            cc = dzx & dzy
        elif j == 2:
            ca = (dyx & dxz) | (dzx & dxy)
            cb = (dxy & dyz) | (dzy & dyx)
            cc = (dxz & dzy) | (dyz & dzx)
        elif j == 3:
            ca = dyx & dzx
            cb = dxy & dzy
            cc = dxz & dyz
        else:
            raise ValueError("position flag must be 1, 2 or 3")
        ok = (ca != 0).any(axis=0) & (cb != 0).any(axis=0) & (cc != 0).any(axis=0)
        for h in np.nonzero(ok)[0]:
            out.append(
                (
                    x,
                    int(ys[h]),
                    int(zs[h]),
                    _combine(ca[:, h]),
                    _combine(cb[:, h]),
                    _combine(cc[:, h]),
                )
            )
    return out
