# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled triple-scan kernel for profiles with at most 64 votes.

Mirrors _scan_py.dangerous_scan for a single uint64 bit plane; the facade in
_scan.py routes here when available and falls back otherwise.
"""


def dangerous_scan(unsigned long long[:, :] dom, int j):
    """All (x, y, z, mask_x, mask_y, mask_z) with x < y < z, masks nonzero."""
    cdef Py_ssize_t m = dom.shape[0]
    cdef Py_ssize_t x, y, z
    cdef unsigned long long ca, cb, cc
    cdef unsigned long long dxy, dyx, dxz, dzx, dyz, dzy
    if j < 1 or j > 3:
        raise ValueError("position flag must be 1, 2 or 3")
    out = []
    for x in range(m - 2):
        for y in range(x + 1, m - 1):
            dxy = dom[x, y]
            dyx = dom[y, x]
            for z in range(y + 1, m):
                dxz = dom[x, z]
                dzx = dom[z, x]
                dyz = dom[y, z]
                dzy = dom[z, y]
                if j == 1:
                    ca = dxy & dxz
                    cb = dyx & dyz
                    cc = dzx & dzy
                elif j == 2:
                    ca = (dyx & dxz) | (dzx & dxy)
                    cb = (dxy & dyz) | (dzy & dyx)
                    cc = (dxz & dzy) | (dyz & dzx)
                else:
                    ca = dyx & dzx
                    cb = dxy & dzy
                    cc = dxz & dyz
                if ca != 0 and cb != 0 and cc != 0:
                    out.append((x, y, z, ca, cb, cc))
    return out
