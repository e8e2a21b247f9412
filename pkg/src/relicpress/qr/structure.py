"""Symbol geometry: function patterns, data-module placement order,
mask grids, and format/version bit positions.

Everything here is a pure function of the version, so results are
cached. Matrices are numpy bool arrays indexed [row, col], dark=True.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .tables import ALIGNMENT_POSITIONS, matrix_size


def _paint_finder(mat: np.ndarray, func: np.ndarray, row: int, col: int) -> None:
    # 7x7 finder: dark border, light ring, 3x3 dark core
    mat[row : row + 7, col : col + 7] = True
    mat[row + 1 : row + 6, col + 1 : col + 6] = False
    mat[row + 2 : row + 5, col + 2 : col + 5] = True
    func[row : row + 7, col : col + 7] = True


@lru_cache(maxsize=None)
def build_structure(version: int):
    """Base matrix with function patterns painted, the function-module
    mask, and the data placement order as (rows, cols) index arrays."""
    size = matrix_size(version)
    mat = np.zeros((size, size), dtype=bool)
    func = np.zeros((size, size), dtype=bool)

    # timing patterns first; the finders repaint their own edges
    rng = np.arange(size)
    mat[6, :] = rng % 2 == 0
    mat[:, 6] = rng % 2 == 0
    func[6, :] = True
    func[:, 6] = True

    _paint_finder(mat, func, 0, 0)
    _paint_finder(mat, func, 0, size - 7)
    _paint_finder(mat, func, size - 7, 0)
    # separators: one light module around each finder
    func[0:8, 0:8] = True
    func[0:8, size - 8 :] = True
    func[size - 8 :, 0:8] = True

    # alignment patterns, skipping the three finder corners
    centers = ALIGNMENT_POSITIONS[version]
    for r in centers:
        for c in centers:
            if (r < 9 and c < 9) or (r < 9 and c > size - 10) or (r > size - 10 and c < 9):
                continue
            mat[r - 2 : r + 3, c - 2 : c + 3] = True
            mat[r - 1 : r + 2, c - 1 : c + 2] = False
            mat[r, c] = True
            func[r - 2 : r + 3, c - 2 : c + 3] = True

    # format info areas (filled at encode time)
    func[0:9, 8] = True
    func[8, 0:9] = True
    func[8, size - 8 :] = True
    func[size - 8 :, 8] = True
    # dark module
    mat[size - 8, 8] = True

    # version info areas for versions 7+
    if version >= 7:
        func[0:6, size - 11 : size - 8] = True
        func[size - 11 : size - 8, 0:6] = True

    rows, cols = _placement_order(size, func)
    return mat, func, rows, cols


def _placement_order(size: int, func: np.ndarray):
    """Zigzag order: column pairs right to left (skipping the timing
    column), rows alternating upward and downward."""
    rows = []
    cols = []
    inc = -1
    row = size - 1
    col = size - 1
    while col > 0:
        if col == 6:
            col -= 1
        while True:
            for c in (col, col - 1):
                if not func[row, c]:
                    rows.append(row)
                    cols.append(c)
            row += inc
            if row < 0 or row >= size:
                row -= inc
                inc = -inc
                break
        col -= 2
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


_MASK_RULES = (
    lambda r, c: (r + c) % 2 == 0,
    lambda r, c: r % 2 == 0,
    lambda r, c: c % 3 == 0,
    lambda r, c: (r + c) % 3 == 0,
    lambda r, c: (r // 2 + c // 3) % 2 == 0,
    lambda r, c: (r * c) % 2 + (r * c) % 3 == 0,
    lambda r, c: ((r * c) % 2 + (r * c) % 3) % 2 == 0,
    lambda r, c: ((r * c) % 3 + (r + c) % 2) % 2 == 0,
)


@lru_cache(maxsize=None)
def mask_grids(version: int) -> np.ndarray:
    """All eight mask patterns as an (8, size, size) bool array."""
    size = matrix_size(version)
    r, c = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    return np.stack([rule(r, c) for rule in _MASK_RULES])


def format_positions(size: int):
    """The two 15-module format sequences as position lists; entry i
    holds bit i (LSB first) of the format value."""
    copy_a = []
    copy_b = []
    for i in range(15):
        if i < 6:
            copy_a.append((i, 8))
        elif i < 8:
            copy_a.append((i + 1, 8))
        else:
            copy_a.append((size - 15 + i, 8))
        if i < 8:
            copy_b.append((8, size - 1 - i))
        elif i == 8:
            copy_b.append((8, 7))
        else:
            copy_b.append((8, 14 - i))
    return copy_a, copy_b


def version_positions(size: int):
    """18-module version info blocks (top-right, bottom-left), entry i
    holding bit i of the version value."""
    top_right = [(i // 3, i % 3 + size - 11) for i in range(18)]
    bottom_left = [(i % 3 + size - 11, i // 3) for i in range(18)]
    return top_right, bottom_left
