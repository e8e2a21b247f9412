"""Byte-mode symbol encoder with automatic mask selection."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import CapacityExceeded
from . import galois, structure, tables


@dataclass(frozen=True)
class QrSymbolSpec:
    """Rendering and robustness parameters for one symbol."""

    version: int
    ecc: str = "L"
    module_px: int = 4
    quiet_zone: int = 4

    def __post_init__(self):
        if not 1 <= self.version <= 40:
            raise ValueError(f"version out of range: {self.version}")
        if self.ecc not in tables.ECC_LEVELS:
            raise ValueError(f"unknown ecc level: {self.ecc!r}")
        if self.module_px < 1:
            raise ValueError("module_px must be positive")
        if self.quiet_zone < 0:
            raise ValueError("quiet_zone must be non-negative")


@dataclass(eq=False)
class QrMatrix:
    """A finished symbol: square module grid, dark=True."""

    size: int
    modules: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.modules = np.asarray(self.modules, dtype=bool)
        if self.modules.shape != (self.size, self.size):
            raise ValueError("modules grid does not match declared size")

    @property
    def version(self) -> int:
        return (self.size - 17) // 4

    def __eq__(self, other):
        if not isinstance(other, QrMatrix):
            return NotImplemented
        return self.size == other.size and bool(
            np.array_equal(self.modules, other.modules)
        )


def _build_bitstream(payload: bytes, version: int, ecc: str) -> bytes:
    """Byte-mode segment, terminator, and pad codewords, as the full
    data-codeword sequence (not yet interleaved)."""
    n_data = tables.data_codewords(version, ecc)
    cclen = tables.char_count_bits(version)
    bits = []
    bits.extend([0, 1, 0, 0])
    for i in range(cclen - 1, -1, -1):
        bits.append((len(payload) >> i) & 1)
    for byte in payload:
        for i in range(7, -1, -1):
            bits.append((byte >> i) & 1)
    # terminator: up to four zero bits, then pad to a byte boundary
    bits.extend([0] * min(4, n_data * 8 - len(bits)))
    bits.extend([0] * (-len(bits) % 8))
    out = bytearray()
    for i in range(0, len(bits), 8):
        out.append(int("".join(map(str, bits[i : i + 8])), 2))
    pads = (0xEC, 0x11)
    for i in range(n_data - len(out)):
        out.append(pads[i % 2])
    return bytes(out)


def _interleave(data: bytes, version: int, ecc: str) -> bytes:
    """Split into RS blocks, append ECC, and interleave codewords
    round-robin (data first, then ECC)."""
    plan = tables.block_plan(version, ecc)
    blocks = []
    offset = 0
    for total, dlen in plan:
        chunk = data[offset : offset + dlen]
        offset += dlen
        blocks.append((chunk, galois.rs_encode_block(chunk, total - dlen)))
    out = bytearray()
    max_d = max(len(b[0]) for b in blocks)
    for i in range(max_d):
        for chunk, _ in blocks:
            if i < len(chunk):
                out.append(chunk[i])
    max_e = max(len(b[1]) for b in blocks)
    for i in range(max_e):
        for _, ecc_bytes in blocks:
            if i < len(ecc_bytes):
                out.append(ecc_bytes[i])
    return bytes(out)


def _write_format(mat: np.ndarray, ecc: str, mask: int) -> None:
    value = tables.bch_format_info(ecc, mask)
    copy_a, copy_b = structure.format_positions(mat.shape[0])
    for i in range(15):
        bit = bool((value >> i) & 1)
        mat[copy_a[i]] = bit
        mat[copy_b[i]] = bit


def _write_version(mat: np.ndarray, version: int) -> None:
    if version < 7:
        return
    value = tables.bch_version_info(version)
    top_right, bottom_left = structure.version_positions(mat.shape[0])
    for i in range(18):
        bit = bool((value >> i) & 1)
        mat[top_right[i]] = bit
        mat[bottom_left[i]] = bit


def _run_score(mat: np.ndarray) -> int:
    """Adjacent same-color runs of length 5+ in rows: 3 + (len - 5)."""
    score = 0
    for row in np.asarray(mat, dtype=np.int8):
        idx = np.flatnonzero(np.diff(row))
        lengths = np.diff(np.r_[0, idx + 1, row.size])
        long = lengths[lengths >= 5]
        score += int(long.sum() - 2 * long.size)
    return score


_FINDER_RUN_A = np.array([1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0], dtype=np.int8)
_FINDER_RUN_B = _FINDER_RUN_A[::-1].copy()


def _finder_score(mat: np.ndarray) -> int:
    """Occurrences of the 1:1:3:1:1 finder run flanked by four light
    modules, rows only."""
    m = np.asarray(mat, dtype=np.int8)
    if m.shape[1] < 11:
        return 0
    win = np.lib.stride_tricks.sliding_window_view(m, 11, axis=1)
    hits = (win == _FINDER_RUN_A).all(axis=2) | (win == _FINDER_RUN_B).all(axis=2)
    return int(hits.sum()) * 40


def penalty_score(mat: np.ndarray) -> int:
    """The four standard mask-evaluation penalties, summed."""
    n1 = _run_score(mat) + _run_score(mat.T)
    a = mat[:-1, :-1]
    same = (a == mat[1:, :-1]) & (a == mat[:-1, 1:]) & (a == mat[1:, 1:])
    n2 = 3 * int(same.sum())
    n3 = _finder_score(mat) + _finder_score(mat.T)
    dark = int(mat.sum())
    total = mat.size
    n4 = 10 * int(abs(100 * dark - 50 * total) // (5 * total))
    return n1 + n2 + n3 + n4


def encode_symbol(payload: bytes, spec: QrSymbolSpec) -> QrMatrix:
    """Encode payload bytes into a symbol, choosing the mask with the
    lowest penalty (ties break toward the lowest mask index)."""
    version, ecc = spec.version, spec.ecc
    limit = tables.capacity(version, ecc)
    if len(payload) > limit:
        raise CapacityExceeded(len(payload), ecc, limit)

    codewords = _interleave(_build_bitstream(payload, version, ecc), version, ecc)
    base, _func, rows, cols = structure.build_structure(version)
    bits = np.unpackbits(np.frombuffer(codewords, dtype=np.uint8))
    data_bits = np.zeros(rows.size, dtype=bool)
    data_bits[: bits.size] = bits.astype(bool)

    grids = structure.mask_grids(version)
    best = None
    for mask in range(8):
        mat = base.copy()
        mat[rows, cols] = data_bits ^ grids[mask][rows, cols]
        _write_format(mat, ecc, mask)
        _write_version(mat, version)
        score = penalty_score(mat)
        if best is None or score < best[0]:
            best = (score, mat)
    return QrMatrix(size=base.shape[0], modules=best[1])
