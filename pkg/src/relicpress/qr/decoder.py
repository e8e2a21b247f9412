"""Structural symbol decoder.

Recovers the byte-mode payload from a module matrix: validates the
function patterns, reads format info from both redundant copies,
unmasks, de-interleaves, and checks RS syndromes per block. Detection
only: any nonzero syndrome raises rather than attempting correction,
which is all self-verification needs.
"""

from __future__ import annotations

import numpy as np

from ..errors import CorruptSymbol, NotAQrSymbol
from . import galois, structure, tables

_FINDER = np.zeros((7, 7), dtype=bool)
_FINDER[0, :] = _FINDER[6, :] = _FINDER[:, 0] = _FINDER[:, 6] = True
_FINDER[2:5, 2:5] = True


def _version_from_size(size: int) -> int:
    version, rem = divmod(size - 17, 4)
    if rem != 0 or not 1 <= version <= 40:
        raise NotAQrSymbol(f"invalid matrix size {size}")
    return version


def _check_finders(mat: np.ndarray) -> None:
    size = mat.shape[0]
    corners = [(0, 0), (0, size - 7), (size - 7, 0)]
    for r, c in corners:
        if not np.array_equal(mat[r : r + 7, c : c + 7], _FINDER):
            raise NotAQrSymbol(f"finder pattern missing at ({r}, {c})")


def _read_bits(mat: np.ndarray, positions) -> int:
    value = 0
    for i, pos in enumerate(positions):
        if mat[pos]:
            value |= 1 << i
    return value


def _hamming(a: int, b: int) -> int:
    return bin(a ^ b).count("1")


def _read_format(mat: np.ndarray) -> tuple[str, int]:
    """Decode (ecc, mask) from either format copy, tolerating up to
    three flipped modules per copy."""
    copy_a, copy_b = structure.format_positions(mat.shape[0])
    for value in (_read_bits(mat, copy_a), _read_bits(mat, copy_b)):
        if value in tables.FORMAT_SEQUENCES:
            return tables.FORMAT_SEQUENCES[value]
    for value in (_read_bits(mat, copy_a), _read_bits(mat, copy_b)):
        best = min(tables.FORMAT_SEQUENCES, key=lambda seq: _hamming(seq, value))
        if _hamming(best, value) <= 3:
            return tables.FORMAT_SEQUENCES[best]
    raise NotAQrSymbol("format information unreadable")


def _check_version_info(mat: np.ndarray, version: int) -> None:
    if version < 7:
        return
    expected = tables.bch_version_info(version)
    top_right, bottom_left = structure.version_positions(mat.shape[0])
    for positions in (top_right, bottom_left):
        if _hamming(_read_bits(mat, positions), expected) <= 3:
            return
    raise NotAQrSymbol("version information does not match matrix size")


def _deinterleave(codewords: bytes, version: int, ecc: str):
    """Invert the round-robin interleaving, returning one
    (data, ecc_codewords) pair per block."""
    plan = tables.block_plan(version, ecc)
    data_parts = [bytearray() for _ in plan]
    ecc_parts = [bytearray() for _ in plan]
    it = iter(codewords)
    max_d = max(d for _, d in plan)
    for i in range(max_d):
        for b, (_, dlen) in enumerate(plan):
            if i < dlen:
                data_parts[b].append(next(it))
    max_e = max(t - d for t, d in plan)
    for i in range(max_e):
        for b, (total, dlen) in enumerate(plan):
            if i < total - dlen:
                ecc_parts[b].append(next(it))
    return [(bytes(d), bytes(e)) for d, e in zip(data_parts, ecc_parts)]


def decode_symbol(matrix) -> bytes:
    """Recover the payload from a QrMatrix (or bare module grid)."""
    mat = np.asarray(getattr(matrix, "modules", matrix), dtype=bool)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotAQrSymbol("matrix is not square")
    version = _version_from_size(mat.shape[0])
    _check_finders(mat)
    _check_version_info(mat, version)
    ecc, mask = _read_format(mat)

    _base, _func, rows, cols = structure.build_structure(version)
    grid = structure.mask_grids(version)[mask]
    bits = mat[rows, cols] ^ grid[rows, cols]
    n_codewords = tables.total_codewords(version)
    codewords = np.packbits(bits[: n_codewords * 8]).tobytes()

    blocks = _deinterleave(codewords, version, ecc)
    data = bytearray()
    for chunk, ecc_bytes in blocks:
        if not galois.block_is_valid(chunk + ecc_bytes, len(ecc_bytes)):
            raise CorruptSymbol("nonzero RS syndrome")
        data.extend(chunk)

    return _parse_bitstream(bytes(data), version)


def _parse_bitstream(data: bytes, version: int) -> bytes:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))

    def take(n: int) -> int:
        nonlocal pos
        if pos + n > bits.size:
            raise CorruptSymbol("data stream truncated")
        value = 0
        for b in bits[pos : pos + n]:
            value = (value << 1) | int(b)
        pos += n
        return value

    pos = 0
    mode = take(4)
    if mode != 0b0100:
        raise CorruptSymbol(f"unsupported mode indicator {mode:04b}")
    count = take(tables.char_count_bits(version))
    if pos + count * 8 > bits.size:
        raise CorruptSymbol("character count exceeds data stream")
    payload = np.packbits(bits[pos : pos + count * 8]).tobytes()
    return payload
