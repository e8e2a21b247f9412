"""Symbol rendering (SVG, PGM) and PGM re-ingestion.

Canonical PGM serialization: plain-text P2, maxval 1, dark=0, one
image row per text line with single-space separators. This keeps the
file diffable and bit-stable across runs.
"""

from __future__ import annotations

import numpy as np

from ..errors import NotAQrSymbol
from .encoder import QrMatrix, QrSymbolSpec


def _pixel_grid(matrix: QrMatrix, spec: QrSymbolSpec) -> np.ndarray:
    """Dark=True pixel grid with quiet zone and module scaling applied."""
    q, m = spec.quiet_zone, spec.module_px
    size = matrix.size
    padded = np.zeros((size + 2 * q, size + 2 * q), dtype=bool)
    padded[q : q + size, q : q + size] = matrix.modules
    return np.repeat(np.repeat(padded, m, axis=0), m, axis=1)


def _render_pgm(matrix: QrMatrix, spec: QrSymbolSpec) -> bytes:
    pixels = _pixel_grid(matrix, spec)
    side = pixels.shape[0]
    lines = [f"P2", f"{side} {side}", "1"]
    light = (~pixels).astype(np.uint8)
    for row in light:
        lines.append(" ".join(map(str, row)))
    return ("\n".join(lines) + "\n").encode("ascii")


def _render_svg(matrix: QrMatrix, spec: QrSymbolSpec) -> bytes:
    q, m = spec.quiet_zone, spec.module_px
    side = (matrix.size + 2 * q) * m
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect width="{side}" height="{side}" fill="#ffffff"/>',
    ]
    # merge horizontal runs of dark modules into single rects
    for r, row in enumerate(matrix.modules):
        c = 0
        size = matrix.size
        while c < size:
            if row[c]:
                start = c
                while c < size and row[c]:
                    c += 1
                x = (q + start) * m
                y = (q + r) * m
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{(c - start) * m}" '
                    f'height="{m}" fill="#000000"/>'
                )
            else:
                c += 1
    parts.append("</svg>")
    return "\n".join(parts).encode("ascii")


def render(matrix: QrMatrix, spec: QrSymbolSpec, format: str = "PGM") -> bytes:
    """Render to the named format; output side length in pixels is
    (size + 2 * quiet_zone) * module_px."""
    if format == "PGM":
        return _render_pgm(matrix, spec)
    if format == "SVG":
        return _render_svg(matrix, spec)
    raise ValueError(f"unknown render format: {format!r}")


def _pgm_tokens(data: bytes):
    for line in data.split(b"\n"):
        line = line.split(b"#", 1)[0]
        yield from line.split()


def matrix_from_pgm(data: bytes) -> QrMatrix:
    """Parse a rendered PGM back into a module matrix, inferring the
    module scale from the finder edge and the quiet zone from the
    first dark pixel."""
    tokens = _pgm_tokens(data)
    try:
        magic = next(tokens)
        if magic != b"P2":
            raise NotAQrSymbol(f"unsupported PGM magic {magic!r}")
        width = int(next(tokens))
        height = int(next(tokens))
        maxval = int(next(tokens))
        values = np.array([int(t) for t in tokens], dtype=np.int64)
    except (StopIteration, ValueError) as exc:
        raise NotAQrSymbol("malformed PGM header or pixel data") from exc
    if maxval < 1 or values.size != width * height:
        raise NotAQrSymbol("PGM pixel count does not match header")
    dark = (2 * values < maxval).reshape(height, width)
    if width != height:
        raise NotAQrSymbol("image is not square")

    dark_rows = np.flatnonzero(dark.any(axis=1))
    if dark_rows.size == 0:
        raise NotAQrSymbol("image contains no dark pixels")
    r0 = int(dark_rows[0])
    row = dark[r0]
    c0 = int(np.flatnonzero(row)[0])
    run = 0
    while c0 + run < width and row[c0 + run]:
        run += 1
    # the first dark edge is a finder's 7-module top edge
    module_px, rem = divmod(run, 7)
    if module_px == 0 or rem != 0:
        raise NotAQrSymbol("cannot infer module scale from finder edge")
    quiet, rem_q = divmod(c0, module_px)
    if rem_q != 0 or r0 != c0:
        raise NotAQrSymbol("quiet zone is not module-aligned")
    size = width // module_px - 2 * quiet
    if size < 21 or (quiet + size) * module_px + quiet * module_px != width:
        raise NotAQrSymbol("image dimensions do not fit a symbol grid")

    crop = dark[
        quiet * module_px : (quiet + size) * module_px,
        quiet * module_px : (quiet + size) * module_px,
    ]
    blocks = crop.reshape(size, module_px, size, module_px)
    first = blocks[:, :1, :, :1]
    if not (blocks == first).all():
        raise NotAQrSymbol("module blocks are not uniform")
    return QrMatrix(size=size, modules=blocks[:, 0, :, 0])
