"""Raw-deflate compression (RFC 1951, no container framing).

The payload inflates in browsers via the native decompression stream
in "deflate-raw" mode, so the blob must carry no zlib header or
checksum. Compression level 9 and a fixed strategy keep output
deterministic across runs on the same zlib build.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass

from .errors import InflateError


@dataclass(frozen=True)
class CompressedBlob:
    """A raw-deflate stream plus the size it inflates back to."""

    data: bytes
    original_size: int

    def __post_init__(self):
        if self.original_size < 0:
            raise ValueError("original_size must be non-negative")


def compress(data: bytes) -> CompressedBlob:
    comp = zlib.compressobj(9, zlib.DEFLATED, -zlib.MAX_WBITS, zlib.DEF_MEM_LEVEL, 0)
    out = comp.compress(data) + comp.flush()
    return CompressedBlob(data=out, original_size=len(data))


def decompress(blob: CompressedBlob) -> bytes:
    return inflate_raw(blob.data, expected_size=blob.original_size)


def inflate_raw(data: bytes, expected_size: int | None = None) -> bytes:
    """Inflate a bare RFC 1951 stream. The error offset is where the
    decompressor stopped consuming input."""
    dec = zlib.decompressobj(-zlib.MAX_WBITS)
    try:
        out = dec.decompress(data)
        out += dec.flush()
    except zlib.error as exc:
        consumed = len(data) - len(dec.unconsumed_tail)
        raise InflateError(consumed, str(exc)) from exc
    if not dec.eof:
        raise InflateError(len(data) - len(dec.unconsumed_tail), "stream ended mid-block")
    if expected_size is not None and len(out) != expected_size:
        raise InflateError(
            len(data), f"inflated to {len(out)} bytes, expected {expected_size}"
        )
    return out
