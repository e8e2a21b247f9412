"""Cross-checks against an independently implemented decoder.

The fixed-symbol hashes pin the exact rendered output so an encoder
change that still round trips through our own decoder is caught.
"""

import hashlib

import numpy as np
import pytest

from relicpress.qr import QrSymbolSpec, encode_symbol, render

cv2 = pytest.importorskip("cv2")

# (payload, version, ecc, sha256 of the rendered PGM)
FIXED_SYMBOLS = [
    (
        b"POODOO 1202",
        1,
        "M",
        "61e7048a74dc64fbcf0136238c14c4d72c0013e5b9e64f8eabbddda49e78ea4a",
    ),
    (
        b"NOUN 62 VERB 16 " * 8,
        7,
        "L",
        "c08c5d8ba688e81e6c2d4ea914ba2d307bf19ef318c475be753748dc554c1f3e",
    ),
    (
        b"TC BANKCALL\nCADR P63SPOT\nCAF ZERO\n" * 20,
        25,
        "L",
        "14d378719e68a05f96da7f2bdfbaef112c91dafa9abf5d860c3fef16380a91ff",
    ),
]


def _spec(version, ecc):
    return QrSymbolSpec(version=version, ecc=ecc, module_px=4, quiet_zone=4)


def _pixels(pgm: bytes) -> np.ndarray:
    tokens = pgm.split()
    width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    grid = np.array(tokens[4:], dtype=np.uint8).reshape(height, width)
    return (grid * (255 // maxval)).astype(np.uint8)


@pytest.mark.parametrize(
    "payload,version,ecc,digest",
    FIXED_SYMBOLS,
    ids=[f"v{v}{e}" for _, v, e, _ in FIXED_SYMBOLS],
)
def test_rendered_symbol_is_frozen(payload, version, ecc, digest):
    spec = _spec(version, ecc)
    pgm = render(encode_symbol(payload, spec), spec, format="PGM")
    assert hashlib.sha256(pgm).hexdigest() == digest


@pytest.mark.parametrize(
    "payload,version,ecc,digest",
    FIXED_SYMBOLS,
    ids=[f"v{v}{e}" for _, v, e, _ in FIXED_SYMBOLS],
)
def test_opencv_reads_our_symbols(payload, version, ecc, digest):
    # detectAndDecode gives up on dense symbols, so hand the detector
    # the exact corner pixels and let it do only sampling and decode
    spec = _spec(version, ecc)
    matrix = encode_symbol(payload, spec)
    pixels = _pixels(render(matrix, spec, format="PGM"))
    margin = spec.quiet_zone * spec.module_px
    edge = matrix.size * spec.module_px
    corners = np.array(
        [
            [
                [margin, margin],
                [margin + edge - 1, margin],
                [margin + edge - 1, margin + edge - 1],
                [margin, margin + edge - 1],
            ]
        ],
        dtype=np.float32,
    )
    text, _ = cv2.QRCodeDetector().decode(pixels, corners)
    assert text.encode("utf-8") == payload
