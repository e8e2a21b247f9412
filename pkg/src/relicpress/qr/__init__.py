"""QR symbol encoding, decoding, and rendering."""

from .decoder import decode_symbol
from .encoder import QrMatrix, QrSymbolSpec, encode_symbol, penalty_score
from .render import matrix_from_pgm, render
from .tables import capacity, select_version

__all__ = [
    "QrMatrix",
    "QrSymbolSpec",
    "capacity",
    "decode_symbol",
    "encode_symbol",
    "matrix_from_pgm",
    "penalty_score",
    "render",
    "select_version",
]
