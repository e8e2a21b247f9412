"""GF(256) arithmetic and Reed-Solomon codec primitives.

Field: GF(2^8) with reducing polynomial x^8+x^4+x^3+x^2+1 (0x11D),
generator element 2. Generator polynomials take consecutive roots
starting at alpha^0.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

_EXP = np.zeros(512, dtype=np.uint8)
_LOG = np.zeros(256, dtype=np.int64)

_x = 1
for _i in range(255):
    _EXP[_i] = _x
    _LOG[_x] = _i
    _x <<= 1
    if _x & 0x100:
        _x ^= 0x11D
# doubled so exponent sums up to 508 need no modulo
_EXP[255:510] = _EXP[:255]

EXP = _EXP
LOG = _LOG


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(_EXP[int(_LOG[a]) + int(_LOG[b])])


@lru_cache(maxsize=None)
def generator_poly(ecc_len: int) -> tuple[int, ...]:
    """Coefficients of prod(x - alpha^i), i < ecc_len, highest degree
    first, leading coefficient omitted (it is always 1)."""
    poly = [1]
    for i in range(ecc_len):
        root = int(_EXP[i])
        nxt = poly + [0]
        for j, coef in enumerate(poly):
            nxt[j + 1] ^= gf_mul(coef, root)
        poly = nxt
    return tuple(poly[1:])


@lru_cache(maxsize=None)
def _scaled_generator(ecc_len: int) -> np.ndarray:
    """256 x ecc_len table: row f holds the generator tail scaled by f,
    so one division step is a single slice XOR."""
    gen = np.array(generator_poly(ecc_len), dtype=np.uint8)
    table = np.zeros((256, ecc_len), dtype=np.uint8)
    nz = gen != 0
    log_gen = _LOG[gen[nz]]
    for f in range(1, 256):
        table[f, nz] = _EXP[int(_LOG[f]) + log_gen]
    return table


def rs_encode_block(data: bytes, ecc_len: int) -> bytes:
    """ECC codewords for one block: remainder of data * x^ecc_len
    divided by the generator polynomial."""
    table = _scaled_generator(ecc_len)
    buf = np.zeros(len(data) + ecc_len, dtype=np.uint8)
    buf[: len(data)] = np.frombuffer(data, dtype=np.uint8)
    for i in range(len(data)):
        f = buf[i]
        if f:
            buf[i + 1 : i + 1 + ecc_len] ^= table[f]
    return buf[len(data) :].tobytes()


def rs_syndromes(block: bytes, ecc_len: int) -> np.ndarray:
    """Syndromes S_j = C(alpha^j) for j < ecc_len, as a uint8 array.
    All zero iff the block is a valid codeword."""
    c = np.frombuffer(block, dtype=np.uint8)
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(ecc_len, dtype=np.uint8)
    logs = _LOG[c[nz]]
    degrees = (len(c) - 1 - nz).astype(np.int64)
    j = np.arange(ecc_len, dtype=np.int64)[:, None]
    exponents = (logs[None, :] + j * degrees[None, :]) % 255
    terms = _EXP[:255][exponents]
    return np.bitwise_xor.reduce(terms, axis=1)


def block_is_valid(block: bytes, ecc_len: int) -> bool:
    return not rs_syndromes(block, ecc_len).any()
