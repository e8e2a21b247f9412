"""15-bit word packing for parsed statements.

Each word is 5 bits of opcode code plus a 10-bit operand index. A
statement with k operands emits k words sharing its code; operand
index 1023 marks a zero-operand statement. Code 31 is structural:
with an operand index it names a label (labels live in the operand
table), with index 1023 it is a separator keeping two adjacent
same-opcode statements from merging on decode.

This is a project-local codebook layout, not the historical machine
instruction encoding; it honors the 15-bit word constraint and is
exactly invertible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .agc import AgcStatement, StatementKind
from .errors import CodebookMiss, CodebookOverflow, TruncatedStream

_STRUCT_CODE = 31
_NO_OPERAND = 1023
_MAX_OPCODES = 31
_MAX_OPERANDS = 1023


@dataclass(frozen=True)
class Codebook:
    """Dense opcode codes plus an ordered operand table."""

    opcode_codes: dict[str, int]
    operand_table: tuple[str, ...]
    _operand_index: dict[str, int] = field(init=False, repr=False, compare=False)
    _code_names: dict[int, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        codes = sorted(self.opcode_codes.values())
        if codes != list(range(len(codes))):
            raise ValueError("opcode codes must be dense from 0")
        if len(self.opcode_codes) > _MAX_OPCODES:
            raise CodebookOverflow("opcode", _MAX_OPCODES, len(self.opcode_codes))
        if len(self.operand_table) > _MAX_OPERANDS:
            raise CodebookOverflow("operand", _MAX_OPERANDS, len(self.operand_table))
        if len(set(self.operand_table)) != len(self.operand_table):
            raise ValueError("operand table contains duplicates")
        object.__setattr__(
            self, "_operand_index", {s: i for i, s in enumerate(self.operand_table)}
        )
        object.__setattr__(
            self, "_code_names", {c: m for m, c in self.opcode_codes.items()}
        )

    def to_json(self) -> str:
        return json.dumps(
            {"opcodes": self.opcode_codes, "operands": list(self.operand_table)},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, data: str) -> "Codebook":
        obj = json.loads(data)
        return cls(
            opcode_codes=dict(obj["opcodes"]),
            operand_table=tuple(obj["operands"]),
        )


@dataclass(frozen=True)
class BitStream:
    """Packed words: MSB-first bytes plus the exact bit count."""

    data: bytes
    bit_length: int

    def __post_init__(self):
        if self.bit_length < 0 or self.bit_length > 8 * len(self.data):
            raise ValueError("bit_length out of range for byte length")
        pad = 8 * len(self.data) - self.bit_length
        if pad and self.data and self.data[-1] & ((1 << pad) - 1):
            raise ValueError("unused trailing bits must be zero")


def build_codebook(statements: list[AgcStatement]) -> Codebook:
    """Codebook covering every opcode, operand, and label in the
    statements, in first-appearance order."""
    opcodes: dict[str, int] = {}
    operands: dict[str, None] = {}
    for st in statements:
        if st.kind is not StatementKind.CODE:
            continue
        if st.opcode not in opcodes:
            if len(opcodes) >= _MAX_OPCODES:
                raise CodebookOverflow("opcode", _MAX_OPCODES, len(opcodes) + 1)
            opcodes[st.opcode] = len(opcodes)
        for sym in ([st.label] if st.label else []) + list(st.operands):
            if sym not in operands:
                if len(operands) >= _MAX_OPERANDS:
                    raise CodebookOverflow("operand", _MAX_OPERANDS, len(operands) + 1)
                operands[sym] = None
    return Codebook(opcode_codes=opcodes, operand_table=tuple(operands))


def _pack(words: list[int]) -> BitStream:
    acc = 0
    nbits = 0
    out = bytearray()
    for w in words:
        acc = (acc << 15) | w
        nbits += 15
        while nbits >= 8:
            nbits -= 8
            out.append((acc >> nbits) & 0xFF)
    if nbits:
        out.append((acc << (8 - nbits)) & 0xFF)
    return BitStream(data=bytes(out), bit_length=15 * len(words))


def _unpack(bits: BitStream) -> list[int]:
    if bits.bit_length % 15:
        raise TruncatedStream(bits.bit_length)
    words = []
    acc = 0
    nbits = 0
    need = bits.bit_length // 15
    for byte in bits.data:
        acc = (acc << 8) | byte
        nbits += 8
        while nbits >= 15 and len(words) < need:
            nbits -= 15
            words.append((acc >> nbits) & 0x7FFF)
    return words


def encode_binary(statements: list[AgcStatement], book: Codebook) -> BitStream:
    """Pack CODE statements into 15-bit words. Labels emit a
    structural word first; a separator word is inserted wherever two
    adjacent operand-bearing statements share an opcode and the second
    has no label of its own."""
    words = []
    prev: AgcStatement | None = None
    for st in statements:
        if st.kind is not StatementKind.CODE:
            raise ValueError(f"cannot binary-encode a {st.kind.name} statement")
        if st.opcode not in book.opcode_codes:
            raise CodebookMiss("opcode", st.opcode)
        code = book.opcode_codes[st.opcode]
        if st.label:
            words.append((_STRUCT_CODE << 10) | _operand_idx(book, st.label))
        elif (
            prev is not None
            and prev.opcode == st.opcode
            and prev.operands
            and st.operands
        ):
            words.append((_STRUCT_CODE << 10) | _NO_OPERAND)
        if st.operands:
            for operand in st.operands:
                words.append((code << 10) | _operand_idx(book, operand))
        else:
            words.append((code << 10) | _NO_OPERAND)
        prev = st
    return _pack(words)


def _operand_idx(book: Codebook, symbol: str) -> int:
    idx = book._operand_index.get(symbol)
    if idx is None:
        raise CodebookMiss("operand", symbol)
    return idx


def decode_binary(bits: BitStream, book: Codebook) -> list[AgcStatement]:
    """Exact inverse of encode_binary over its image."""
    statements: list[AgcStatement] = []
    pending_label: str | None = None
    current: AgcStatement | None = None

    def close():
        nonlocal current
        if current is not None:
            statements.append(current)
            current = None

    for word in _unpack(bits):
        code, idx = word >> 10, word & 0x3FF
        if code == _STRUCT_CODE:
            close()
            if idx == _NO_OPERAND:
                continue
            pending_label = _operand_sym(book, idx)
            continue
        opcode = book._code_names.get(code)
        if opcode is None:
            raise CodebookMiss("opcode", str(code))
        if idx == _NO_OPERAND:
            close()
            statements.append(
                AgcStatement(
                    kind=StatementKind.CODE,
                    label=pending_label,
                    opcode=opcode,
                    operands=[],
                )
            )
            pending_label: str | None = None
            continue
        operand = _operand_sym(book, idx)
        if current is not None and current.opcode == opcode and pending_label is None:
            current.operands.append(operand)
        else:
            close()
            current = AgcStatement(
                kind=StatementKind.CODE,
                label=pending_label,
                opcode=opcode,
                operands=[operand],
            )
            pending_label: str | None = None
    close()
    if pending_label is not None:
        raise TruncatedStream(bits.bit_length)
    return statements


def _operand_sym(book: Codebook, idx: int) -> str:
    if idx >= len(book.operand_table):
        raise CodebookMiss("operand", str(idx))
    return book.operand_table[idx]
