"""
Packing statements into 15-bit words
====================================

The flight computer used 15-bit words, and the densest strategy here
does the same: each word is a 5-bit opcode index plus a 10-bit operand
index into a codebook built from the statements themselves.
"""

from relicpress import (
    StatementKind,
    build_codebook,
    decode_binary,
    encode_binary,
    parse_agc_source,
)

SOURCE = """\
P63LM TC PHASCHNG
TC BANKCALL
CAF ZERO
TS WHICH
"""

statements = [
    s for s in parse_agc_source(SOURCE) if s.kind is StatementKind.CODE
]

# The codebook is not shipped separately: the decoder rebuilds it from
# the same selection, so both sides agree on every index.
book = build_codebook(statements)
print("opcodes :", dict(book.opcode_codes))
print("operands:", book.operand_table)

bits = encode_binary(statements, book)
print()
print("packed  :", bits.data.hex(" "))
print("bits    :", bits.bit_length, "=", bits.bit_length // 15, "words x 15")

# Six words for four statements: one label word, four operand words,
# and one separator keeping the two adjacent TC statements apart.
decoded = decode_binary(bits, book)
print()
print("decode inverts encode:", [s.opcode for s in decoded])
