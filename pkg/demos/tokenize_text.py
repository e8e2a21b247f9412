"""
Dictionary compression of assembly text
=======================================

Frequent mnemonics collapse to single characters. The substitution is
whole-word and reversible: any character that would collide with a
token is escaped on the way in and restored on the way out.
"""

from relicpress import DEFAULT_DICTIONARY, detokenize, tokenize

SNIPPET = """\
P63LM TC PHASCHNG
TC BANKCALL
CAF ZERO
TS WHICH
TC BANKCALL
"""

packed = tokenize(SNIPPET, DEFAULT_DICTIONARY)
print("original :", len(SNIPPET), "bytes")
print("tokenized:", len(packed), "bytes")
print()
print(packed)

# Whole words only: TCAA stays TCAA even though TC and CA are tokens.
print(tokenize("TCAA NEXT", DEFAULT_DICTIONARY))

# Text that happens to contain token characters survives via escaping.
tricky = "OCT a OCT b"
packed_tricky = tokenize(tricky, DEFAULT_DICTIONARY)
print(packed_tricky)
print("inverse exact:", detokenize(packed_tricky, DEFAULT_DICTIONARY) == tricky)
