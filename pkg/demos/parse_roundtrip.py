"""
Parsing AGC assembly without losing a byte
==========================================

Every line of a source file becomes one statement record. Joining the
records back together reproduces the input exactly, whitespace, column
quirks and all, which is what makes the later compression stages safe.
"""

from relicpress import StatementKind, parse_agc_source, serialize_statements

SOURCE = """\
# TRASHY LITTLE SUBROUTINES

P63LM\t\tTC\tPHASCHNG\t# mission phase change
\t\tTC\tBANKCALL\t# call into another bank
\t\tCAF\tZERO
\t\tTS\tWHICH

DELAYJOB\tCAF\tTWO\t\t# waitlist delay
"""

statements = parse_agc_source(SOURCE)

# Each record keeps the structural reading of its line: kind, optional
# label, opcode, operands, trailing comment.
for st in statements:
    if st.kind is StatementKind.CODE:
        print(f"{st.kind.name:8} label={st.label!r:12} {st.opcode:4} {st.operands}")
    else:
        print(f"{st.kind.name:8} {st.raw!r}")

# The raw text is retained on every record, so reassembly is exact.
rebuilt = serialize_statements(statements)
print()
print("round trip exact:", rebuilt == SOURCE)
