"""
From bytes to modules and back
==============================

Byte-mode QR encoding end to end: pick the smallest version that fits,
add Reed-Solomon codewords, interleave, place, mask, and read the
result straight back off the matrix.
"""

from relicpress import (
    QrSymbolSpec,
    capacity,
    decode_symbol,
    encode_symbol,
    render,
    select_version,
)

MESSAGE = b"SEE YOU AT THE NEXT ONE. GO FLIGHT."

# Version selection is a table lookup: version 40 at level L tops out
# at 2953 bytes, our hard payload cap.
version = select_version(len(MESSAGE), "L")
print(f"{len(MESSAGE)} bytes -> version {version}"
      f" (capacity {capacity(version, 'L')} at L)")

spec = QrSymbolSpec(version=version, ecc="L", module_px=1, quiet_zone=2)
matrix = encode_symbol(MESSAGE, spec)
print(f"matrix {matrix.size}x{matrix.size} modules")
print()

# Terminal rendering: two modules per character cell.
for row in matrix.modules:
    print("".join("##" if cell else "  " for cell in row))

print()
print("decoded:", decode_symbol(matrix).decode("ascii"))

# The same matrix renders to portable formats for files and print.
pgm = render(matrix, spec, "PGM")
svg = render(matrix, spec, "SVG")
print(f"PGM {len(pgm)} bytes, SVG {len(svg)} bytes")
