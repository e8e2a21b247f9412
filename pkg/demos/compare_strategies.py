"""
Three ways to press the same selection
======================================

FullBinary packs every statement into 15-bit words, TokenizedText
substitutes mnemonics and keeps the text readable, and Hybrid stores
the famous excerpts verbatim while tokenizing the rest. All three end
as raw deflate streams; the table shows what each trade buys.
"""

from fractions import Fraction

from relicpress import DEFAULT_DICTIONARY, compare_strategies, curated_manifest

manifest = curated_manifest()
print(f"selection: {len(manifest.sections)} sections"
      f" from {len(manifest.files)} inventory rows")
print()

header = ("strategy", "bytes", "ratio", "critical kept", "of codebase")
print(f"{header[0]:<14} {header[1]:>6} {header[2]:>10} {header[3]:>13} {header[4]:>11}")
for row in compare_strategies(manifest, DEFAULT_DICTIONARY):
    ratio = f"{round(Fraction(row.ratio_num, row.ratio_den))}:1"
    print(
        f"{row.strategy:<14} {row.compressed_size:>6} {ratio:>10}"
        f" {row.pct_critical_preserved:>12.2%} {row.pct_total:>11.2%}"
    )

# The ratios are huge because the selection is a handful of snippets
# measured against the full inventory byte counts. Hybrid wins on size
# even while carrying its expanded sections twice (verbatim plus in
# the compressed core).
