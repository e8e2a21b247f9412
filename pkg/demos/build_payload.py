"""
Assembling the self-extracting page
===================================

The artifact is one HTML document: a tiny shell, the token dictionary,
the expanded sections as template literals, the compressed core as
base64, and a decoder stub. Opening it in a browser reconstructs and
displays the original text; no server, no dependencies.
"""

from relicpress import (
    CompressedBlob,
    DEFAULT_DICTIONARY,
    assemble_payload,
    budget_report,
    curated_manifest,
    default_stub,
    extract_payload,
    inflate_raw,
    run_strategy,
)

manifest = curated_manifest()
body, _ = run_strategy("Hybrid", manifest, DEFAULT_DICTIONARY)
blob = CompressedBlob(data=body, original_size=len(inflate_raw(body)))

artifact = assemble_payload(
    blob, manifest.sections, DEFAULT_DICTIONARY, default_stub()
)
print(f"total payload: {artifact.total_bytes} bytes ({artifact.mode})")
print()

# Where the bytes go. The stub and dictionary are fixed costs; the
# sections dominate because they are stored uncompressed on purpose.
for name, size, pct in budget_report(artifact):
    print(f"  {name:<9} {size:>5} B  {pct:>5.1f}%")

# The same document, read back without a browser: decode the blob,
# splice the tokens, render the sections.
document = extract_payload(artifact.html)
print()
print(document[:200])
print("...")
