"""
The whole pipeline in one run
=============================

Selection manifest in, verified QR symbol out, using the same command
driver the `relicpress` console script wraps. Everything lands in a
build directory: payload.html, qr.pgm, qr.svg, report.tsv.
"""

import tempfile
from pathlib import Path

from relicpress import curated_manifest
from relicpress.cli import main

workdir = Path(tempfile.mkdtemp(prefix="relicpress-demo-"))
manifest_path = workdir / "manifest.json"
manifest_path.write_text(curated_manifest().to_json(), encoding="utf-8")

out = workdir / "build"
print("== build ==")
code = main([
    "build",
    "--manifest", str(manifest_path),
    "--strategy", "hybrid",
    "--budget",
    "--out", str(out),
])
print("exit", code)
print()

# verify re-reads everything from disk: decodes the symbol, compares
# it to the payload byte for byte, and re-extracts the document.
print("== verify ==")
code = main(["verify", str(out)])
print("exit", code)
print()

print("== report ==")
main(["report", "--manifest", str(manifest_path)])

print()
print("artifacts in", out)
