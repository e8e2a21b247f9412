"""
Generating a payload corpus for viewer parity testing
=====================================================

Writes N self-extracting payloads plus the document text the host
extraction produces for each. A viewer implementation is correct when
executing payload_NNN.html yields exactly payload_NNN.expected.txt.

Usage: python demos/make_parity_corpus.py OUT_DIR [COUNT]
"""

import random
import string
import sys
from pathlib import Path

from relicpress import (
    DEFAULT_DICTIONARY,
    SectionSpec,
    assemble_payload,
    compress,
    curated_manifest,
    default_stub,
    extract_payload,
    tokenize,
)

# every class of character the template and token escaping must carry:
# backslashes, backticks, dollars, markup, CR, the escape char itself
SPICE = "\\`$~<>/!-\r\n\t"
WORDS = [
    "TC", "TS", "CAF", "BANKCALL", "PHASCHNG", "ZERO", "WHICH",
    "NOOP", "GOPROG", "V37", "ENEMA", "SPOT", "</script>", "<!--",
    "<script>", "${x}", "a`b", "~", "x~", "\u0394V", "\u03bb",
]


def random_text(rng: random.Random, size: int) -> str:
    parts = []
    while sum(len(p) for p in parts) < size:
        roll = rng.random()
        if roll < 0.5:
            parts.append(rng.choice(WORDS))
        elif roll < 0.8:
            parts.append("".join(
                rng.choice(string.ascii_uppercase + string.digits)
                for _ in range(rng.randrange(1, 8))
            ))
        else:
            parts.append(rng.choice(SPICE))
        parts.append(rng.choice([" ", " ", "\n"]))
    return "".join(parts)[:size]


def random_sections(rng: random.Random) -> list[SectionSpec]:
    sections = []
    for i in range(rng.randrange(0, 5)):
        # ids must not look like integers or the viewer would reorder them
        name = f"S{i}" + rng.choice(string.ascii_uppercase)
        sections.append(
            SectionSpec(
                id=name,
                source_file="synthetic.agc",
                text=random_text(rng, rng.randrange(0, 180)),
                curated=True,
            )
        )
    return sections


def build_one(rng: random.Random, index: int) -> bytes:
    if index == 0:
        # the real thing first: the curated hybrid artifact
        manifest = curated_manifest()
        core = tokenize(
            "".join(s.text for s in manifest.sections), DEFAULT_DICTIONARY
        )
        return assemble_payload(
            compress(core.encode("utf-8")),
            manifest.sections,
            DEFAULT_DICTIONARY,
            default_stub(),
        ).html
    if index == 1:
        # degenerate: empty core, no sections
        return assemble_payload(
            compress(b""), [], DEFAULT_DICTIONARY, default_stub()
        ).html

    kind = rng.random()
    if kind < 0.7:
        # tokenized text, sometimes with escaped collisions inside
        core = tokenize(random_text(rng, rng.randrange(0, 500)), DEFAULT_DICTIONARY)
    elif kind < 0.9:
        # a raw token stream, including dangling escapes the strict
        # decoder would reject; the viewer passes them through
        alphabet = list(DEFAULT_DICTIONARY.entries) + ["~", " ", "\n", "X"]
        core = "".join(
            rng.choice(alphabet) for _ in range(rng.randrange(0, 120))
        )
    else:
        core = ""
    return assemble_payload(
        compress(core.encode("utf-8")),
        random_sections(rng),
        DEFAULT_DICTIONARY,
        default_stub(),
    ).html


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    out_dir = Path(sys.argv[1])
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 120
    out_dir.mkdir(parents=True, exist_ok=True)

    rng = random.Random(2026)
    for i in range(count):
        html = build_one(rng, i)
        expected = extract_payload(html)
        (out_dir / f"payload_{i:03}.html").write_bytes(html)
        (out_dir / f"payload_{i:03}.expected.txt").write_text(
            expected, encoding="utf-8", newline=""
        )
    print(f"wrote {count} payload/expected pairs to {out_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
