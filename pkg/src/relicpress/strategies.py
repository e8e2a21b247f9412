"""The three compression strategies and their comparison report rows.

Every strategy produces a raw-deflate blob destined for the payload's
base64 slot:

- FullBinary packs every CODE statement from the manifest sections
  into 15-bit words, then deflates the packed bytes.
- TokenizedText joins the landing/alarm/abort section texts, token
  substitutes them, and deflates the result.
- Hybrid keeps every section verbatim in the payload's section slot;
  the blob carries only the tokenized connective document, which at
  curated scale is empty (the sections are the whole corpus).

Ratio and coverage numbers come from the manifest's file inventory,
not from files on disk.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from . import binarycodec, deflate, tokendict
from .agc import StatementKind, parse_agc_source
from .binarycodec import Codebook
from .corpus import TOTAL_ROW_NAME, SelectionManifest, select_files
from .errors import EmptySelection
from .tokendict import TokenDictionary

STRATEGY_NAMES = ("FullBinary", "TokenizedText", "Hybrid")

# Section ids the TokenizedText strategy selects: the landing program
# and the alarm/abort family. Falls back to every section when a
# manifest uses none of these ids.
TOKENIZED_IDS = frozenset({"P63", "ALARM", "P70", "P71", "P70-P71"})


@dataclass(frozen=True)
class StrategyResult:
    strategy: str
    compressed_size: int
    ratio_num: int
    ratio_den: int
    pct_critical_preserved: float
    pct_total: float

    def __post_init__(self):
        if self.compressed_size <= 0:
            raise ValueError("compressed_size must be positive")
        for frac in (self.pct_critical_preserved, self.pct_total):
            if not 0.0 <= frac <= 1.0:
                raise ValueError("coverage fractions must lie in [0, 1]")


def format_ratio(preserved_bytes: int, compressed_size: int) -> str:
    """Integer "N:1" display with bankers rounding of the quotient."""
    return f"{round(Fraction(preserved_bytes, compressed_size))}:1"


def _reduced(num: int, den: int) -> tuple[int, int]:
    g = gcd(num, den)
    return num // g, den // g


def _code_statements(manifest: SelectionManifest):
    statements = []
    for section in manifest.sections:
        statements.extend(
            st
            for st in parse_agc_source(section.text)
            if st.kind is StatementKind.CODE
        )
    return statements


def _file_bytes(manifest: SelectionManifest, names: set[str]) -> int:
    return sum(f.byte_size for f in manifest.files if f.name in names)


def _critical_subtotal(manifest: SelectionManifest) -> int:
    full, _ = select_files(manifest.files)
    return sum(f.byte_size for f in full)


def _codebase_total(manifest: SelectionManifest) -> int:
    return sum(f.byte_size for f in manifest.files if f.name != TOTAL_ROW_NAME)


def _canonical_text(text: str) -> str:
    """The section text as the binary channel would reconstruct it:
    canonical lines of its CODE statements, comments dropped."""
    return "\n".join(
        replace(st, comment=None).canonical_line()
        for st in parse_agc_source(text)
        if st.kind is StatementKind.CODE
    )


def _selected_for_tokenizing(manifest: SelectionManifest):
    chosen = [s for s in manifest.sections if s.id in TOKENIZED_IDS]
    return chosen if chosen else list(manifest.sections)


def run_strategy(
    strategy: str,
    manifest: SelectionManifest,
    dictionary: TokenDictionary | None = None,
    book: Codebook | None = None,
) -> tuple[bytes, StrategyResult]:
    """Produce the blob bytes for one strategy plus its report row."""
    if strategy not in STRATEGY_NAMES:
        raise ValueError(f"unknown strategy: {strategy!r}")
    if not manifest.sections:
        raise EmptySelection("manifest has no sections")
    dictionary = dictionary or tokendict.DEFAULT_DICTIONARY

    if strategy == "FullBinary":
        statements = _code_statements(manifest)
        if not statements:
            raise EmptySelection("no code statements in any section")
        if book is None:
            book = binarycodec.build_codebook(statements)
        bits = binarycodec.encode_binary(statements, book)
        blob = deflate.compress(bits.data)
        verbatim = sum(
            len(s.text.encode())
            for s in manifest.sections
            if _canonical_text(s.text) == s.text
        )
        preserved_src = _critical_subtotal(manifest)
    elif strategy == "TokenizedText":
        chosen = _selected_for_tokenizing(manifest)
        document = "\n\n".join(s.text for s in chosen)
        blob = deflate.compress(tokendict.tokenize(document, dictionary).encode())
        verbatim = sum(len(s.text.encode()) for s in chosen)
        preserved_src = _file_bytes(manifest, {s.source_file for s in chosen})
    else:
        connective = ""
        blob = deflate.compress(tokendict.tokenize(connective, dictionary).encode())
        verbatim = sum(len(s.text.encode()) for s in manifest.sections)
        preserved_src = _file_bytes(
            manifest, {s.source_file for s in manifest.sections}
        )

    critical = _critical_subtotal(manifest)
    total = _codebase_total(manifest)
    num, den = _reduced(preserved_src, len(blob.data))
    result = StrategyResult(
        strategy=strategy,
        compressed_size=len(blob.data),
        ratio_num=num,
        ratio_den=den,
        pct_critical_preserved=verbatim / critical if critical else 0.0,
        pct_total=verbatim / total if total else 0.0,
    )
    return blob.data, result


def compare_strategies(
    manifest: SelectionManifest,
    dictionary: TokenDictionary | None = None,
    book: Codebook | None = None,
) -> list[StrategyResult]:
    """One row per strategy, in fixed order, deterministic."""
    return [
        run_strategy(name, manifest, dictionary, book)[1]
        for name in STRATEGY_NAMES
    ]
