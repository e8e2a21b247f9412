"""Corpus inventory: file records, curated sections, selection manifests.

A SelectionManifest is the single input to a build. It lists the source
files under consideration (with preservation ratings) and the sections
chosen for verbatim preservation. Sections either carry curated text
inline or a locator (start label + statement count) to be sliced out of
parsed source. Manifests serialize to JSON with top-level keys
``files`` and ``sections``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from .agc import AgcStatement, parse_agc_source, serialize_statements
from .errors import MissingSection


@dataclass
class SourceFileRecord:
    """One corpus file with size metrics and 1-5 preservation ratings
    (historical significance, technical interest)."""

    name: str
    line_count: int
    byte_size: int
    historical_rating: int = 1
    technical_rating: int = 1

    def __post_init__(self) -> None:
        for rating in (self.historical_rating, self.technical_rating):
            if not 1 <= rating <= 5:
                raise ValueError(f"rating {rating} outside [1, 5]")
        if self.line_count < 0 or self.byte_size < 0:
            raise ValueError("negative size metric")


@dataclass
class SectionSpec:
    """A named slice of source kept verbatim.

    curated=True means text is authoritative as given; otherwise the
    section is located in parsed source by start_label (defaulting to
    the section id) and statement_count.
    """

    id: str
    source_file: str
    text: str = ""
    note: str = ""
    curated: bool = False
    start_label: Optional[str] = None
    statement_count: Optional[int] = None

    @property
    def line_count(self) -> int:
        return len(self.text.splitlines()) if self.text else 0


@dataclass
class SelectionManifest:
    files: list[SourceFileRecord] = field(default_factory=list)
    sections: list[SectionSpec] = field(default_factory=list)

    def __post_init__(self) -> None:
        names = {f.name for f in self.files}
        ids = [s.id for s in self.sections]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate section ids")
        for s in self.sections:
            if not s.curated and s.source_file not in names:
                raise ValueError(
                    f"section {s.id!r} references unknown file {s.source_file!r}"
                )

    def to_json(self) -> str:
        doc = {
            "files": [
                {
                    "name": f.name,
                    "line_count": f.line_count,
                    "byte_size": f.byte_size,
                    "historical_rating": f.historical_rating,
                    "technical_rating": f.technical_rating,
                }
                for f in self.files
            ],
            "sections": [
                {
                    "id": s.id,
                    "source_file": s.source_file,
                    "text": s.text,
                    "note": s.note,
                    "curated": s.curated,
                    **(
                        {"start_label": s.start_label}
                        if s.start_label is not None
                        else {}
                    ),
                    **(
                        {"statement_count": s.statement_count}
                        if s.statement_count is not None
                        else {}
                    ),
                }
                for s in self.sections
            ],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SelectionManifest":
        doc = json.loads(text)
        files = [SourceFileRecord(**f) for f in doc.get("files", [])]
        sections = [SectionSpec(**s) for s in doc.get("sections", [])]
        return cls(files=files, sections=sections)


@dataclass
class ScanReport:
    """Outcome of a corpus scan: records (with a synthetic Total row
    last) plus per-entry errors for unreadable inputs."""

    records: list[SourceFileRecord]
    errors: list[tuple[str, str]] = field(default_factory=list)


# Ratings assigned to the five mission-critical files when they are
# recognized during a scan: (historical, technical).
CRITICAL_RATINGS = {
    "THE_LUNAR_LANDING.agc": (5, 5),
    "LUNAR_LANDING_GUIDANCE_EQUATIONS.agc": (5, 5),
    "BURN_BABY_BURN--MASTER_IGNITION_ROUTINE.agc": (4, 4),
    "P70-P71.agc": (5, 4),
    "ALARM_AND_ABORT.agc": (5, 4),
}

TOTAL_ROW_NAME = "Total"


def scan_corpus(entries: list[tuple[str, Optional[bytes]]]) -> ScanReport:
    """Measure each (name, content) entry; content None marks an entry
    that could not be read. Errors are collected, never fatal. The
    returned records end with a synthetic Total row summing all files.
    """
    records: list[SourceFileRecord] = []
    errors: list[tuple[str, str]] = []
    for name, content in entries:
        if content is None:
            errors.append((name, "unreadable"))
            continue
        try:
            text = content.decode("utf-8")
        except UnicodeDecodeError as exc:
            errors.append((name, f"not utf-8: {exc}"))
            continue
        hist, tech = CRITICAL_RATINGS.get(name, (1, 1))
        records.append(
            SourceFileRecord(
                name=name,
                line_count=len(text.splitlines()),
                byte_size=len(content),
                historical_rating=hist,
                technical_rating=tech,
            )
        )
    records.append(
        SourceFileRecord(
            name=TOTAL_ROW_NAME,
            line_count=sum(r.line_count for r in records),
            byte_size=sum(r.byte_size for r in records),
        )
    )
    return ScanReport(records=records, errors=errors)


def select_files(
    records: list[SourceFileRecord],
) -> tuple[list[SourceFileRecord], list[SourceFileRecord]]:
    """Partition into (full_preserve, tokenize_only): files rated 4+ on
    both dimensions are preserved in full, everything else is tokenized.
    Synthetic total rows are excluded from both halves."""
    full, tokenized = [], []
    for r in records:
        if r.name == TOTAL_ROW_NAME:
            continue
        if r.historical_rating >= 4 and r.technical_rating >= 4:
            full.append(r)
        else:
            tokenized.append(r)
    return full, tokenized


def extract_section(statements: list[AgcStatement], spec: SectionSpec) -> SectionSpec:
    """Fill spec.text with a verbatim slice of the given statements.

    Curated specs with text are returned unchanged. Otherwise the slice
    starts at the first statement labelled spec.start_label (or spec.id)
    and runs for spec.statement_count statements (to end of input when
    unset). The slice is the raw source text, byte-for-byte.
    """
    if spec.curated and spec.text:
        return spec
    wanted = spec.start_label or spec.id
    start = next(
        (i for i, s in enumerate(statements) if s.label == wanted),
        None,
    )
    if start is None:
        raise MissingSection(spec.id, f"no statement labelled {wanted!r}")
    end = len(statements)
    if spec.statement_count is not None:
        end = min(end, start + spec.statement_count)
    text = serialize_statements(statements[start:end])
    return replace(spec, text=text)
