"""Self-extracting HTML artifact assembly and size accounting.

Document layout, in order: fixed HTML shell, token dictionary (JSON
object literal ``D``), expanded sections (object literal ``S`` whose
values are template literals, so section bytes appear verbatim),
base64 blob string ``B``, viewer stub, closing shell. Each piece is
accounted as an exact byte range, so the five budget rows always sum
to the total.

The bundled viewer stub bakes in the "~" escape character; assembling
with a dictionary using a different escape and the bundled stub is
rejected rather than silently producing a broken viewer.
"""

from __future__ import annotations

import base64
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from urllib.parse import quote, unquote_to_bytes

from .corpus import SectionSpec
from .deflate import CompressedBlob, inflate_raw
from .errors import BudgetExceeded
from .tokendict import TokenDictionary

RAW_HTML = "RawHtml"
DATA_URI = "DataUri"

HARD_CAP = 2953

SHELL_PREFIX = (
    '<!DOCTYPE html><html><body style="font-family:monospace">\n'
    '<pre id="o">Loading...</pre><script>\n'
)
SHELL_SUFFIX = "</script></body></html>"

DOCUMENT_TITLE = "# APOLLO 11 LUNAR MODULE CODE"
CORE_HEADING = "# Decompressed core:"
CORE_UNAVAILABLE = "[core unavailable]"

# characters left bare in DataUri mode; excludes ? and # so the URI
# survives fragment/query splitting in scanner apps
_URI_SAFE = "-_.~!*'();:@&=+$,/"

PART_NAMES = ("shell", "dict", "sections", "blob", "stub")


@dataclass(frozen=True)
class PayloadArtifact:
    """Assembled artifact with exact per-part byte accounting.

    shell_bytes covers the document framing: the fixed skeleton plus
    the embedded dictionary and section declarations. parts holds the
    five-way split used by budget_report.
    """

    html: bytes
    blob_bytes: int
    stub_bytes: int
    shell_bytes: int
    total_bytes: int
    mode: str
    parts: dict[str, int] = field(compare=False)

    def __post_init__(self):
        if self.total_bytes != len(self.html):
            raise ValueError("total_bytes does not match html length")
        if self.shell_bytes + self.stub_bytes + self.blob_bytes != self.total_bytes:
            raise ValueError("part accounting does not sum to total")


def default_stub() -> bytes:
    return resources.files("relicpress").joinpath("data/stub.min.js").read_bytes()


# the HTML script tokenizer matches these case-insensitively; a bare
# "<script" after "<!--" would keep the real closing tag from closing
_SCRIPT_OPEN = re.compile(r"<(script)", re.IGNORECASE)


def _tpl_escape(value: str) -> str:
    """Escape for a JS template literal. Every emitted sequence is an
    identity escape except backslash-r, which carries a CR: a raw CR in
    template source would be normalized to LF by the JS parser."""
    out = value.replace("\\", "\\\\").replace("`", "\\`").replace("$", "\\$")
    out = out.replace("</", "<\\/").replace("<!--", "<\\!--")
    out = _SCRIPT_OPEN.sub(r"<\\\1", out)
    return out.replace("\r", "\\r")


def _tpl_unescape(value: str) -> str:
    out = []
    i = 0
    while i < len(value):
        c = value[i]
        if c == "\\" and i + 1 < len(value):
            nxt = value[i + 1]
            out.append("\r" if nxt == "r" else nxt)
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


# canonical integer keys would be hoisted to the front of a JS object,
# breaking section order in the viewer
_INTEGER_KEY = re.compile(r"0|[1-9][0-9]*")


def _sections_literal(sections: list[SectionSpec]) -> str:
    for s in sections:
        if _INTEGER_KEY.fullmatch(s.id):
            raise ValueError(f"section id {s.id!r} would be reordered by the viewer")
        if "\x00" in s.text:
            # the HTML tokenizer substitutes U+FFFD for NUL in script text
            raise ValueError(f"section {s.id!r} contains a NUL byte")
    inner = ",".join(
        f"{json.dumps(s.id)}:`{_tpl_escape(s.text)}`" for s in sections
    )
    return "{" + inner + "}"


def assemble_payload(
    blob: CompressedBlob,
    sections: list[SectionSpec],
    dictionary: TokenDictionary,
    stub: bytes,
    mode: str = RAW_HTML,
) -> PayloadArtifact:
    """Assemble the artifact and enforce the hard QR budget."""
    if mode not in (RAW_HTML, DATA_URI):
        raise ValueError(f"unknown payload mode: {mode!r}")
    if dictionary.escape_char != "~" and stub == default_stub():
        raise ValueError("bundled viewer stub assumes escape character '~'")

    dict_js = json.dumps(dictionary.entries, separators=(",", ":")).replace(
        "</", "<\\/"
    )
    b64 = base64.b64encode(blob.data).decode("ascii")
    raw_parts = {
        "shell": (SHELL_PREFIX.encode(), SHELL_SUFFIX.encode()),
        "dict": (f"D={dict_js};\n".encode(),),
        "sections": (f"S={_sections_literal(sections)};\n".encode(),),
        "blob": (f'B="{b64}";\n'.encode(),),
        "stub": (stub + b"\n",),
    }
    if mode == DATA_URI:
        enc = {
            name: tuple(quote(p, safe=_URI_SAFE).encode("ascii") for p in pieces)
            for name, pieces in raw_parts.items()
        }
        enc["shell"] = (b"data:text/html," + enc["shell"][0], enc["shell"][1])
        raw_parts = enc
    prefix, suffix = raw_parts["shell"]
    html = (
        prefix
        + raw_parts["dict"][0]
        + raw_parts["sections"][0]
        + raw_parts["blob"][0]
        + raw_parts["stub"][0]
        + suffix
    )
    parts = {
        "shell": len(prefix) + len(suffix),
        "dict": len(raw_parts["dict"][0]),
        "sections": len(raw_parts["sections"][0]),
        "blob": len(raw_parts["blob"][0]),
        "stub": len(raw_parts["stub"][0]),
    }
    total = len(html)
    if total > HARD_CAP:
        raise BudgetExceeded(total, HARD_CAP, parts)
    return PayloadArtifact(
        html=html,
        blob_bytes=parts["blob"],
        stub_bytes=parts["stub"],
        shell_bytes=parts["shell"] + parts["dict"] + parts["sections"],
        total_bytes=total,
        mode=mode,
        parts=parts,
    )


def budget_report(artifact: PayloadArtifact) -> list[tuple[str, int, float]]:
    """(part, bytes, percent) rows; byte column sums exactly to
    total_bytes."""
    total = artifact.total_bytes
    return [
        (name, artifact.parts[name], 100.0 * artifact.parts[name] / total)
        for name in PART_NAMES
    ]


def render_document(sections: dict[str, str], core_text: str) -> str:
    """The text the viewer displays: title, section blocks, core."""
    out = [DOCUMENT_TITLE, "\n\n"]
    for section_id, text in sections.items():
        out.append(f"# --- {section_id} ---\n{text}\n\n")
    out.append(CORE_HEADING + "\n")
    out.append(core_text)
    return "".join(out)


_B64_LINE = re.compile(r'B="([A-Za-z0-9+/=]*)";\n')

# port of the viewer's substitution: escaped char passes through bare,
# any other non-escape non-whitespace char is looked up in the map
_CORE_RX = re.compile(r"~([\s\S])|[^~\s]")


def _splice_core(text: str, entries: dict[str, str]) -> str:
    def sub(match: re.Match) -> str:
        escaped = match.group(1)
        if escaped is not None:
            return escaped
        c = match.group(0)
        return entries.get(c) or c

    return _CORE_RX.sub(sub, text)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def expect(self, literal: str):
        if not self.text.startswith(literal, self.pos):
            raise ValueError(
                f"payload parse: expected {literal!r} at offset {self.pos}"
            )
        self.pos += len(literal)

    def peek(self) -> str:
        return self.text[self.pos : self.pos + 1]

    def json_string(self) -> str:
        start = self.pos
        self.expect('"')
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == "\\":
                self.pos += 2
                continue
            self.pos += 1
            if c == '"':
                return json.loads(self.text[start : self.pos])
        raise ValueError("payload parse: unterminated key string")

    def template(self) -> str:
        self.expect("`")
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == "\\":
                self.pos += 2
                continue
            if c == "`":
                raw = self.text[start : self.pos]
                self.pos += 1
                return _tpl_unescape(raw)
            self.pos += 1
        raise ValueError("payload parse: unterminated template literal")


def _parse_sections(scanner: _Scanner) -> dict[str, str]:
    sections: dict[str, str] = {}
    scanner.expect("{")
    if scanner.peek() == "}":
        scanner.pos += 1
        return sections
    while True:
        key = scanner.json_string()
        scanner.expect(":")
        sections[key] = scanner.template()
        if scanner.peek() == ",":
            scanner.pos += 1
            continue
        scanner.expect("}")
        return sections


@dataclass(frozen=True)
class EmbeddedParts:
    """Structured view of the globals a payload document declares."""

    entries: dict[str, str]
    sections: dict[str, str]
    blob_b64: str


def embedded_parts(html: bytes) -> EmbeddedParts:
    """Parse the D/S/B declarations out of a payload document (either
    mode). Raises ValueError when the document shape is off."""
    if html.startswith(b"data:text/html,"):
        html = unquote_to_bytes(html[len(b"data:text/html,") :])
    text = html.decode("utf-8")
    scanner = _Scanner(text)
    scanner.expect(SHELL_PREFIX)

    scanner.expect("D=")
    dict_end = text.index(";\n", scanner.pos)
    entries = json.loads(text[scanner.pos : dict_end])
    scanner.pos = dict_end + 2

    scanner.expect("S=")
    sections = _parse_sections(scanner)
    scanner.expect(";\n")

    match = _B64_LINE.match(text, scanner.pos)
    if not match:
        raise ValueError("payload parse: blob line not found")
    return EmbeddedParts(entries=entries, sections=sections, blob_b64=match.group(1))


def extract_payload(html: bytes) -> str:
    """Host-side mirror of the viewer: parse the embedded globals and
    produce the exact text the browser would display."""
    parts = embedded_parts(html)
    # mirror the viewer's broad catch: any failure past this point
    # shows the fallback line instead of aborting
    try:
        blob_data = base64.b64decode(parts.blob_b64)
        core_text = inflate_raw(blob_data).decode("utf-8", errors="replace")
        core = _splice_core(core_text, parts.entries)
    except Exception:
        core = CORE_UNAVAILABLE
    return render_document(parts.sections, core)
