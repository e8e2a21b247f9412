"""Parsing and lossless re-serialization of AGC assembly source.

Transcribed AGC source is line-oriented: an optional label starting in
column 1, an opcode mnemonic, whitespace-separated operands, and an
optional ``#`` comment running to end of line. Parsing never throws away
bytes: every statement keeps its raw line (terminator included), so
serializing a parse reproduces the input exactly. Lines that do not fit
the grammar (e.g. a bare label with no opcode) are kept as opaque
statements rather than dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional


class StatementKind(enum.Enum):
    CODE = "code"
    COMMENT = "comment"
    BLANK = "blank"
    OPAQUE = "opaque"


# Mnemonics recognized as opcodes when they appear in column 1. Without
# this set a flush-left instruction line would misparse its opcode as a
# label. Covers the basic and extended instruction sets, common assembler
# pseudo-ops, and the interpreter verbs seen in guidance code.
KNOWN_OPCODES = frozenset(
    """
    TC TCF CCS CA CAF CAE CS AD ADS SU MSU MASK MP DV INDEX NDX INHINT
    RELINT EXTEND RESUME RETURN XCH LXCH QXCH DXCH DCA DCS TS COM DOUBLE
    OVSK NOOP SQUARE ZL ZQ DAS INCR AUG DIM BZF BZMF EDRUPT READ WRITE
    RAND WAND ROR WOR RXOR DTCB DXCH
    ERASE EQUALS OCT DEC 2DEC 2OCT ADRES CADR GENADR FCADR ECADR BBCON
    SETLOC BANK EBANK= SBANK= BLOCK COUNT COUNT* MEMORY CHECK= VN =
    VLOAD TLOAD DLOAD PDDL PDVL SETPD PUSH GOTO EXIT CALL CALLRB STCALL
    STORE STODL STOVL STQ RTB BOV BOVB BPL BZE BMN BHIZ CLEAR SET INVERT
    SLOAD SSP AXT AXT,1 AXT,2 AXC,1 AXC,2 LXA,1 LXA,2 LXC,1 LXC,2 SXA,1
    SXA,2 XAD,1 XAD,2 XSU,1 XSU,2 TIX,1 TIX,2 INCR,1 INCR,2 VXV MXV VXM
    DOT VXSC V/SC DMP DMPR DDV BDDV SIGN VAD VSU BVSU DAD DSU BDSU NORM
    UNIT ABVAL VSQ DSQ SQRT SIN COS ASIN ACOS ARCSIN ARCCOS ROUND DCOMP
    VCOMP VDEF TAD ITA ITCQ CCALL CGOTO BONSET BONCLR BONINV BOFSET
    BOFCLR BOFINV BON BOFF SL SR SLR SRR SL1 SL2 SL3 SL4 SR1 SR2 SR3 SR4
    VSL VSR VSL1 VSL2 VSL3 VSL4 VSL5 VSL6 VSL7 VSL8 VSR1 VSR2 VSR3 VSR4
    VSR5 VSR6 VSR7 VSR8
    """.split()
)


@dataclass
class AgcStatement:
    """One source line. Equality covers the semantic fields only; raw
    text and line number are carried as metadata so that codec round
    trips (which cannot preserve spacing) still compare equal."""

    kind: StatementKind
    label: Optional[str] = None
    opcode: str = ""
    operands: list[str] = field(default_factory=list)
    comment: Optional[str] = None
    line_no: int = field(default=1, compare=False)
    raw: Optional[str] = field(default=None, compare=False)

    def canonical_line(self) -> str:
        """Render without the original spacing: fields joined by single
        spaces, flush left. Used for statements synthesized by decoders
        and for minimal-structure size accounting."""
        if self.kind is StatementKind.BLANK:
            return ""
        if self.kind is StatementKind.COMMENT:
            return "#" + (self.comment or "")
        parts: list[str] = []
        if self.label:
            parts.append(self.label)
        if self.opcode:
            parts.append(self.opcode)
        parts.extend(self.operands)
        line = " ".join(parts)
        if self.comment is not None:
            line = (line + " #" + self.comment) if line else "#" + self.comment
        return line


def _parse_line(body: str, line_no: int, raw: str) -> AgcStatement:
    if body.strip() == "":
        return AgcStatement(StatementKind.BLANK, line_no=line_no, raw=raw)
    stripped = body.lstrip()
    if stripped.startswith("#"):
        return AgcStatement(
            StatementKind.COMMENT,
            comment=stripped[1:],
            line_no=line_no,
            raw=raw,
        )
    code_text, sep, after = body.partition("#")
    comment = after if sep else None
    words = code_text.split()
    label: Optional[str] = None
    if words and not body[0].isspace() and words[0] not in KNOWN_OPCODES:
        label = words[0]
        words = words[1:]
    if not words:
        # A label (or comment) with no opcode has no place in the
        # statement grammar; keep it verbatim and flag it.
        return AgcStatement(
            StatementKind.OPAQUE,
            label=label,
            comment=comment,
            line_no=line_no,
            raw=raw,
        )
    return AgcStatement(
        StatementKind.CODE,
        label=label,
        opcode=words[0],
        operands=words[1:],
        comment=comment,
        line_no=line_no,
        raw=raw,
    )


def parse_agc_source(text: str) -> list[AgcStatement]:
    """Parse source text into one statement per line.

    Empty input yields a single blank statement so that every input,
    including "", round-trips through serialize_statements.
    """
    if text == "":
        return [AgcStatement(StatementKind.BLANK, line_no=1, raw="")]
    statements = []
    for i, raw in enumerate(text.splitlines(keepends=True), start=1):
        body = raw.splitlines()[0] if raw else ""
        statements.append(_parse_line(body, i, raw))
    return statements


def serialize_statements(statements: list[AgcStatement]) -> str:
    """Inverse of parse_agc_source. Statements that still carry their
    raw line reproduce it byte-for-byte; synthesized statements render
    canonically with a trailing newline."""
    out = []
    for stmt in statements:
        if stmt.raw is not None:
            out.append(stmt.raw)
        else:
            out.append(stmt.canonical_line() + "\n")
    return "".join(out)
