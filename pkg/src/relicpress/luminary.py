"""Built-in curated selection from the Apollo 11 LM source (Luminary 099).

The full 1.5 MB transcription is not required at build time: this module
ships the four hand-picked section snippets verbatim, the size inventory
of the five mission-critical files, and the aggregate figure for the
rest of the codebase. A build from curated_manifest() is therefore fully
reproducible offline, and byte counts for ratio/coverage math come from
the inventory rather than from files on disk.
"""

from __future__ import annotations

from .corpus import SectionSpec, SelectionManifest, SourceFileRecord

# Inventory of the preserved-in-full candidates, with (historical,
# technical) ratings on the 1-5 scale. Files rated 4+ on both axes are
# kept in full; the aggregate row for the remaining codebase is rated
# (1,1) and only ever tokenized.
CRITICAL_FILES = [
    SourceFileRecord("THE_LUNAR_LANDING.agc", 387, 14500, 5, 5),
    SourceFileRecord("LUNAR_LANDING_GUIDANCE_EQUATIONS.agc", 824, 33000, 5, 5),
    SourceFileRecord("BURN_BABY_BURN--MASTER_IGNITION_ROUTINE.agc", 573, 21000, 4, 4),
    SourceFileRecord("P70-P71.agc", 225, 9000, 5, 4),
    SourceFileRecord("ALARM_AND_ABORT.agc", 150, 6000, 5, 4),
]

OTHER_FILES_ROW = SourceFileRecord("Other AGC files", 38043, 1426500, 1, 1)

CRITICAL_SUBTOTAL_LINES = 2159
CRITICAL_SUBTOTAL_BYTES = 83500
TOTAL_CODEBASE_LINES = 40202
TOTAL_CODEBASE_BYTES = 1510000

# Expected line counts for full-scale section extraction, per the
# selection analysis: (low, high) line ranges. The curated snippets
# below are deliberate abridgements and sit under these ranges.
SECTION_LINE_RANGES = {
    "P63": (40, 60),
    "ALARM": (30, 40),
    "P70": (30, 40),
    "BURNBABY": (20, 30),
    "IGNALG": (15, 25),
}

P63_TEXT = """P63LM TC PHASCHNG OCT 04024
TC BANKCALL CADR R02BOTH
CAF P63ADRES TS WHICH
CAF DPSTHRSH TS DVTHRUSH"""

IGNALG_TEXT = """IGNALG SETPD 0 VLOAD RLS
PDDL PUSH TLAND
STCALL TPIP RP-TO-R
VSL4 MXV REFSMMAT
STCALL LAND GUIDINIT"""

ALARM_TEXT = """ALARM INHINT CA Q
TS ALMCADR INDEX Q
CA 0 TS L
CA BBANK EXTEND
ROR SUPERBINK
TS ALMCADR+1
CS DSPTAB+11D MASK OCT40400
ADS DSPTAB+11D"""

P70_TEXT = """P70 TC LEGAL? CS ZERO TCF +3
P71 TC LEGAL? CAF TWO
+3 TS Q INHINT EXTEND
DCA CNTABTAD DTCB"""

# Externally stated comparison figures per strategy: (size in bytes,
# claimed ratio). The report command prints these beside computed
# values and flags rows whose claimed ratio is not derivable from the
# claimed size against the critical-file subtotal.
STATED_FIGURES = {
    "FullBinary": (3072, "27:1"),
    "TokenizedText": (2867, "22:1"),
    "Hybrid": (1434, "15:1"),
}


def curated_sections() -> list[SectionSpec]:
    return [
        SectionSpec(
            id="P63",
            source_file="THE_LUNAR_LANDING.agc",
            text=P63_TEXT,
            note="Lunar landing sequence: critical to mission success",
            curated=True,
            start_label="P63LM",
        ),
        SectionSpec(
            id="IGNALG",
            source_file="LUNAR_LANDING_GUIDANCE_EQUATIONS.agc",
            text=IGNALG_TEXT,
            note="Ignition algorithm: core guidance mathematics",
            curated=True,
            start_label="IGNALG",
        ),
        SectionSpec(
            id="ALARM",
            source_file="ALARM_AND_ABORT.agc",
            text=ALARM_TEXT,
            note="1201/1202 alarm handling: famous during the landing",
            curated=True,
            start_label="ALARM",
        ),
        SectionSpec(
            id="P70",
            source_file="P70-P71.agc",
            text=P70_TEXT,
            note="Abort procedures: safety-critical functions",
            curated=True,
            start_label="P70",
        ),
    ]


def curated_manifest() -> SelectionManifest:
    """The shipped desk-scale manifest: five critical file records, the
    aggregate other-files row, and the four curated sections."""
    return SelectionManifest(
        files=[*CRITICAL_FILES, OTHER_FILES_ROW],
        sections=curated_sections(),
    )
