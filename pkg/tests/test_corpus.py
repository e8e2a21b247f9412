import pytest

from relicpress.agc import parse_agc_source
from relicpress.corpus import (
    SectionSpec,
    SelectionManifest,
    SourceFileRecord,
    TOTAL_ROW_NAME,
    extract_section,
    scan_corpus,
    select_files,
)
from relicpress.errors import MissingSection
from relicpress.luminary import curated_manifest, curated_sections


class TestScanCorpus:
    def test_counts_and_total_row(self):
        report = scan_corpus(
            [
                ("A.agc", b"TC BANKCALL\nCAF ZERO\n"),
                ("B.agc", b"# nothing\n"),
            ]
        )
        a, b, total = report.records
        assert (a.line_count, a.byte_size) == (2, 21)
        assert (b.line_count, b.byte_size) == (1, 10)
        assert total.name == TOTAL_ROW_NAME
        assert total.line_count == 3
        assert total.byte_size == 31
        assert report.errors == []

    def test_critical_names_get_ratings(self):
        report = scan_corpus([("P70-P71.agc", b"X\n"), ("misc.agc", b"Y\n")])
        by_name = {r.name: r for r in report.records}
        assert by_name["P70-P71.agc"].historical_rating == 5
        assert by_name["P70-P71.agc"].technical_rating == 4
        assert by_name["misc.agc"].historical_rating == 1

    def test_unreadable_and_bad_encoding_collected(self):
        report = scan_corpus([("gone.agc", None), ("bad.agc", b"\xff\xfe")])
        assert [name for name, _ in report.errors] == ["gone.agc", "bad.agc"]
        # only the synthetic total row remains
        assert [r.name for r in report.records] == [TOTAL_ROW_NAME]

    def test_empty_scan(self):
        report = scan_corpus([])
        (total,) = report.records
        assert (total.line_count, total.byte_size) == (0, 0)


class TestSelectFiles:
    def test_partition_by_ratings(self):
        keep = SourceFileRecord("keep.agc", 1, 1, 5, 4)
        drop = SourceFileRecord("drop.agc", 1, 1, 5, 3)
        total = SourceFileRecord(TOTAL_ROW_NAME, 2, 2)
        full, tokenized = select_files([keep, drop, total])
        assert full == [keep]
        assert tokenized == [drop]

    def test_curated_manifest_splits_critical_from_rest(self):
        manifest = curated_manifest()
        full, tokenized = select_files(manifest.files)
        assert sum(r.byte_size for r in full) == 83500
        assert [r.name for r in tokenized] == ["Other AGC files"]


class TestExtractSection:
    def test_curated_text_passes_through(self):
        spec = SectionSpec(id="X", source_file="f.agc", text="TC Q\n", curated=True)
        assert extract_section([], spec) is spec

    def test_slice_by_label_and_count(self):
        statements = parse_agc_source(
            "HEAD CAF ZERO\nP63 TC PHASCHNG\n TC BANKCALL\nTAIL TS Q\n"
        )
        spec = SectionSpec(id="P63", source_file="f.agc", statement_count=2)
        got = extract_section(statements, spec)
        assert got.text == "P63 TC PHASCHNG\n TC BANKCALL\n"
        assert got is not spec

    def test_start_label_overrides_id(self):
        statements = parse_agc_source("ALT TC Q\n")
        spec = SectionSpec(id="X", source_file="f.agc", start_label="ALT")
        assert extract_section(statements, spec).text == "ALT TC Q\n"

    def test_missing_label_raises(self):
        with pytest.raises(MissingSection):
            extract_section([], SectionSpec(id="NOPE", source_file="f.agc"))


class TestManifestSerialization:
    def test_json_round_trip(self):
        manifest = curated_manifest()
        again = SelectionManifest.from_json(manifest.to_json())
        assert again == manifest

    def test_duplicate_section_ids_rejected(self):
        spec = SectionSpec(id="A", source_file="f.agc", text="x", curated=True)
        with pytest.raises(ValueError):
            SelectionManifest(files=[], sections=[spec, spec])

    def test_unknown_file_reference_rejected(self):
        spec = SectionSpec(id="A", source_file="missing.agc")
        with pytest.raises(ValueError):
            SelectionManifest(files=[], sections=[spec])

    def test_rating_bounds_enforced(self):
        with pytest.raises(ValueError):
            SourceFileRecord("f.agc", 1, 1, 0, 1)
        with pytest.raises(ValueError):
            SourceFileRecord("f.agc", 1, 1, 1, 6)


class TestCuratedData:
    def test_section_order_is_stable(self):
        assert [s.id for s in curated_sections()] == [
            "P63",
            "IGNALG",
            "ALARM",
            "P70",
        ]

    def test_inventory_totals(self):
        manifest = curated_manifest()
        assert sum(f.line_count for f in manifest.files) == 40202
        assert sum(f.byte_size for f in manifest.files) == 1510000
