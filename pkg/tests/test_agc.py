from hypothesis import given, settings
from hypothesis import strategies as st

from relicpress.agc import (
    AgcStatement,
    KNOWN_OPCODES,
    StatementKind,
    parse_agc_source,
    serialize_statements,
)


def roundtrip(text):
    return serialize_statements(parse_agc_source(text))


class TestLosslessRoundTrip:
    def test_empty_input(self):
        assert roundtrip("") == ""

    def test_no_trailing_newline(self):
        assert roundtrip("TC BANKCALL") == "TC BANKCALL"

    def test_crlf_and_blank_lines(self):
        text = "P63LM\tTC\tPHASCHNG\r\n\r\n# note\r\n"
        assert roundtrip(text) == text

    def test_weird_spacing_preserved(self):
        text = "   CAF   ZERO    # padded  oddly\n\n\nEND\n"
        assert roundtrip(text) == text

    @settings(max_examples=500, deadline=None)
    @given(st.text())
    def test_any_text_survives(self, text):
        assert roundtrip(text) == text

    @settings(max_examples=300, deadline=None)
    @given(
        st.lists(
            st.sampled_from(
                [
                    "P63LM TC PHASCHNG OCT 04024",
                    "\tTC BANKCALL",
                    "# comment line",
                    "",
                    "LABEL1 CAF ZERO # trailing",
                    "IGNALG SETPD 0",
                ]
            ),
            max_size=30,
        )
    )
    def test_assembled_sources_survive(self, lines):
        text = "\n".join(lines)
        assert roundtrip(text) == text


class TestClassification:
    def test_blank(self):
        (st_,) = parse_agc_source("   \n")
        assert st_.kind is StatementKind.BLANK

    def test_comment(self):
        (st_,) = parse_agc_source("# hello there\n")
        assert st_.kind is StatementKind.COMMENT
        assert st_.comment == " hello there"

    def test_labeled_code(self):
        (st_,) = parse_agc_source("P63LM TC PHASCHNG OCT 04024\n")
        assert st_.kind is StatementKind.CODE
        assert st_.label == "P63LM"
        assert st_.opcode == "TC"
        assert st_.operands == ["PHASCHNG", "OCT", "04024"]

    def test_flush_left_opcode_is_not_a_label(self):
        # TC is a known mnemonic, so column 1 does not make it a label
        (st_,) = parse_agc_source("TC BANKCALL\n")
        assert st_.label is None
        assert st_.opcode == "TC"
        assert st_.operands == ["BANKCALL"]

    def test_indented_opcode(self):
        (st_,) = parse_agc_source("\tCAF ZERO\n")
        assert st_.label is None
        assert st_.opcode == "CAF"

    def test_inline_comment_split(self):
        (st_,) = parse_agc_source("ALARM INHINT # famous\n")
        assert st_.kind is StatementKind.CODE
        assert st_.comment == " famous"
        assert st_.operands == []

    def test_bare_label_is_opaque(self):
        (st_,) = parse_agc_source("SOMELABEL\n")
        assert st_.kind is StatementKind.OPAQUE
        assert st_.label == "SOMELABEL"

    def test_known_opcodes_cover_the_common_set(self):
        for mnemonic in ("TC", "TS", "CAF", "CS", "CA", "INHINT", "EXTEND"):
            assert mnemonic in KNOWN_OPCODES


class TestCanonicalLine:
    def test_blank(self):
        assert AgcStatement(StatementKind.BLANK).canonical_line() == ""

    def test_comment(self):
        st_ = AgcStatement(StatementKind.COMMENT, comment=" note")
        assert st_.canonical_line() == "# note"

    def test_full_code_line(self):
        st_ = AgcStatement(
            StatementKind.CODE,
            label="P63LM",
            opcode="TC",
            operands=["PHASCHNG"],
            comment=" x",
        )
        assert st_.canonical_line() == "P63LM TC PHASCHNG # x"

    def test_equality_ignores_spacing_metadata(self):
        a = parse_agc_source("TC   BANKCALL\n")[0]
        b = parse_agc_source("TC BANKCALL")[0]
        assert a == b
