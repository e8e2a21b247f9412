import json
import random
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relicpress.errors import MalformedTokenStream
from relicpress.luminary import curated_sections
from relicpress.tokendict import (
    DEFAULT_DICTIONARY,
    TokenDictionary,
    detokenize,
    tokenize,
)

SMALL = TokenDictionary(
    entries={"a": "TC", "b": "TS", "c": "CAF", "d": "CS", "e": "CA"},
    escape_char="~",
)


class TestTokenizeExamples:
    def test_single_mnemonic(self):
        assert tokenize("TC BANKCALL", SMALL) == "a BANKCALL"

    def test_empty(self):
        assert tokenize("", SMALL) == ""

    def test_two_mnemonics(self):
        assert tokenize("CAF P63ADRES TS WHICH", SMALL) == "c P63ADRES b WHICH"

    def test_whitespace_runs_untouched(self):
        assert tokenize("TC\t\tBANKCALL\n CAF", SMALL) == "a\t\tBANKCALL\n c"

    def test_mnemonic_inside_word_not_substituted(self):
        # whole-word rule: TCF is not the mnemonic TC
        assert tokenize("TCF SOMEWHERE", SMALL) == "TCF SOMEWHERE"

    def test_collision_chars_escaped(self):
        # literal token chars in ordinary text must be escaped
        assert tokenize("abc", SMALL) == "~a~b~c"
        assert tokenize("x~y", SMALL) == "x~~y"


class TestDetokenizeExamples:
    def test_inverse_of_single(self):
        assert detokenize("a BANKCALL", SMALL) == "TC BANKCALL"

    def test_empty(self):
        assert detokenize("", SMALL) == ""

    def test_escapes_unwrap(self):
        assert detokenize("~a~b~c", SMALL) == "abc"
        assert detokenize("x~~y", SMALL) == "x~y"

    def test_dangling_escape_raises_with_offset(self):
        with pytest.raises(MalformedTokenStream) as info:
            detokenize("abc~"[3:], SMALL)
        assert info.value.offset == 0
        with pytest.raises(MalformedTokenStream) as info:
            detokenize("a B~", SMALL)
        assert info.value.offset == 3


class TestRoundTrip:
    @settings(max_examples=500, deadline=None)
    @given(st.text())
    def test_arbitrary_text(self, text):
        assert detokenize(tokenize(text, DEFAULT_DICTIONARY), DEFAULT_DICTIONARY) == text

    def test_ten_thousand_random_printable_strings(self):
        rng = random.Random(1969)
        alphabet = string.printable
        for _ in range(10_000):
            s = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(0, 40))
            )
            assert detokenize(tokenize(s, SMALL), SMALL) == s

    def test_curated_snippets(self):
        for spec in curated_sections():
            once = tokenize(spec.text, DEFAULT_DICTIONARY)
            assert detokenize(once, DEFAULT_DICTIONARY) == spec.text

    def test_tokenizing_shrinks_mnemonic_heavy_text(self):
        text = "TC BANKCALL\n" * 50
        assert len(tokenize(text, DEFAULT_DICTIONARY)) < len(text)


class TestDictionaryValidation:
    def test_escape_collision_rejected(self):
        with pytest.raises(ValueError):
            TokenDictionary(entries={"~": "TC"}, escape_char="~")

    def test_multichar_token_rejected(self):
        with pytest.raises(ValueError):
            TokenDictionary(entries={"ab": "TC"}, escape_char="~")

    def test_whitespace_token_rejected(self):
        with pytest.raises(ValueError):
            TokenDictionary(entries={" ": "TC"}, escape_char="~")

    def test_duplicate_mnemonic_rejected(self):
        with pytest.raises(ValueError):
            TokenDictionary(entries={"a": "TC", "b": "TC"}, escape_char="~")

    def test_mnemonic_with_whitespace_rejected(self):
        with pytest.raises(ValueError):
            TokenDictionary(entries={"a": "T C"}, escape_char="~")


class TestSerialization:
    def test_json_shape(self):
        doc = json.loads(SMALL.to_json())
        assert doc == {
            "tokens": {"a": "TC", "b": "TS", "c": "CAF", "d": "CS", "e": "CA"},
            "escape": "~",
        }

    def test_json_round_trip(self):
        again = TokenDictionary.from_json(DEFAULT_DICTIONARY.to_json())
        assert again.entries == DEFAULT_DICTIONARY.entries
        assert again.escape_char == DEFAULT_DICTIONARY.escape_char

    def test_default_dictionary_holds_the_named_mappings(self):
        expect = {"a": "TC", "b": "TS", "c": "CAF", "d": "CS", "e": "CA"}
        for char, mnemonic in expect.items():
            assert DEFAULT_DICTIONARY.entries[char] == mnemonic
