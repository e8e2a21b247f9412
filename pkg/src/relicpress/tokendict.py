"""Single-character mnemonic substitution.

Each frequent opcode mnemonic maps to one printable character. Words
that are not mnemonics pass through, with any character that happens
to be a token or the escape prefixed by the escape character, so
detokenization is a context-free left-to-right scan.

Token characters are drawn from a-z plus shift-free ASCII symbols.
The guidance-computer sources are upper-case throughout, so escapes
almost never fire in practice; the escape path exists for totality.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import MalformedTokenStream

_WS_SPLIT = re.compile(r"(\s+)")


@dataclass(frozen=True)
class TokenDictionary:
    """Bijective map from single token characters to mnemonics."""

    entries: dict[str, str]
    escape_char: str = "~"
    _reverse: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.escape_char) != 1 or self.escape_char.isspace():
            raise ValueError("escape_char must be a single non-whitespace character")
        reverse: dict[str, str] = {}
        for char, mnemonic in self.entries.items():
            if len(char) != 1 or char.isspace():
                raise ValueError(f"token must be a single non-whitespace character: {char!r}")
            if char == self.escape_char:
                raise ValueError("token character collides with the escape character")
            if not mnemonic or any(c.isspace() for c in mnemonic):
                raise ValueError(f"invalid mnemonic for token {char!r}: {mnemonic!r}")
            if mnemonic in reverse:
                raise ValueError(f"duplicate mnemonic {mnemonic!r}")
            reverse[mnemonic] = char
        object.__setattr__(self, "_reverse", reverse)

    def to_json(self) -> str:
        return json.dumps(
            {"tokens": self.entries, "escape": self.escape_char},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, data: str) -> "TokenDictionary":
        obj = json.loads(data)
        return cls(entries=dict(obj["tokens"]), escape_char=obj["escape"])


def tokenize(text: str, dictionary: TokenDictionary) -> str:
    """Replace whole-word mnemonics with their token characters and
    escape colliding characters inside all other words. Whitespace is
    preserved exactly."""
    reverse = dictionary._reverse
    entries = dictionary.entries
    escape = dictionary.escape_char
    out = []
    for part in _WS_SPLIT.split(text):
        if not part or part[0].isspace():
            out.append(part)
        elif part in reverse:
            out.append(reverse[part])
        else:
            for c in part:
                if c in entries or c == escape:
                    out.append(escape)
                out.append(c)
    return "".join(out)


def detokenize(text: str, dictionary: TokenDictionary) -> str:
    """Invert tokenize. Character-level scan: an escaped character is
    literal, a token character expands, everything else passes."""
    entries = dictionary.entries
    escape = dictionary.escape_char
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == escape:
            if i + 1 >= n:
                raise MalformedTokenStream(i)
            out.append(text[i + 1])
            i += 2
        elif c in entries:
            out.append(entries[c])
            i += 1
        else:
            out.append(c)
            i += 1
    return "".join(out)


# Mnemonics in corpus frequency order; characters a-z, then symbols
# absent from the source texts (no upper-case letters, which would
# force an escape on nearly every word).
DEFAULT_DICTIONARY = TokenDictionary(
    entries={
        "a": "TC", "b": "TS", "c": "CAF", "d": "CS", "e": "CA",
        "f": "TCF", "g": "AD", "h": "MASK", "i": "INDEX", "j": "EXTEND",
        "k": "INHINT", "l": "RELINT", "m": "DCA", "n": "DXCH", "o": "CADR",
        "p": "OCT", "q": "BANKCALL", "r": "CCS", "s": "ADS", "t": "LXCH",
        "u": "QXCH", "v": "XCH", "w": "COM", "x": "DOUBLE", "y": "RESUME",
        "z": "NOOP", "{": "ERASE", "}": "EQUALS", "[": "BZF", "]": "BZMF",
        ";": "MP", "!": "DV", "^": "SU", "`": "MSU", "|": "AUG",
        "@": "DIM", "$": "READ", "%": "WRITE", "&": "ROR", "_": "WOR",
    },
    escape_char="~",
)
