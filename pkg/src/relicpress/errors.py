"""Exception hierarchy for the relicpress pipeline.

Every error carries enough context to act on: the symbol that missed a
codebook, the byte offset where an inflate failed, the per-part breakdown
of an oversized payload. All inherit from RelicpressError so callers can
catch the whole family at the CLI boundary.
"""

from __future__ import annotations


class RelicpressError(Exception):
    """Base class for all pipeline errors."""


class MissingSection(RelicpressError):
    """A section locator matched nothing in the source statements."""

    def __init__(self, section_id: str, detail: str = ""):
        self.section_id = section_id
        msg = f"section {section_id!r} not found"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class EmptySelection(RelicpressError):
    """A manifest with no sections was handed to a strategy run."""


class MalformedTokenStream(RelicpressError):
    """Detokenization hit a dangling escape character at end of input."""

    def __init__(self, offset: int):
        self.offset = offset
        super().__init__(f"dangling escape character at byte offset {offset}")


class CodebookMiss(RelicpressError):
    """A statement used an opcode or operand absent from the codebook."""

    def __init__(self, kind: str, symbol: str):
        self.kind = kind
        self.symbol = symbol
        super().__init__(f"{kind} {symbol!r} not in codebook")


class CodebookOverflow(RelicpressError):
    """More distinct opcodes or operands than the word format can index."""

    def __init__(self, kind: str, limit: int, count: int):
        self.kind = kind
        self.limit = limit
        self.count = count
        super().__init__(f"{count} distinct {kind}s exceed the limit of {limit}")


class TruncatedStream(RelicpressError):
    """A binary stream's bit length is not a whole number of 15-bit words."""

    def __init__(self, bit_length: int):
        self.bit_length = bit_length
        super().__init__(f"bit length {bit_length} is not a multiple of 15")


class InflateError(RelicpressError):
    """Compressed input failed to inflate."""

    def __init__(self, offset: int, detail: str):
        self.offset = offset
        self.detail = detail
        super().__init__(f"inflate failed at byte offset {offset}: {detail}")


class BudgetExceeded(RelicpressError):
    """Assembled payload exceeds the hard single-symbol byte budget."""

    def __init__(self, total: int, cap: int, parts: dict[str, int]):
        self.total = total
        self.cap = cap
        self.parts = dict(parts)
        breakdown = ", ".join(f"{k}={v}" for k, v in parts.items())
        super().__init__(f"payload of {total} bytes exceeds cap {cap} ({breakdown})")


class CapacityExceeded(RelicpressError):
    """Payload does not fit any symbol version at the requested ECC level."""

    def __init__(self, size: int, ecc: str, limit: int):
        self.size = size
        self.ecc = ecc
        self.limit = limit
        super().__init__(
            f"{size} bytes exceed the {limit}-byte capacity of version 40-{ecc}"
        )


class NotAQrSymbol(RelicpressError):
    """Matrix fails structural validation (size, finders, format info)."""


class CorruptSymbol(RelicpressError):
    """Structurally valid symbol whose codewords fail the RS check."""


class MissingArtifact(RelicpressError):
    """An expected build output file is absent from the output directory."""

    def __init__(self, path: str):
        self.path = path
        super().__init__(f"missing artifact: {path}")
