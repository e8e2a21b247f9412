"""Press a historical assembly corpus into one self-extracting QR symbol.

The pipeline: parse AGC assembly losslessly (agc), inventory and select
source (corpus, luminary), compress selections three ways (tokendict,
binarycodec, deflate, strategies), assemble a self-extracting HTML
artifact (payload), and encode/verify a QR symbol for it (qr).
"""

from .agc import AgcStatement, StatementKind, parse_agc_source, serialize_statements
from .binarycodec import (
    BitStream,
    Codebook,
    build_codebook,
    decode_binary,
    encode_binary,
)
from .corpus import (
    ScanReport,
    SectionSpec,
    SelectionManifest,
    SourceFileRecord,
    extract_section,
    scan_corpus,
    select_files,
)
from .deflate import CompressedBlob, compress, decompress, inflate_raw
from .errors import (
    BudgetExceeded,
    CapacityExceeded,
    CodebookMiss,
    CodebookOverflow,
    CorruptSymbol,
    EmptySelection,
    InflateError,
    MalformedTokenStream,
    MissingArtifact,
    MissingSection,
    NotAQrSymbol,
    RelicpressError,
    TruncatedStream,
)
from .luminary import curated_manifest, curated_sections
from .payload import (
    PayloadArtifact,
    assemble_payload,
    budget_report,
    default_stub,
    extract_payload,
)
from .qr import (
    QrMatrix,
    QrSymbolSpec,
    capacity,
    decode_symbol,
    encode_symbol,
    matrix_from_pgm,
    render,
    select_version,
)
from .strategies import (
    StrategyResult,
    compare_strategies,
    format_ratio,
    run_strategy,
)
from .tokendict import DEFAULT_DICTIONARY, TokenDictionary, detokenize, tokenize

__version__ = "0.1.0"

__all__ = [
    "AgcStatement",
    "BitStream",
    "BudgetExceeded",
    "CapacityExceeded",
    "Codebook",
    "CodebookMiss",
    "CodebookOverflow",
    "CompressedBlob",
    "CorruptSymbol",
    "DEFAULT_DICTIONARY",
    "EmptySelection",
    "InflateError",
    "MalformedTokenStream",
    "MissingArtifact",
    "MissingSection",
    "NotAQrSymbol",
    "PayloadArtifact",
    "QrMatrix",
    "QrSymbolSpec",
    "RelicpressError",
    "ScanReport",
    "SectionSpec",
    "SelectionManifest",
    "SourceFileRecord",
    "StatementKind",
    "StrategyResult",
    "TokenDictionary",
    "TruncatedStream",
    "assemble_payload",
    "budget_report",
    "build_codebook",
    "capacity",
    "compare_strategies",
    "compress",
    "curated_manifest",
    "curated_sections",
    "decode_binary",
    "decode_symbol",
    "decompress",
    "default_stub",
    "encode_binary",
    "encode_symbol",
    "extract_payload",
    "extract_section",
    "format_ratio",
    "inflate_raw",
    "matrix_from_pgm",
    "parse_agc_source",
    "render",
    "run_strategy",
    "scan_corpus",
    "select_files",
    "select_version",
    "serialize_statements",
    "tokenize",
    "detokenize",
]
