"""Command line entry point.

Subcommands: analyze (corpus size table), build (payload + QR symbol +
report), verify (structural round trip of a build directory), report
(strategy comparison table). Exit codes: 0 success, 1 verification or
pipeline failure, 2 usage, 3 budget or capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .corpus import SelectionManifest, TOTAL_ROW_NAME, scan_corpus, select_files
from .deflate import CompressedBlob, inflate_raw
from .errors import (
    BudgetExceeded,
    CapacityExceeded,
    MissingArtifact,
    RelicpressError,
)
from .luminary import STATED_FIGURES, curated_sections
from .payload import (
    DATA_URI,
    RAW_HTML,
    assemble_payload,
    budget_report,
    default_stub,
    embedded_parts,
    extract_payload,
)
from .qr import (
    QrSymbolSpec,
    decode_symbol,
    encode_symbol,
    matrix_from_pgm,
    render,
    select_version,
)
from .strategies import StrategyResult, compare_strategies, run_strategy
from .tokendict import DEFAULT_DICTIONARY

SUBTOTAL_ROW_NAME = "Critical Files Subtotal"

_STRATEGY_FLAGS = {
    "binary": "FullBinary",
    "token": "TokenizedText",
    "hybrid": "Hybrid",
}


@dataclass(frozen=True)
class RunConfig:
    """One build invocation, fully determined by its flags."""

    manifest_path: Path
    strategy: str
    ecc: str
    mode: str
    out_dir: Path
    budget: bool = False


def _tsv(rows: list[tuple]) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


class _UsageError(Exception):
    pass


def _load_manifest(path: Path) -> SelectionManifest:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read manifest: {exc}")
    try:
        return SelectionManifest.from_json(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise _UsageError(f"malformed manifest {path}: {exc}")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_analyze(corpus_dir: Path) -> int:
    """Per-file size table with critical subtotal and grand total."""
    if not corpus_dir.is_dir():
        return _usage_error(f"not a directory: {corpus_dir}")
    entries = []
    for path in sorted(corpus_dir.glob("*.agc")):
        try:
            entries.append((path.name, path.read_bytes()))
        except OSError:
            entries.append((path.name, None))
    report = scan_corpus(entries)
    for name, reason in report.errors:
        print(f"warning: skipped {name}: {reason}", file=sys.stderr)

    files = [r for r in report.records if r.name != TOTAL_ROW_NAME]
    total = report.records[-1]
    critical, _ = select_files(report.records)
    rows = [("name", "lines", "bytes")]
    rows += [(r.name, r.line_count, r.byte_size) for r in files]
    rows.append(
        (
            SUBTOTAL_ROW_NAME,
            sum(r.line_count for r in critical),
            sum(r.byte_size for r in critical),
        )
    )
    rows.append((TOTAL_ROW_NAME, total.line_count, total.byte_size))
    sys.stdout.write(_tsv(rows))
    return 0


def _ratio_str(result: StrategyResult) -> str:
    return f"{round(Fraction(result.ratio_num, result.ratio_den))}:1"


def _result_row(result: StrategyResult) -> tuple:
    return (
        result.strategy,
        result.compressed_size,
        _ratio_str(result),
        f"{100 * result.pct_critical_preserved:.2f}%",
        f"{100 * result.pct_total:.2f}%",
    )


def cmd_build(config: RunConfig) -> int:
    manifest = _load_manifest(config.manifest_path)
    strategy = _STRATEGY_FLAGS[config.strategy]
    body, result = run_strategy(strategy, manifest, DEFAULT_DICTIONARY)
    blob = CompressedBlob(data=body, original_size=len(inflate_raw(body)))
    stub = default_stub()

    raw_artifact = assemble_payload(
        blob, manifest.sections, DEFAULT_DICTIONARY, stub, RAW_HTML
    )
    encoded_artifact = raw_artifact
    if config.mode == "uri":
        encoded_artifact = assemble_payload(
            blob, manifest.sections, DEFAULT_DICTIONARY, stub, DATA_URI
        )

    version = select_version(encoded_artifact.total_bytes, config.ecc)
    spec = QrSymbolSpec(version=version, ecc=config.ecc)
    matrix = encode_symbol(encoded_artifact.html, spec)

    try:
        config.out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise _UsageError(f"cannot create output directory: {exc}")

    outputs = [("payload.html", raw_artifact.html)]
    if config.mode == "uri":
        outputs.append(("payload.uri", encoded_artifact.html))
    outputs.append(("qr.pgm", render(matrix, spec, "PGM")))
    outputs.append(("qr.svg", render(matrix, spec, "SVG")))

    report_rows = [
        (
            "strategy",
            "compressed_size",
            "ratio",
            "pct_critical_preserved",
            "pct_total_codebase",
            "payload_bytes",
            "qr_version",
            "ecc",
        ),
        _result_row(result) + (encoded_artifact.total_bytes, version, config.ecc),
    ]
    outputs.append(("report.tsv", _tsv(report_rows).encode("ascii")))
    if config.budget:
        budget_rows = [("part", "bytes", "percent")]
        budget_rows += [
            (name, nbytes, f"{pct:.1f}")
            for name, nbytes, pct in budget_report(encoded_artifact)
        ]
        outputs.append(("budget.tsv", _tsv(budget_rows).encode("ascii")))

    for name, data in outputs:
        path = config.out_dir / name
        path.write_bytes(data)
        print(f"wrote {path} ({len(data)} bytes)")
    print(
        f"{strategy}: payload {encoded_artifact.total_bytes} bytes,"
        f" symbol version {version}-{config.ecc}"
    )
    return 0


def _check_artifacts_present(out_dir: Path, names: list[str]) -> str | None:
    for name in names:
        if not (out_dir / name).is_file():
            missing = MissingArtifact(str(out_dir / name))
            return f"{type(missing).__name__}: {missing.path}"
    return None


def _check_symbol_matches(out_dir: Path) -> str | None:
    target_path = out_dir / "payload.uri"
    if not target_path.is_file():
        target_path = out_dir / "payload.html"
    expected = target_path.read_bytes()
    try:
        matrix = matrix_from_pgm((out_dir / "qr.pgm").read_bytes())
        decoded = decode_symbol(matrix)
    except RelicpressError as exc:
        return f"{type(exc).__name__}: {exc}"
    if decoded != expected:
        limit = min(len(decoded), len(expected))
        at = next(
            (i for i in range(limit) if decoded[i] != expected[i]), limit
        )
        return (
            f"decoded symbol differs from {target_path.name} at byte {at}"
            f" (decoded {len(decoded)} bytes, expected {len(expected)})"
        )
    return None


def _check_extraction(out_dir: Path) -> str | None:
    html = (out_dir / "payload.html").read_bytes()
    try:
        text = extract_payload(html)
    except (ValueError, UnicodeDecodeError) as exc:
        return f"extraction failed: {exc}"
    if not text:
        return "extraction produced an empty document"
    return None


def _check_curated_sections(out_dir: Path) -> str | None:
    html = (out_dir / "payload.html").read_bytes()
    try:
        parts = embedded_parts(html)
    except (ValueError, UnicodeDecodeError) as exc:
        return f"payload parse failed: {exc}"
    goldens = {s.id: s.text for s in curated_sections()}
    for section_id, text in parts.sections.items():
        want = goldens.get(section_id)
        if want is None or text == want:
            continue
        limit = min(len(text), len(want))
        at = next((i for i in range(limit) if text[i] != want[i]), limit)
        return f"section {section_id} differs from golden text at byte {at}"
    return None


def cmd_verify(out_dir: Path) -> int:
    """Run every structural check, print one status line each."""
    if not out_dir.is_dir():
        return _usage_error(f"not a directory: {out_dir}")
    required = ["payload.html", "qr.pgm", "qr.svg", "report.tsv"]
    checks = [
        ("artifacts-present", lambda: _check_artifacts_present(out_dir, required)),
        ("symbol-matches-payload", lambda: _check_symbol_matches(out_dir)),
        ("extraction-renders", lambda: _check_extraction(out_dir)),
        ("curated-section-goldens", lambda: _check_curated_sections(out_dir)),
    ]
    failed = False
    for name, check in checks:
        try:
            detail = check()
        except OSError as exc:
            detail = f"unreadable artifact: {exc}"
        if detail is None:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {detail}")
            failed = True
        # nothing downstream can run without the build outputs
        if failed and name == "artifacts-present":
            break
    return 1 if failed else 0


def cmd_report(manifest_path: Path) -> int:
    manifest = _load_manifest(manifest_path)
    critical, _ = select_files(manifest.files)
    critical_bytes = sum(r.byte_size for r in critical)
    rows = [
        (
            "strategy",
            "compressed_size",
            "ratio",
            "pct_critical_preserved",
            "pct_total_codebase",
            "paper_stated",
            "consistent?",
        )
    ]
    for result in compare_strategies(manifest, DEFAULT_DICTIONARY):
        stated_size, stated_ratio = STATED_FIGURES[result.strategy]
        stated_n = int(stated_ratio.split(":")[0])
        derivable = (
            critical_bytes > 0
            and round(Fraction(critical_bytes, stated_size)) == stated_n
        )
        rows.append(
            _result_row(result)
            + (f"{stated_size} B, {stated_ratio}", "yes" if derivable else "no")
        )
    sys.stdout.write(_tsv(rows))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relicpress",
        description="Press an assembly corpus into a single QR symbol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="corpus size table (TSV)")
    p_analyze.add_argument("corpus_dir", type=Path)

    p_build = sub.add_parser("build", help="build payload, symbol, report")
    p_build.add_argument("--manifest", type=Path, required=True)
    p_build.add_argument(
        "--strategy", choices=sorted(_STRATEGY_FLAGS), default="hybrid"
    )
    p_build.add_argument("--ecc", choices=["L", "M", "Q", "H"], default="L")
    p_build.add_argument("--mode", choices=["html", "uri"], default="html")
    p_build.add_argument("--out", type=Path, required=True)
    p_build.add_argument(
        "--budget", action="store_true", help="also write budget.tsv"
    )

    p_verify = sub.add_parser("verify", help="check a build directory")
    p_verify.add_argument("out_dir", type=Path)

    p_report = sub.add_parser("report", help="strategy comparison table (TSV)")
    p_report.add_argument("--manifest", type=Path, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args.corpus_dir)
        if args.command == "build":
            config = RunConfig(
                manifest_path=args.manifest,
                strategy=args.strategy,
                ecc=args.ecc,
                mode=args.mode,
                out_dir=args.out,
                budget=args.budget,
            )
            return cmd_build(config)
        if args.command == "verify":
            return cmd_verify(args.out_dir)
        return cmd_report(args.manifest)
    except (BudgetExceeded, CapacityExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _UsageError as exc:
        return _usage_error(str(exc))
    except RelicpressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
