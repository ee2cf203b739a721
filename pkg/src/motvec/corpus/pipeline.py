"""Corpus extraction and deduplication pipelines over files."""

from __future__ import annotations

import gzip
import json
from collections.abc import Iterator
from dataclasses import asdict, dataclass
from pathlib import Path

from motvec.corpus.dedup import DigestSet, dedup_lines
from motvec.corpus.html import extract_text
from motvec.corpus.langid import LangProfile, build_profile, detect_language
from motvec.corpus.samples import DEFAULT_SAMPLES
from motvec.corpus.warc import read_warc
from motvec.errors import TextTooShort

MIN_LINE_CHARS = 30


@dataclass
class PipelineStats:
    records_seen: int = 0
    records_kept: int = 0
    bytes_in: int = 0
    bytes_out: int = 0
    lines_deduped: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def default_profiles() -> list[LangProfile]:
    return [build_profile(text, tag) for tag, text in DEFAULT_SAMPLES.items()]


def _looks_like_warc(path: Path) -> bool:
    name = path.name.lower()
    if ".warc" in name:
        return True
    with open(path, "rb") as fh:
        head = fh.read(5)
    if head[:2] == b"\x1f\x8b":
        with gzip.open(path, "rb") as fh:
            head = fh.read(5)
    return head == b"WARC/"


def _http_body(payload: bytes) -> bytes:
    # response payloads usually carry the full HTTP message; drop its headers
    if payload.startswith(b"HTTP/"):
        for sep in (b"\r\n\r\n", b"\n\n"):
            idx = payload.find(sep)
            if idx >= 0:
                return payload[idx + len(sep) :]
    return payload


def iter_documents(path: str | Path) -> Iterator[tuple[str, int]]:
    """Yield (document_text, input_byte_count) from a WARC or text file.

    WARC response payloads become one document each; plain text files (with
    or without gzip) yield one document per non-blank line, which covers
    both line-per-document and blank-line separated inputs.
    """
    path = Path(path)
    if _looks_like_warc(path):
        with open(path, "rb") as fh:
            for record in read_warc(fh):
                if record.record_type != "response":
                    continue
                body = _http_body(record.payload)
                yield body.decode("utf-8", "replace"), len(record.payload)
        return
    opener = gzip.open if path.name.endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8", errors="replace") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.strip():
                yield line, len(line.encode("utf-8"))


def _out_name(path: Path) -> str:
    name = path.name
    for suffix in (".gz", ".warc", ".txt"):
        if name.endswith(suffix):
            name = name[: -len(suffix)]
    return name + ".txt"


def extract_corpus(
    inputs: list[str | Path],
    out_dir: str | Path,
    language: str = "fr",
    min_confidence: float = 0.5,
    profiles: list[LangProfile] | None = None,
    min_line_chars: int = MIN_LINE_CHARS,
) -> PipelineStats:
    """Extract, language-filter and line-filter documents into text shards.

    One output shard per input file; a document is kept when the detected
    language matches `language` at `min_confidence` or better, then split
    into lines of at least `min_line_chars` characters.
    """
    if profiles is None:
        profiles = default_profiles()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stats = PipelineStats()

    for input_path in map(Path, inputs):
        with open(out_dir / _out_name(input_path), "w", encoding="utf-8") as out:
            for raw, nbytes in iter_documents(input_path):
                stats.records_seen += 1
                stats.bytes_in += nbytes
                text = extract_text(raw)
                try:
                    tag, confidence = detect_language(text, profiles)
                except TextTooShort:
                    continue
                if tag != language or confidence < min_confidence:
                    continue
                stats.records_kept += 1
                for line in text.split("\n"):
                    if len(line) >= min_line_chars:
                        out.write(line + "\n")
                        stats.bytes_out += len(line.encode("utf-8")) + 1
    return stats


def dedup_corpus(in_dir: str | Path, out_dir: str | Path) -> PipelineStats:
    """Deduplicate lines across all *.txt shards of a directory, preserving order."""
    in_dir, out_dir = Path(in_dir), Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stats = PipelineStats()
    seen = DigestSet()

    def counted(fh) -> Iterator[str]:
        for line in fh:
            line = line.rstrip("\n")
            stats.records_seen += 1
            stats.bytes_in += len(line.encode("utf-8")) + 1
            yield line

    for shard in sorted(in_dir.glob("*.txt")):
        with open(shard, encoding="utf-8") as fh, open(
            out_dir / shard.name, "w", encoding="utf-8"
        ) as out:
            for kept in dedup_lines(counted(fh), seen):
                out.write(kept + "\n")
                stats.records_kept += 1
                stats.bytes_out += len(kept.encode("utf-8")) + 1
    stats.lines_deduped = stats.records_seen - stats.records_kept
    return stats
