"""Raw web archives or text streams -> clean, deduplicated training corpus."""

from motvec.corpus.dedup import DigestSet, dedup_lines, line_digest
from motvec.corpus.html import extract_text
from motvec.corpus.langid import LangProfile, build_profile, detect_language
from motvec.corpus.pipeline import (
    PipelineStats,
    dedup_corpus,
    default_profiles,
    extract_corpus,
    iter_documents,
)
from motvec.corpus.tokens import tokenize
from motvec.corpus.warc import Headers, WarcRecord, read_warc, write_warc

__all__ = [
    "DigestSet",
    "Headers",
    "LangProfile",
    "PipelineStats",
    "WarcRecord",
    "build_profile",
    "dedup_corpus",
    "dedup_lines",
    "default_profiles",
    "detect_language",
    "extract_corpus",
    "extract_text",
    "iter_documents",
    "line_digest",
    "read_warc",
    "tokenize",
    "write_warc",
]
