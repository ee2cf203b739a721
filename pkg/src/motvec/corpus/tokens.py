"""Whitespace + punctuation tokenizer with French elision splitting."""

from __future__ import annotations

import unicodedata

APOSTROPHES = ("'", "’")

# Forms like l'ecole / qu'il split after the apostrophe; aujourd'hui stays whole.
ELISION_PREFIXES = frozenset(
    ["c", "d", "j", "l", "m", "n", "s", "t", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu"]
)
_MAX_PREFIX = max(len(p) for p in ELISION_PREFIXES)


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _elision_cut(chunk: str) -> int:
    """Index just past the apostrophe of a leading elision form, or 0."""
    limit = min(_MAX_PREFIX + 1, len(chunk) - 1)
    for i in range(1, limit + 1):
        if chunk[i] in APOSTROPHES and chunk[:i].lower() in ELISION_PREFIXES:
            return i + 1
    return 0


def _split_chunk(chunk: str, out: list[str]):
    while chunk and _is_punct(chunk[0]) and _elision_cut(chunk) == 0:
        out.append(chunk[0])
        chunk = chunk[1:]
    if not chunk:
        return
    cut = _elision_cut(chunk)
    if cut:
        out.append(chunk[:cut])
        _split_chunk(chunk[cut:], out)
        return
    trailing: list[str] = []
    while chunk and _is_punct(chunk[-1]):
        trailing.append(chunk[-1])
        chunk = chunk[:-1]
    if chunk:
        out.append(chunk)
    out.extend(reversed(trailing))


def tokenize(text: str, lowercase: bool = False) -> list[str]:
    """Split text into word tokens.

    NFC-normalizes, splits on whitespace, detaches leading/trailing
    punctuation as separate tokens and splits elision forms after the
    apostrophe ("l'ecole" -> "l'", "ecole").
    """
    text = unicodedata.normalize("NFC", text)
    if lowercase:
        text = text.lower()
    tokens: list[str] = []
    for chunk in text.split():
        _split_chunk(chunk, tokens)
    return tokens
