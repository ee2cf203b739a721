"""Best-effort HTML to text stripping (regex scanner, no DOM)."""

from __future__ import annotations

import html
import re

_COMMENT = re.compile(r"<!--.*?-->", re.S)
_SCRIPT_STYLE = re.compile(r"<(script|style)\b[^>]*>.*?</\1\s*>", re.I | re.S)
_BLOCK_TAG = re.compile(
    r"</?(?:address|article|aside|blockquote|br|dd|div|dl|dt|fieldset|figcaption"
    r"|figure|footer|form|h[1-6]|header|hr|li|main|nav|ol|p|pre|section|table"
    r"|tbody|td|tfoot|th|thead|tr|ul)\b[^>]*>",
    re.I,
)
_ANY_TAG = re.compile(r"<[^>]+>")


def extract_text(markup: str) -> str:
    """Strip tags from HTML (or pass plain text through).

    script/style/comment content is dropped, block-level tags become
    newlines, remaining tags vanish, entities are decoded last so escaped
    markup stays text.  Whitespace runs collapse to one space per line.
    Malformed input degrades to best-effort stripping, never raises.
    """
    text = _COMMENT.sub("", markup)
    text = _SCRIPT_STYLE.sub("", text)
    text = _BLOCK_TAG.sub("\n", text)
    text = _ANY_TAG.sub("", text)
    text = html.unescape(text)
    lines = (" ".join(line.split()) for line in text.split("\n"))
    return "\n".join(line for line in lines if line)
