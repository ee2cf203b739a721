"""Rank-order character n-gram language identification (Cavnar-Trenkle).

Profiles are rank lists of the most frequent character 1..4-grams of a
sample text.  A document is classified by the out-of-place distance between
its own rank list and each profile; n-grams absent from a profile cost the
full profile size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from collections import Counter

from motvec.errors import NoProfiles, TextTooShort

PROFILE_SIZE = 400
MAX_N = 4
MIN_TEXT_CHARS = 20

_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class LangProfile:
    language_tag: str
    ngram_ranks: dict[str, int]

    def __post_init__(self):
        ranks = sorted(self.ngram_ranks.values())
        if ranks != list(range(len(ranks))):
            raise ValueError("ngram_ranks must be a permutation of 0..size-1")


def _ngram_counts(text: str, max_n: int) -> Counter:
    # pad with spaces so n-grams carry word-boundary information
    normalized = " " + _WS.sub(" ", text.strip().lower()) + " "
    counts: Counter = Counter()
    for n in range(1, max_n + 1):
        for i in range(len(normalized) - n + 1):
            counts[normalized[i : i + n]] += 1
    return counts


def _rank(counts: Counter, size: int) -> dict[str, int]:
    top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:size]
    return {gram: rank for rank, (gram, _) in enumerate(top)}


def build_profile(
    sample_text: str,
    language_tag: str,
    profile_size: int = PROFILE_SIZE,
    max_n: int = MAX_N,
) -> LangProfile:
    """Build a rank profile for one language from sample text."""
    counts = _ngram_counts(sample_text, max_n)
    if not counts:
        raise ValueError("sample text is empty")
    return LangProfile(language_tag, _rank(counts, profile_size))


def _out_of_place(
    doc_ranks: dict[str, int], profile: LangProfile, known: frozenset[str]
) -> int:
    # grams unknown to every profile carry no signal and are skipped; grams
    # missing from just this profile cost the maximum displacement
    penalty = max(len(profile.ngram_ranks), len(doc_ranks))
    ranks = profile.ngram_ranks
    total = 0
    for gram, rank in doc_ranks.items():
        if gram not in known:
            continue
        other = ranks.get(gram)
        total += penalty if other is None else abs(rank - other)
    return total


def detect_language(
    text: str,
    profiles: list[LangProfile],
    max_n: int = MAX_N,
    profile_size: int = PROFILE_SIZE,
) -> tuple[str, float]:
    """Return (language_tag, confidence in [0, 1]) for the closest profile.

    Confidence is 1 - best_distance / worst_distance, so a document that
    matches one profile far better than the rest scores near 1.  Ties break
    on language_tag, making the result independent of profile order.
    """
    if not profiles:
        raise NoProfiles("detect_language needs at least one profile")
    if len(_WS.sub("", text)) < MIN_TEXT_CHARS:
        raise TextTooShort(f"need >= {MIN_TEXT_CHARS} non-whitespace characters")

    doc_ranks = _rank(_ngram_counts(text, max_n), profile_size)
    known = frozenset().union(*(p.ngram_ranks.keys() for p in profiles))
    distances = sorted(
        ((_out_of_place(doc_ranks, p, known), p.language_tag) for p in profiles)
    )
    best, tag = distances[0]
    worst = distances[-1][0]
    confidence = 0.0 if worst == 0 else 1.0 - best / worst
    return tag, confidence
