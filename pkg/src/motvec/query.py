"""Cosine similarity and exact k-nearest-neighbor queries.

Brute force over the normalized matrix: at desk-scale vocabularies this is
fast, exact, and doubles as the oracle the rest of the toolkit trusts.
"""

from __future__ import annotations

import numpy as np

from motvec.store import NormalizedView


def cosine(view: NormalizedView, w1: str, w2: str) -> float:
    """Cosine similarity of two words' unit rows."""
    return float(view.unit_vectors[view.resolve(w1)] @ view.unit_vectors[view.resolve(w2)])


def neighbors(view: NormalizedView, word: str, k: int = 10) -> list[tuple[str, float]]:
    """The k nearest words by cosine, excluding the query word itself.

    Scores are non-increasing; ties break toward the lower vocabulary index.
    """
    if not 1 <= k < len(view):
        raise ValueError(f"k must be in [1, {len(view) - 1}]")
    idx = view.resolve(word)
    scores = (view.unit_vectors @ view.unit_vectors[idx]).astype(np.float64, copy=False)
    scores[view.zero_rows] = -np.inf
    scores[idx] = -np.inf
    order = np.argsort(-scores, kind="stable")[:k]
    return [(view.words[i], float(scores[i])) for i in order if scores[i] != -np.inf]
