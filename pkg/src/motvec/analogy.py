"""Word-analogy evaluation: 3CosAdd over a category-sectioned question file.

For a question a:b :: c:?, the offset vector x_b - x_a + x_c is built from
the original (unnormalized) rows and candidates are ranked by cosine to it,
with a, b and c excluded from the candidate set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from motvec.errors import FormatError, OovWord
from motvec.store import NormalizedView


@dataclass(frozen=True)
class AnalogyQuestion:
    a: str
    b: str
    c: str
    expected: str
    category: str = ""


@dataclass
class CategoryCount:
    attempted: int = 0
    correct: int = 0
    skipped_oov: int = 0


@dataclass
class AnalogyReport:
    categories: dict[str, CategoryCount] = field(default_factory=dict)

    def bucket(self, category: str) -> CategoryCount:
        return self.categories.setdefault(category, CategoryCount())

    @property
    def attempted(self) -> int:
        return sum(c.attempted for c in self.categories.values())

    @property
    def correct(self) -> int:
        return sum(c.correct for c in self.categories.values())

    @property
    def skipped_oov(self) -> int:
        return sum(c.skipped_oov for c in self.categories.values())

    @property
    def all_skipped(self) -> bool:
        return self.attempted == 0

    @property
    def accuracy(self) -> float:
        return 0.0 if self.attempted == 0 else self.correct / self.attempted

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "attempted": self.attempted,
            "correct": self.correct,
            "skippedOov": self.skipped_oov,
            "allSkipped": self.all_skipped,
            "categories": {
                name: {
                    "attempted": c.attempted,
                    "correct": c.correct,
                    "skippedOov": c.skipped_oov,
                }
                for name, c in sorted(self.categories.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)


def parse_questions(path: str | Path) -> list[AnalogyQuestion]:
    """Parse ": category" sections and 4-token question lines."""
    questions: list[AnalogyQuestion] = []
    category = ""
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(":"):
                category = line[1:].strip()
                continue
            parts = line.split()
            if len(parts) != 4:
                raise FormatError(f"expected 4 tokens, got {len(parts)}", line=lineno)
            questions.append(AnalogyQuestion(*parts, category=category))
    return questions


def solve_analogy(
    view: NormalizedView,
    a: str,
    b: str,
    c: str,
    k: int = 10,
    candidate_limit: int | None = None,
) -> list[tuple[str, float]]:
    """Rank candidates by cosine to x_b - x_a + x_c, best first.

    The three query words never appear among candidates; ties break toward
    the lower vocabulary index.  `candidate_limit` optionally restricts the
    candidate pool to the first (most frequent) rows.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    ia, ib, ic = view.resolve(a), view.resolve(b), view.resolve(c)
    target = view.original(ib) - view.original(ia) + view.original(ic)
    norm = np.sqrt(float(target @ target))

    scores = view.unit_vectors @ (target / norm if norm > 0 else target)
    scores = scores.astype(np.float64, copy=False)
    if candidate_limit is not None and candidate_limit < len(scores):
        scores[candidate_limit:] = -np.inf
    scores[view.zero_rows] = -np.inf
    scores[[ia, ib, ic]] = -np.inf

    order = np.argsort(-scores, kind="stable")[:k]
    return [(view.words[i], float(scores[i])) for i in order if scores[i] != -np.inf]


def evaluate(
    view: NormalizedView,
    questions: list[AnalogyQuestion],
    candidate_limit: int | None = None,
) -> AnalogyReport:
    """Score questions: OOV in any of the four slots counts as skipped,
    otherwise the top-1 prediction must equal the expectation
    (case-insensitive)."""
    report = AnalogyReport()
    for q in questions:
        bucket = report.bucket(q.category)
        try:
            for token in (q.a, q.b, q.c, q.expected):
                view.resolve(token)
        except OovWord:
            bucket.skipped_oov += 1
            continue
        bucket.attempted += 1
        top = solve_analogy(view, q.a, q.b, q.c, k=1, candidate_limit=candidate_limit)
        if top and top[0][0].lower() == q.expected.lower():
            bucket.correct += 1
    return report
