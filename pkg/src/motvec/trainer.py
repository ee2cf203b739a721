"""CBoW word-vector training with negative sampling.

Plain SGD on the sampled softmax objective: for a target word t with
context C and negatives N,

    L = -log sigmoid(c_t . h) - sum_n log sigmoid(-c_n . h),

where h is the mean of the context words' input vectors, c_* are rows of
the context matrix.  One step updates the context rows of t and N and the
input rows of C with the exact gradient of L.

Multi-worker training shares the two matrices across threads without
locks (hogwild style); results are bit-reproducible only at workers=1.
"""

from __future__ import annotations

import sys
import threading
import time
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from motvec.errors import EmptyVocabulary, InvalidFrequency


@dataclass(frozen=True)
class TrainingConfig:
    dim: int = 300
    window: int = 5
    min_count: int = 5
    negatives: int = 5
    epochs: int = 5
    lr_start: float = 0.025
    lr_end: float = 1e-4
    subsample_t: float = 1e-3
    seed: int = 1

    def __post_init__(self):
        if self.dim < 1 or self.window < 1 or self.min_count < 1 or self.negatives < 1:
            raise ValueError("dim, window, min_count and negatives must be >= 1")
        if not (self.lr_start > self.lr_end > 0):
            raise ValueError("need lr_start > lr_end > 0")
        if self.subsample_t <= 0:
            raise ValueError("subsample_t must be > 0")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")


class Vocabulary:
    """Words ordered by descending count (ties lexicographic) with an index."""

    __slots__ = ("words", "counts", "index", "total_tokens")

    def __init__(self, words: Sequence[str], counts: Sequence[int] | None = None):
        self.words = list(words)
        self.counts = None if counts is None else np.asarray(counts, dtype=np.int64)
        self.index = {w: i for i, w in enumerate(self.words)}
        if len(self.index) != len(self.words):
            raise ValueError("duplicate word in vocabulary")
        self.total_tokens = 0 if self.counts is None else int(self.counts.sum())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    @classmethod
    def from_counts(cls, counts: dict[str, int], min_count: int) -> "Vocabulary":
        kept = [(w, c) for w, c in counts.items() if c >= min_count]
        if not kept:
            raise EmptyVocabulary(f"no word reaches min_count={min_count}")
        kept.sort(key=lambda wc: (-wc[1], wc[0]))
        return cls([w for w, _ in kept], [c for _, c in kept])


def build_vocab(corpus: Iterable[Sequence[str]], min_count: int) -> Vocabulary:
    """Count tokens over an iterable of token sequences and threshold."""
    counts: Counter = Counter()
    for sentence in corpus:
        counts.update(sentence)
    return Vocabulary.from_counts(counts, min_count)


class EmbeddingSet:
    """Vocabulary plus the input-vector matrix (and, while training, context)."""

    __slots__ = ("vocab", "input_vectors", "context_vectors")

    def __init__(
        self,
        vocab: Vocabulary,
        input_vectors: np.ndarray,
        context_vectors: np.ndarray | None = None,
    ):
        input_vectors = np.ascontiguousarray(input_vectors)
        if input_vectors.shape[0] != len(vocab):
            raise ValueError("matrix rows must match vocabulary size")
        self.vocab = vocab
        self.input_vectors = input_vectors
        self.context_vectors = context_vectors

    @property
    def dim(self) -> int:
        return self.input_vectors.shape[1]

    def vector(self, word: str) -> np.ndarray:
        return self.input_vectors[self.vocab.index[word]]

    @classmethod
    def initialize(cls, vocab: Vocabulary, dim: int, seed: int, dtype=np.float32):
        """Standard init: input rows uniform(-0.5/dim, 0.5/dim), context zero."""
        rng = np.random.default_rng(seed)
        inputs = ((rng.random((len(vocab), dim)) - 0.5) / dim).astype(dtype)
        context = np.zeros((len(vocab), dim), dtype=dtype)
        return cls(vocab, inputs, context)


class NegativeSampler:
    """Draws word indices with probability proportional to count^0.75."""

    __slots__ = ("cumulative",)

    def __init__(self, counts: Sequence[int], power: float = 0.75):
        weights = np.asarray(counts, dtype=np.float64) ** power
        total = weights.sum()
        if not total > 0:
            raise ValueError("sampler needs positive counts")
        self.cumulative = np.cumsum(weights / total)
        self.cumulative[-1] = 1.0

    def sample(self, rng: np.random.Generator) -> int:
        return int(np.searchsorted(self.cumulative, rng.random(), side="right"))

    def sample_array(self, rng: np.random.Generator, size) -> np.ndarray:
        return np.searchsorted(self.cumulative, rng.random(size), side="right")


def keep_probability(word_freq: float, subsample_t: float) -> float:
    """Subsampling keep probability (sqrt(f/t) + 1) * t/f, clamped to [0, 1]."""
    if word_freq <= 0:
        raise InvalidFrequency(f"word frequency must be > 0, got {word_freq}")
    ratio = word_freq / subsample_t
    return min(1.0, (np.sqrt(ratio) + 1.0) / ratio)


def _sigmoid(x: np.ndarray) -> np.ndarray:
    # tanh form is overflow-safe for any x
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def cbow_step(
    emb: EmbeddingSet,
    context: Sequence[int],
    target: int,
    negatives: Sequence[int],
    lr: float,
) -> float:
    """One exact SGD step on the CBoW negative-sampling loss; returns the
    loss at the pre-update parameters.  Empty context is a no-op (loss 0)."""
    n_ctx = len(context)
    if n_ctx == 0:
        return 0.0
    w_in, w_ctx = emb.input_vectors, emb.context_vectors
    ctx = np.asarray(context, dtype=np.intp)
    outs = np.concatenate(([target], np.asarray(negatives, dtype=np.intp)))

    h = w_in[ctx].mean(axis=0)
    rows = w_ctx[outs]  # copy: gradients use pre-update values
    scores = rows @ h
    loss = float(np.logaddexp(0.0, -scores[0]) + np.logaddexp(0.0, scores[1:]).sum())

    g = _sigmoid(scores)  # dL/dscore = sigmoid(score) - label
    g[0] -= 1.0
    grad_h = g @ rows
    np.add.at(w_ctx, outs, (-lr * g)[:, None] * h[None, :])
    np.add.at(w_in, ctx, (-lr / n_ctx) * grad_h)
    return loss


class _Progress:
    """Once-per-interval training progress line on stderr."""

    def __init__(self, interval: float):
        self.interval = interval
        self.last = time.monotonic()
        self.last_tokens = 0

    def maybe_report(self, tokens_done: int, total: int, lr: float, loss: float):
        now = time.monotonic()
        if now - self.last < self.interval:
            return
        rate = (tokens_done - self.last_tokens) / (now - self.last)
        pct = 100.0 * tokens_done / max(total, 1)
        print(
            f"trained {pct:5.1f}%  {rate:9.0f} tokens/s  lr {lr:.5f}  loss {loss:.4f}",
            file=sys.stderr,
        )
        self.last = now
        self.last_tokens = tokens_done


class _TrainState:
    """Counters shared across workers; unsynchronized by design."""

    __slots__ = ("tokens_done", "loss_sum", "loss_count")

    def __init__(self):
        self.tokens_done = 0
        self.loss_sum = 0.0
        self.loss_count = 1e-12


def _iter_sentence_files(corpus: str | Path) -> list[Path]:
    path = Path(corpus)
    if path.is_dir():
        files = sorted(path.glob("*.txt"))
        if not files:
            raise OSError(f"no *.txt shards under {path}")
        return files
    if not path.exists():
        raise OSError(f"corpus not found: {path}")
    return [path]


def _load_sentences(corpus: str | Path) -> list[list[str]]:
    sentences = []
    for file in _iter_sentence_files(corpus):
        with open(file, encoding="utf-8") as fh:
            for line in fh:
                tokens = line.split()
                if tokens:
                    sentences.append(tokens)
    return sentences


def _train_shard(
    emb: EmbeddingSet,
    sentences: list[list[str]],
    config: TrainingConfig,
    sampler: NegativeSampler,
    keep_prob: np.ndarray,
    state: _TrainState,
    total_tokens: int,
    rng: np.random.Generator,
    progress: _Progress | None,
):
    index = emb.vocab.index
    window, negatives = config.window, config.negatives
    lr_start, lr_end = config.lr_start, config.lr_end
    lr_span = lr_start - lr_end
    cumulative = sampler.cumulative

    for _ in range(config.epochs):
        for sentence in sentences:
            ids = [index[w] for w in sentence if w in index]
            state.tokens_done += len(ids)
            if not ids:
                continue
            lr = max(lr_end, lr_start - lr_span * state.tokens_done / total_tokens)

            u = rng.random(len(ids))
            kept = [i for i, ui in zip(ids, u) if ui < keep_prob[i]]
            n = len(kept)
            if n == 0:
                continue
            spans = rng.integers(1, window + 1, size=n)
            negs = np.searchsorted(cumulative, rng.random((n, negatives)), side="right")

            for pos in range(n):
                target = kept[pos]
                b = int(spans[pos])
                context = kept[max(0, pos - b) : pos] + kept[pos + 1 : pos + 1 + b]
                if not context:
                    continue
                row = negs[pos]
                while True:
                    clash = row == target
                    if not clash.any():
                        break
                    row[clash] = np.searchsorted(
                        cumulative, rng.random(int(clash.sum())), side="right"
                    )
                loss = cbow_step(emb, context, target, row, lr)
                state.loss_sum += loss
                state.loss_count += 1

            if progress is not None:
                progress.maybe_report(
                    state.tokens_done, total_tokens, lr, state.loss_sum / state.loss_count
                )


def train(
    corpus: str | Path,
    config: TrainingConfig,
    workers: int = 1,
    log_every: float | None = None,
) -> EmbeddingSet:
    """Train CBoW vectors over a corpus file or directory of *.txt shards.

    Each line is one training sequence of whitespace-separated tokens.  The
    whole run is a pure function of (corpus bytes, config) at workers=1;
    for workers > 1 the lock-free updates make results nondeterministic.
    """
    sentences = _load_sentences(corpus)
    vocab = build_vocab(sentences, config.min_count)
    emb = EmbeddingSet.initialize(vocab, config.dim, config.seed)
    if config.epochs == 0:
        return emb

    sampler = NegativeSampler(vocab.counts)
    freqs = vocab.counts / vocab.total_tokens
    keep_prob = np.array([keep_probability(f, config.subsample_t) for f in freqs])
    total_tokens = max(1, config.epochs * vocab.total_tokens)
    state = _TrainState()
    progress = _Progress(log_every) if log_every else None

    if workers <= 1:
        rng = np.random.default_rng([config.seed, 0])
        _train_shard(
            emb, sentences, config, sampler, keep_prob, state, total_tokens, rng, progress
        )
        return emb

    threads = []
    for worker_id in range(workers):
        shard = sentences[worker_id::workers]
        rng = np.random.default_rng([config.seed, worker_id])
        threads.append(
            threading.Thread(
                target=_train_shard,
                args=(
                    emb,
                    shard,
                    config,
                    sampler,
                    keep_prob,
                    state,
                    total_tokens,
                    rng,
                    progress if worker_id == 0 else None,
                ),
                daemon=True,
            )
        )
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    return emb
