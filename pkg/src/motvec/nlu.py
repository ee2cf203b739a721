"""Sentence-pair inference building blocks and a bag-of-embeddings probe.

The cross-attention block is forward-pass only and works on any externally
produced encodings: similarity matrix e_ij = a_i . b_j, softmax-weighted
soft alignments, and the [x; x~; x - x~; x * x~] enhancement, followed by
avg+max pooling and a tanh classification head.  The probe is a binary
logistic regression over averaged word vectors, the desk-scale stand-in
for a full sequence classifier.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from motvec.errors import DegenerateLabels, ShapeError
from motvec.trainer import EmbeddingSet


@dataclass(frozen=True)
class EncodedPair:
    """Two encoded sentences as row matrices (l_a x d and l_b x d)."""

    a_bar: np.ndarray
    b_bar: np.ndarray

    def __post_init__(self):
        a, b = np.asarray(self.a_bar), np.asarray(self.b_bar)
        if a.ndim != 2 or b.ndim != 2:
            raise ShapeError("encodings must be 2-D (length x width)")
        if a.shape[0] < 1 or b.shape[0] < 1:
            raise ShapeError("each sentence needs at least one row")
        if a.shape[1] != b.shape[1]:
            raise ShapeError(f"width mismatch: {a.shape[1]} vs {b.shape[1]}")
        object.__setattr__(self, "a_bar", a)
        object.__setattr__(self, "b_bar", b)

    @property
    def l_a(self) -> int:
        return self.a_bar.shape[0]

    @property
    def l_b(self) -> int:
        return self.b_bar.shape[0]


def attention_matrix(pair: EncodedPair) -> np.ndarray:
    """e[i, j] = a_i . b_j for every row pair."""
    return pair.a_bar @ pair.b_bar.T


def _softmax(x: np.ndarray, axis: int) -> np.ndarray:
    shifted = x - x.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=axis, keepdims=True)


def local_relevance(pair: EncodedPair, e: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Soft alignments: each row of one sentence as a softmax-weighted sum
    of the other sentence's rows."""
    e = np.asarray(e)
    if e.shape != (pair.l_a, pair.l_b):
        raise ShapeError(f"e must be {(pair.l_a, pair.l_b)}, got {e.shape}")
    a_tilde = _softmax(e, axis=1) @ pair.b_bar
    b_tilde = _softmax(e, axis=0).T @ pair.a_bar
    return a_tilde, b_tilde


def enhance(x_bar: np.ndarray, x_tilde: np.ndarray) -> np.ndarray:
    """Concatenate [x; x~; x - x~; x * x~] row-wise: (l, d) -> (l, 4d)."""
    x_bar, x_tilde = np.asarray(x_bar), np.asarray(x_tilde)
    if x_bar.shape != x_tilde.shape:
        raise ShapeError(f"shape mismatch: {x_bar.shape} vs {x_tilde.shape}")
    return np.concatenate([x_bar, x_tilde, x_bar - x_tilde, x_bar * x_tilde], axis=1)


def project_relu(x: np.ndarray, weight: np.ndarray, bias: np.ndarray) -> np.ndarray:
    """Row-wise affine + ReLU projection (the eval-mode projection layer)."""
    x, weight, bias = np.asarray(x), np.asarray(weight), np.asarray(bias)
    if x.shape[-1] != weight.shape[0]:
        raise ShapeError(f"input width {x.shape[-1]} != weight rows {weight.shape[0]}")
    return np.maximum(x @ weight + bias, 0.0)


def pool_features(v_a: np.ndarray, v_b: np.ndarray) -> np.ndarray:
    """[avg(v_a); max(v_a); avg(v_b); max(v_b)] pooled over the length axis."""
    v_a, v_b = np.asarray(v_a), np.asarray(v_b)
    if v_a.ndim != 2 or v_b.ndim != 2 or v_a.shape[0] < 1 or v_b.shape[0] < 1:
        raise ShapeError("pooling inputs must be non-empty 2-D matrices")
    if v_a.shape[1] != v_b.shape[1]:
        raise ShapeError(f"width mismatch: {v_a.shape[1]} vs {v_b.shape[1]}")
    return np.concatenate(
        [v_a.mean(axis=0), v_a.max(axis=0), v_b.mean(axis=0), v_b.max(axis=0)]
    )


@dataclass(frozen=True)
class HeadParams:
    """dropout -> linear -> tanh -> dropout -> linear, two output classes."""

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: np.ndarray
    dropout_rate: float = 0.1

    def __post_init__(self):
        w1, b1 = np.atleast_2d(self.w1), np.atleast_1d(self.b1)
        w2, b2 = np.atleast_2d(self.w2), np.atleast_1d(self.b2)
        if w2.shape[1] != 2 or b2.shape[0] != 2:
            raise ShapeError("head output width must be 2 (the number of classes)")
        if w1.shape[1] != b1.shape[0] or w1.shape[1] != w2.shape[0]:
            raise ShapeError("hidden widths of w1, b1, w2 disagree")
        for name, value in (("w1", w1), ("b1", b1), ("w2", w2), ("b2", b2)):
            object.__setattr__(self, name, value)


def classification_head(
    x: np.ndarray,
    params: HeadParams,
    mode: str = "eval",
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """Two-class logits.  Inverted dropout: eval mode is exactly the plain
    affine/tanh/affine stack, train mode zeroes units at `dropout_rate` and
    rescales survivors by 1/(1-rate)."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (params.w1.shape[0],):
        raise ShapeError(f"input must be a {params.w1.shape[0]}-vector, got {x.shape}")
    if mode not in ("train", "eval"):
        raise ValueError("mode must be 'train' or 'eval'")

    def dropout(v: np.ndarray) -> np.ndarray:
        if mode != "train" or params.dropout_rate == 0.0:
            return v
        if rng is None:
            raise ValueError("train mode needs an rng")
        keep = rng.random(v.shape) >= params.dropout_rate
        return v * keep / (1.0 - params.dropout_rate)

    hidden = np.tanh(dropout(x) @ params.w1 + params.b1)
    return dropout(hidden) @ params.w2 + params.b2


class BagVector(NamedTuple):
    vector: np.ndarray
    matched: int

    @property
    def empty(self) -> bool:
        return self.matched == 0


def embed_bag(tokens: Sequence[str], emb: EmbeddingSet) -> BagVector:
    """Mean of the in-vocabulary token vectors; zero vector when none match."""
    index = emb.vocab.index
    rows = [index[t] for t in tokens if t in index]
    if not rows:
        return BagVector(np.zeros(emb.dim), 0)
    return BagVector(emb.input_vectors[rows].astype(np.float64).mean(axis=0), len(rows))


@dataclass
class ProbeModel:
    weights: np.ndarray
    bias: float


def _sigmoid(x: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def _probe_features(
    dataset: Sequence[tuple[int, Sequence[str]]], emb: EmbeddingSet
) -> tuple[np.ndarray, np.ndarray]:
    features = np.stack([embed_bag(tokens, emb).vector for _, tokens in dataset])
    labels = np.array([label for label, _ in dataset], dtype=np.float64)
    return features, labels


def _log_loss(x: np.ndarray, y: np.ndarray, w: np.ndarray, b: float) -> float:
    scores = x @ w + b
    # -log sigmoid(s) = softplus(-s); labels flip the sign
    return float(np.logaddexp(0.0, np.where(y > 0.5, -scores, scores)).mean())


def train_probe(
    dataset: Sequence[tuple[int, Sequence[str]]],
    emb: EmbeddingSet,
    epochs: int = 200,
    lr: float = 1.0,
    seed: int = 7,
) -> ProbeModel:
    """Full-batch logistic regression over averaged embeddings.

    The step size halves whenever a step would increase the loss, so the
    training loss is non-increasing; deterministic for a fixed seed.
    """
    labels = {label for label, _ in dataset}
    if len(labels) < 2:
        raise DegenerateLabels(f"training labels {sorted(labels)} span a single class")
    x, y = _probe_features(dataset, emb)
    rng = np.random.default_rng(seed)
    w = rng.normal(0.0, 0.01, size=x.shape[1])
    b = 0.0

    loss = _log_loss(x, y, w, b)
    for _ in range(epochs):
        margin = _sigmoid(x @ w + b) - y
        grad_w = x.T @ margin / len(y)
        grad_b = float(margin.mean())
        while True:
            w_next = w - lr * grad_w
            b_next = b - lr * grad_b
            loss_next = _log_loss(x, y, w_next, b_next)
            if loss_next <= loss:
                break
            lr *= 0.5
            if lr < 1e-12:
                return ProbeModel(w, b)
        w, b, loss = w_next, b_next, loss_next
    return ProbeModel(w, b)


def evaluate_probe(
    model: ProbeModel,
    dataset: Sequence[tuple[int, Sequence[str]]],
    emb: EmbeddingSet,
) -> float:
    """Accuracy of the probe on a labeled dataset."""
    x, y = _probe_features(dataset, emb)
    predicted = (x @ model.weights + model.bias) >= 0.0
    return float((predicted == (y > 0.5)).mean())
