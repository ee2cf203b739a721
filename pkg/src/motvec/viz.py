"""Neighborhood visualization: exact t-SNE to 2-D plus k-means clusters.

Clustering runs in the original embedding space so the colors reflect
semantic groupings; t-SNE only supplies the 2-D layout.  Both are exact
O(n^2) algorithms, deterministic for a fixed seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from motvec.errors import PerplexityTooLarge, TooFewPoints
from motvec.query import neighbors
from motvec.store import NormalizedView

KMEANS_MAX_ITER = 100
KMEANS_REL_TOL = 1e-6
ENTROPY_TOL = 1e-5
EARLY_EXAGGERATION = 12.0
EXAGGERATION_ITERS = 250
TSNE_LEARNING_RATE = 200.0


@dataclass(frozen=True)
class VizRequest:
    word: str
    n: int = 200
    k: int = 8
    seed: int = 1

    def __post_init__(self):
        if not 2 <= self.k < self.n:
            raise ValueError("need 2 <= k < n")


@dataclass
class PlotPoint:
    word: str
    x: float
    y: float
    cluster: int


@dataclass
class ClusterPlot:
    word: str
    points: list[PlotPoint]
    kl_initial: float
    kl_final: float
    inertia: float

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "points": [
                {"word": p.word, "x": p.x, "y": p.y, "cluster": p.cluster}
                for p in self.points
            ],
            "klInitial": self.kl_initial,
            "klFinal": self.kl_final,
            "inertia": self.inertia,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


@dataclass
class KMeansResult:
    assignments: np.ndarray
    centroids: np.ndarray
    inertia: float
    history: list[float] = field(default_factory=list)


def _sq_dists_to(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    # (n, k) squared euclidean distances, clipped against negative roundoff
    d2 = (
        (points * points).sum(axis=1)[:, None]
        - 2.0 * points @ centroids.T
        + (centroids * centroids).sum(axis=1)[None, :]
    )
    return np.maximum(d2, 0.0)


def kmeans(vectors: np.ndarray, k: int, seed: int = 1) -> KMeansResult:
    """Lloyd iterations from a k-means++ start.

    Runs until the relative inertia change drops below 1e-6 or 100
    iterations; an emptied cluster is reseeded to the farthest point.
    Inertia is recorded after every assignment step and never increases.
    """
    points = np.asarray(vectors, dtype=np.float64)
    n = points.shape[0]
    if n < k:
        raise TooFewPoints(f"k-means needs at least k={k} points, got {n}")
    rng = np.random.default_rng(seed)

    centroids = np.empty((k, points.shape[1]))
    centroids[0] = points[rng.integers(n)]
    best_d2 = _sq_dists_to(points, centroids[:1])[:, 0]
    for j in range(1, k):
        total = best_d2.sum()
        if total > 0:
            idx = rng.choice(n, p=best_d2 / total)
        else:
            idx = int(rng.integers(n))
        centroids[j] = points[idx]
        best_d2 = np.minimum(best_d2, _sq_dists_to(points, centroids[j : j + 1])[:, 0])

    history: list[float] = []
    assignments = np.zeros(n, dtype=np.intp)
    inertia = np.inf
    for _ in range(KMEANS_MAX_ITER):
        d2 = _sq_dists_to(points, centroids)
        assignments = d2.argmin(axis=1)
        point_d2 = d2[np.arange(n), assignments]

        for j in range(k):
            if not (assignments == j).any():
                far = int(point_d2.argmax())
                centroids[j] = points[far]
                assignments[far] = j
                point_d2[far] = 0.0

        new_inertia = float(point_d2.sum())
        assert not history or new_inertia <= history[-1] + 1e-9 * max(1.0, history[-1])
        history.append(new_inertia)
        converged = np.isfinite(inertia) and (
            inertia - new_inertia <= KMEANS_REL_TOL * max(inertia, 1e-300)
        )
        inertia = new_inertia
        if converged:
            break
        for j in range(k):
            centroids[j] = points[assignments == j].mean(axis=0)

    return KMeansResult(assignments, centroids, inertia, history)


def pairwise_sq_dists(points: np.ndarray) -> np.ndarray:
    d2 = _sq_dists_to(points, points)
    np.fill_diagonal(d2, 0.0)
    return d2


def conditional_gaussians(
    sq_dists: np.ndarray,
    perplexity: float,
    tol: float = ENTROPY_TOL,
    max_iter: int = 200,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-point Gaussian bandwidths by binary search on the precision.

    Returns (P_conditional, betas) where row i of P holds p_j|i with the
    conditional entropy matched to ln(perplexity) within `tol`.
    """
    n = sq_dists.shape[0]
    target = np.log(perplexity)
    p_cond = np.zeros((n, n))
    betas = np.ones(n)
    others = ~np.eye(n, dtype=bool)

    for i in range(n):
        d = sq_dists[i][others[i]]
        d = d - d.min()  # shift-invariant: stabilizes exp underflow
        beta, beta_min, beta_max = 1.0, -np.inf, np.inf
        for _ in range(max_iter):
            p = np.exp(-d * beta)
            total = p.sum()
            entropy = np.log(total) + beta * (d @ p) / total
            diff = entropy - target
            if abs(diff) <= tol:
                break
            if diff > 0:
                beta_min = beta
                beta = beta * 2.0 if beta_max == np.inf else (beta + beta_max) / 2.0
            else:
                beta_max = beta
                beta = beta / 2.0 if beta_min == -np.inf else (beta + beta_min) / 2.0
        p_cond[i][others[i]] = p / total
        betas[i] = beta
    return p_cond, betas


def joint_probabilities(points: np.ndarray, perplexity: float) -> np.ndarray:
    """Symmetrized affinities: non-negative, symmetric, summing to 1."""
    p_cond, _ = conditional_gaussians(pairwise_sq_dists(points), perplexity)
    n = points.shape[0]
    return (p_cond + p_cond.T) / (2.0 * n)


def _kl_divergence(p: np.ndarray, q: np.ndarray) -> float:
    mask = p > 0
    return float((p[mask] * (np.log(p[mask]) - np.log(q[mask]))).sum())


def _low_dim_affinities(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    num = 1.0 / (1.0 + pairwise_sq_dists(coords))
    np.fill_diagonal(num, 0.0)
    q = num / num.sum()
    return np.maximum(q, 1e-12), num


@dataclass
class TsneResult:
    coords: np.ndarray
    kl_initial: float
    kl_final: float


def tsne(
    vectors: np.ndarray,
    perplexity: float = 30.0,
    seed: int = 1,
    iterations: int = 1000,
) -> TsneResult:
    """Exact t-SNE to two dimensions.

    Momentum gradient descent (0.5, then 0.8 after iteration 250) at
    learning rate 200 with x12 early exaggeration for the first 250
    iterations; coordinates are seeded Gaussian(0, 1e-4) noise.
    """
    points = np.asarray(vectors, dtype=np.float64)
    n = points.shape[0]
    if n < 3:
        raise TooFewPoints(f"t-SNE needs at least 3 points, got {n}")
    if perplexity > (n - 1) / 3.0:
        raise PerplexityTooLarge(f"perplexity {perplexity} > (n-1)/3 = {(n - 1) / 3:.2f}")

    p = joint_probabilities(points, perplexity)
    rng = np.random.default_rng(seed)
    coords = rng.normal(0.0, 1e-4, size=(n, 2))

    q, _ = _low_dim_affinities(coords)
    kl_initial = _kl_divergence(p, q)

    velocity = np.zeros_like(coords)
    gains = np.ones_like(coords)
    for it in range(iterations):
        exaggeration = EARLY_EXAGGERATION if it < EXAGGERATION_ITERS else 1.0
        q, num = _low_dim_affinities(coords)
        w = (exaggeration * p - q) * num
        grad = 4.0 * (w.sum(axis=1)[:, None] * coords - w @ coords)
        momentum = 0.5 if it < EXAGGERATION_ITERS else 0.8
        # per-parameter adaptive gains keep lr 200 stable on small layouts
        agree = (grad > 0) == (velocity > 0)
        gains = np.where(agree, gains * 0.8, gains + 0.2)
        np.clip(gains, 0.01, None, out=gains)
        velocity = momentum * velocity - TSNE_LEARNING_RATE * gains * grad
        coords = coords + velocity
        coords = coords - coords.mean(axis=0)

    q, _ = _low_dim_affinities(coords)
    kl_final = _kl_divergence(p, q)
    return TsneResult(coords, kl_initial, kl_final)


def build_plot(
    view: NormalizedView,
    request: VizRequest,
    perplexity: float = 30.0,
    iterations: int = 1000,
) -> ClusterPlot:
    """Scatter data for a word: its top-n neighborhood clustered and embedded.

    The query word is point 0; the original-space vectors of all n+1 words
    feed both k-means (colors) and t-SNE (coordinates).
    """
    if request.n >= len(view):
        raise TooFewPoints(f"n={request.n} must be below the vocabulary size {len(view)}")
    center = view.resolve(request.word)
    neighborhood = neighbors(view, request.word, k=request.n)
    indices = [center] + [view.index[w] for w, _ in neighborhood]
    vectors = np.stack([view.original(i) for i in indices])

    clusters = kmeans(vectors, request.k, seed=request.seed)
    capped = min(perplexity, (len(indices) - 1) / 3.0)
    layout = tsne(vectors, perplexity=capped, seed=request.seed, iterations=iterations)

    words = [request.word] + [w for w, _ in neighborhood]
    points = [
        PlotPoint(w, float(xy[0]), float(xy[1]), int(cid))
        for w, xy, cid in zip(words, layout.coords, clusters.assignments)
    ]
    return ClusterPlot(
        word=request.word,
        points=points,
        kl_initial=layout.kl_initial,
        kl_final=layout.kl_final,
        inertia=clusters.inertia,
    )
