import math

import numpy as np
import pytest

from conftest import make_embeddings, random_embeddings
from motvec.errors import OovWord
from motvec.query import cosine, neighbors
from motvec.store import normalize


def hand_view():
    return normalize(make_embeddings(["x", "y", "d"], [[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))


def full_scan_oracle(view, word, k):
    idx = view.resolve(word)
    scored = []
    for i in range(len(view)):
        if i == idx or view.zero_rows[i]:
            continue
        scored.append((-float(view.unit_vectors[i] @ view.unit_vectors[idx]), i))
    scored.sort()
    return [(view.words[i], -s) for s, i in scored[:k]]


def test_cosine_self_is_one():
    view = hand_view()
    assert cosine(view, "x", "x") == pytest.approx(1.0, abs=1e-9)


def test_cosine_orthogonal():
    assert cosine(hand_view(), "x", "y") == pytest.approx(0.0, abs=1e-12)


def test_cosine_45_degrees():
    assert cosine(hand_view(), "x", "d") == pytest.approx(1 / math.sqrt(2), abs=1e-5)


def test_cosine_symmetry(rng):
    view = normalize(random_embeddings(30, 5, seed=1))
    for _ in range(50):
        w1, w2 = (view.words[int(i)] for i in rng.integers(0, 30, size=2))
        assert abs(cosine(view, w1, w2) - cosine(view, w2, w1)) <= 1e-9


def test_cosine_oov():
    with pytest.raises(OovWord):
        cosine(hand_view(), "x", "absent")


def test_neighbors_hand_ranking():
    view = hand_view()
    result = neighbors(view, "d", k=2)
    assert [w for w, _ in result] == ["x", "y"]  # equal scores, index breaks the tie
    assert result[0][1] == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_neighbors_all_words():
    view = normalize(random_embeddings(12, 4, seed=6))
    result = neighbors(view, view.words[0], k=11)
    assert len(result) == 11
    assert view.words[0] not in [w for w, _ in result]


def test_neighbors_prefix_property():
    view = normalize(random_embeddings(25, 6, seed=9))
    short = neighbors(view, view.words[3], k=5)
    longer = neighbors(view, view.words[3], k=9)
    assert longer[:5] == short


def test_neighbors_scores_non_increasing(rng):
    view = normalize(random_embeddings(40, 7, seed=13))
    for _ in range(10):
        result = neighbors(view, view.words[int(rng.integers(0, 40))], k=15)
        scores = [s for _, s in result]
        assert all(a >= b for a, b in zip(scores, scores[1:]))


def test_neighbors_equals_full_scan_oracle(rng):
    view = normalize(random_embeddings(60, 8, seed=21))
    for _ in range(25):
        word = view.words[int(rng.integers(0, 60))]
        k = int(rng.integers(1, 59))
        got = neighbors(view, word, k)
        expected = full_scan_oracle(view, word, k)
        assert [w for w, _ in got] == [w for w, _ in expected]
        # scores agree up to BLAS summation order
        np.testing.assert_allclose(
            [s for _, s in got], [s for _, s in expected], atol=1e-12
        )


def test_neighbors_tie_order_matches_oracle():
    # duplicated rows force exact ties; vocabulary order must decide
    rows = [[1.0, 0.0], [0.5, 0.5], [0.5, 0.5], [0.5, 0.5], [0.0, 1.0]]
    view = normalize(make_embeddings(["q", "t1", "t2", "t3", "autre"], rows))
    result = neighbors(view, "q", k=4)
    assert [w for w, _ in result] == ["t1", "t2", "t3", "autre"]
    assert result == full_scan_oracle(view, "q", 4)


def test_neighbors_k_bounds():
    view = hand_view()
    with pytest.raises(ValueError):
        neighbors(view, "x", k=0)
    with pytest.raises(ValueError):
        neighbors(view, "x", k=3)
