import math

import numpy as np
import pytest

from conftest import make_embeddings, random_embeddings
from motvec.errors import DegenerateLabels, ShapeError
from motvec.nlu import (
    EncodedPair,
    HeadParams,
    attention_matrix,
    classification_head,
    embed_bag,
    enhance,
    evaluate_probe,
    local_relevance,
    pool_features,
    project_relu,
    train_probe,
)


def naive_attention(a_bar, b_bar):
    e = np.zeros((len(a_bar), len(b_bar)))
    for i in range(len(a_bar)):
        for j in range(len(b_bar)):
            for k in range(a_bar.shape[1]):
                e[i, j] += a_bar[i, k] * b_bar[j, k]
    return e


def naive_alignments(a_bar, b_bar, e):
    l_a, l_b = e.shape
    a_tilde = np.zeros_like(a_bar)
    for i in range(l_a):
        weights = np.exp(e[i] - e[i].max())
        weights /= weights.sum()
        for j in range(l_b):
            a_tilde[i] += weights[j] * b_bar[j]
    b_tilde = np.zeros_like(b_bar)
    for j in range(l_b):
        weights = np.exp(e[:, j] - e[:, j].max())
        weights /= weights.sum()
        for i in range(l_a):
            b_tilde[j] += weights[i] * a_bar[i]
    return a_tilde, b_tilde


# --- attention ----------------------------------------------------------


def test_orthogonal_rows_zero_attention():
    pair = EncodedPair(np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]]))
    assert attention_matrix(pair)[0, 0] == 0.0


def test_identical_sentences_gram_symmetry(rng):
    a = rng.standard_normal((5, 3))
    e = attention_matrix(EncodedPair(a, a.copy()))
    np.testing.assert_allclose(e, e.T, atol=1e-15)


def test_attention_matches_naive_oracle(rng):
    a, b = rng.standard_normal((3, 2)), rng.standard_normal((4, 2))
    e = attention_matrix(EncodedPair(a, b))
    np.testing.assert_allclose(e, naive_attention(a, b), atol=1e-12)


def test_attention_shape_mismatch():
    with pytest.raises(ShapeError):
        EncodedPair(np.zeros((2, 3)), np.zeros((2, 4)))


# --- local relevance ----------------------------------------------------


def test_singleton_second_sentence_copies_row(rng):
    a = rng.standard_normal((4, 3))
    b = rng.standard_normal((1, 3))
    pair = EncodedPair(a, b)
    a_tilde, _ = local_relevance(pair, attention_matrix(pair))
    for i in range(4):
        assert np.array_equal(a_tilde[i], b[0])


def test_uniform_attention_gives_column_mean(rng):
    a = rng.standard_normal((3, 2))
    b = rng.standard_normal((5, 2))
    pair = EncodedPair(a, b)
    e = np.full((3, 5), 0.7)
    a_tilde, b_tilde = local_relevance(pair, e)
    np.testing.assert_allclose(a_tilde, np.tile(b.mean(axis=0), (3, 1)), atol=1e-12)
    np.testing.assert_allclose(b_tilde, np.tile(a.mean(axis=0), (5, 1)), atol=1e-12)


def test_local_relevance_matches_naive_oracle(rng):
    for _ in range(5):
        a = rng.standard_normal((int(rng.integers(1, 6)), 4))
        b = rng.standard_normal((int(rng.integers(1, 6)), 4))
        pair = EncodedPair(a, b)
        e = attention_matrix(pair)
        got_a, got_b = local_relevance(pair, e)
        want_a, want_b = naive_alignments(a, b, e)
        np.testing.assert_allclose(got_a, want_a, atol=1e-9)
        np.testing.assert_allclose(got_b, want_b, atol=1e-9)


def test_softmax_rows_sum_to_one_and_shift_invariant(rng):
    a, b = rng.standard_normal((4, 3)), rng.standard_normal((6, 3))
    pair = EncodedPair(a, b)
    e = attention_matrix(pair)
    a_tilde, _ = local_relevance(pair, e)
    shifted, _ = local_relevance(pair, e + 123.0)
    np.testing.assert_allclose(a_tilde, shifted, atol=1e-9)


def test_identical_sentences_symmetric_blocks(rng):
    a = rng.standard_normal((4, 3))
    pair = EncodedPair(a, a.copy())
    e = attention_matrix(pair)
    a_tilde, b_tilde = local_relevance(pair, e)
    np.testing.assert_allclose(a_tilde, b_tilde, atol=1e-12)
    m_a = enhance(pair.a_bar, a_tilde)
    m_b = enhance(pair.b_bar, b_tilde)
    np.testing.assert_allclose(m_a, m_b, atol=1e-12)


def test_local_relevance_shape_check(rng):
    pair = EncodedPair(rng.standard_normal((2, 3)), rng.standard_normal((3, 3)))
    with pytest.raises(ShapeError):
        local_relevance(pair, np.zeros((3, 2)))


# --- enhancement --------------------------------------------------------


def test_enhance_identity_case():
    row = np.array([[1.0, 2.0]])
    np.testing.assert_array_equal(
        enhance(row, row), np.array([[1.0, 2.0, 1.0, 2.0, 0.0, 0.0, 1.0, 4.0]])
    )


def test_enhance_zero_alignment(rng):
    x = rng.standard_normal((3, 2))
    m = enhance(x, np.zeros_like(x))
    np.testing.assert_array_equal(m[:, :2], x)
    np.testing.assert_array_equal(m[:, 2:4], 0.0)
    np.testing.assert_array_equal(m[:, 4:6], x)
    np.testing.assert_array_equal(m[:, 6:8], 0.0)


def test_enhance_width_is_4d(rng):
    for d in (1, 3, 7):
        x = rng.standard_normal((4, d))
        y = rng.standard_normal((4, d))
        assert enhance(x, y).shape == (4, 4 * d)


def test_projection_relu(rng):
    x = rng.standard_normal((3, 4))
    w = rng.standard_normal((4, 6))
    b = rng.standard_normal(6)
    out = project_relu(x, w, b)
    assert out.shape == (3, 6)
    assert (out >= 0).all()
    np.testing.assert_allclose(out, np.maximum(x @ w + b, 0.0), atol=1e-12)


# --- pooling ------------------------------------------------------------


def test_pooling_hand_example():
    v_a = np.array([[1.0, 3.0], [3.0, 1.0]])
    v_b = np.array([[2.0, 2.0]])
    pooled = pool_features(v_a, v_b)
    np.testing.assert_array_equal(pooled, [2.0, 2.0, 3.0, 3.0, 2.0, 2.0, 2.0, 2.0])


def test_pooling_single_row_avg_equals_max(rng):
    row = rng.standard_normal((1, 4))
    pooled = pool_features(row, row)
    np.testing.assert_array_equal(pooled[:4], row[0])
    np.testing.assert_array_equal(pooled[4:8], row[0])


def test_pooling_permutation_invariant():
    # dyadic values keep the mean exact under any summation order
    rng = np.random.default_rng(5)
    v_a = rng.integers(-8, 8, size=(6, 3)) / 4.0
    v_b = rng.integers(-8, 8, size=(4, 3)) / 4.0
    base = pool_features(v_a, v_b)
    perm = pool_features(v_a[::-1], v_b[[2, 0, 3, 1]])
    np.testing.assert_array_equal(base, perm)


# --- classification head ------------------------------------------------


def head_1d():
    return HeadParams(w1=[[1.0]], b1=[0.0], w2=[[1.0, -1.0]], b2=[0.0, 0.0])


def test_head_zero_input_zero_biases():
    params = HeadParams(
        w1=np.ones((3, 2)), b1=np.zeros(2), w2=np.ones((2, 2)), b2=np.zeros(2)
    )
    np.testing.assert_array_equal(
        classification_head(np.zeros(3), params), [0.0, 0.0]
    )


def test_head_hand_example():
    logits = classification_head(np.array([0.5]), head_1d())
    assert logits[0] == pytest.approx(math.tanh(0.5), abs=1e-9)
    assert logits[0] == pytest.approx(0.46212, abs=1e-5)
    assert logits[1] == pytest.approx(-0.46212, abs=1e-5)


def test_head_eval_is_deterministic(rng):
    params = HeadParams(
        w1=rng.standard_normal((4, 3)),
        b1=rng.standard_normal(3),
        w2=rng.standard_normal((3, 2)),
        b2=rng.standard_normal(2),
    )
    x = rng.standard_normal(4)
    first = classification_head(x, params, mode="eval")
    second = classification_head(x, params, mode="eval")
    np.testing.assert_array_equal(first, second)


def test_head_train_mode_drops_and_rescales(rng):
    params = HeadParams(
        w1=np.eye(50), b1=np.zeros(50), w2=np.ones((50, 2)), b2=np.zeros(2)
    )
    x = np.ones(50)
    out = classification_head(x, params, mode="train", rng=np.random.default_rng(0))
    eval_out = classification_head(x, params, mode="eval")
    assert not np.array_equal(out, eval_out)
    with pytest.raises(ValueError):
        classification_head(x, params, mode="train")


def test_head_output_width_checked():
    with pytest.raises(ShapeError):
        HeadParams(w1=np.ones((2, 2)), b1=np.zeros(2), w2=np.ones((2, 3)), b2=np.zeros(3))


# --- probe --------------------------------------------------------------


def test_embed_bag_single_token():
    emb = make_embeddings(["a", "b"], [[1.0, 0.0], [0.0, 1.0]])
    bag = embed_bag(["a"], emb)
    np.testing.assert_array_equal(bag.vector, [1.0, 0.0])
    assert bag.matched == 1 and not bag.empty


def test_embed_bag_mean():
    emb = make_embeddings(["a", "b"], [[1.0, 0.0], [0.0, 1.0]])
    np.testing.assert_array_equal(embed_bag(["a", "b"], emb).vector, [0.5, 0.5])


def test_embed_bag_all_oov_flagged():
    emb = make_embeddings(["a"], [[1.0, 2.0]])
    bag = embed_bag(["x", "y"], emb)
    np.testing.assert_array_equal(bag.vector, [0.0, 0.0])
    assert bag.empty


def test_probe_fits_separable_data():
    emb = make_embeddings(["haut", "bas"], [[1.0, 0.5], [-1.0, -0.5]])
    dataset = [(1, ["haut"]), (0, ["bas"])] * 20
    model = train_probe(dataset, emb, epochs=300, seed=0)
    assert evaluate_probe(model, dataset, emb) == 1.0


def test_probe_chance_level_on_shuffled_labels():
    emb = random_embeddings(40, 8, seed=3)
    accuracies = []
    for seed in range(10):
        rng = np.random.default_rng(seed)
        dataset = [
            (int(rng.integers(0, 2)), [emb.vocab.words[int(i)] for i in rng.integers(0, 40, 6)])
            for _ in range(120)
        ]
        train_set, test_set = dataset[:60], dataset[60:]
        model = train_probe(train_set, emb, epochs=150, seed=seed)
        accuracies.append(evaluate_probe(model, test_set, emb))
    assert abs(float(np.mean(accuracies)) - 0.5) <= 0.1


def test_probe_loss_non_increasing():
    from motvec.nlu import _log_loss, _probe_features, _sigmoid

    emb = random_embeddings(30, 6, seed=11)
    rng = np.random.default_rng(2)
    dataset = [
        (int(rng.integers(0, 2)), [emb.vocab.words[int(i)] for i in rng.integers(0, 30, 5)])
        for _ in range(80)
    ]
    x, y = _probe_features(dataset, emb)
    w = np.random.default_rng(7).normal(0.0, 0.01, size=x.shape[1])
    b, lr = 0.0, 4.0  # deliberately hot start; halving must keep it monotone
    losses = [_log_loss(x, y, w, b)]
    for _ in range(60):
        margin = _sigmoid(x @ w + b) - y
        gw, gb = x.T @ margin / len(y), float(margin.mean())
        while True:
            w2, b2 = w - lr * gw, b - lr * gb
            if _log_loss(x, y, w2, b2) <= losses[-1] or lr < 1e-12:
                break
            lr *= 0.5
        w, b = w2, b2
        losses.append(_log_loss(x, y, w, b))
    assert all(b <= a + 1e-12 for a, b in zip(losses, losses[1:]))


def test_probe_rejects_single_class():
    emb = make_embeddings(["a"], [[1.0]])
    with pytest.raises(DegenerateLabels):
        train_probe([(1, ["a"]), (1, ["a"])], emb)
