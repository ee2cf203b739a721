import numpy as np
import pytest

from conftest import make_embeddings, random_embeddings
from motvec.errors import DuplicateWord, FormatError, OovWord, UnexpectedEof
from motvec.store import (
    load_binary,
    load_text,
    normalize,
    save_binary,
    save_text,
)


def test_text_format_exact_bytes(tmp_path):
    emb = make_embeddings(["a"], [[0.5, -1.0]])
    path = tmp_path / "m.vec"
    save_text(emb, path)
    assert path.read_bytes() == b"1 2\na 0.50000000 -1.0000000\n"
    loaded = load_text(path)
    assert loaded.vocab.words == ["a"]
    np.testing.assert_allclose(loaded.input_vectors, emb.input_vectors, atol=5e-7)


def test_text_round_trip_tolerance(tmp_path):
    emb = random_embeddings(50, 7, seed=3)
    path = tmp_path / "m.vec"
    save_text(emb, path)
    loaded = load_text(path)
    assert loaded.vocab.words == emb.vocab.words
    err = np.abs(loaded.input_vectors - emb.input_vectors) / np.abs(emb.input_vectors)
    assert err.max() <= 5e-7


def test_text_save_load_save_fixed_point(tmp_path):
    emb = random_embeddings(40, 5, seed=9)
    first, second = tmp_path / "1.vec", tmp_path / "2.vec"
    save_text(emb, first)
    save_text(load_text(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_text_dimension_mismatch(tmp_path):
    path = tmp_path / "bad.vec"
    path.write_text("2 3\na 1.0 2.0 3.0\nb 1.0 2.0\n", encoding="utf-8")
    with pytest.raises(FormatError) as err:
        load_text(path)
    assert err.value.line == 3


def test_text_duplicate_word(tmp_path):
    path = tmp_path / "dup.vec"
    path.write_text("2 1\na 1.0\na 2.0\n", encoding="utf-8")
    with pytest.raises(DuplicateWord):
        load_text(path)


def test_text_truncated_rows(tmp_path):
    path = tmp_path / "short.vec"
    path.write_text("3 1\na 1.0\n", encoding="utf-8")
    with pytest.raises(UnexpectedEof):
        load_text(path)


def test_text_rejects_token_with_space():
    emb = make_embeddings(["a b"], [[1.0]])
    with pytest.raises(FormatError):
        save_text(emb, "/dev/null")


def test_binary_round_trip_bit_exact(tmp_path):
    rng = np.random.default_rng(17)
    matrix = rng.standard_normal((100, 16)).astype(np.float32)
    emb = make_embeddings([f"mot{i}" for i in range(100)], matrix)
    path = tmp_path / "m.bin"
    save_binary(emb, path)
    loaded = load_binary(path)
    assert loaded.vocab.words == emb.vocab.words
    assert loaded.input_vectors.dtype == np.float32
    assert np.array_equal(loaded.input_vectors, matrix)


def test_binary_hand_built_fixture(tmp_path):
    # bytes written by hand: header, then token 0x20 float32 LE payloads
    path = tmp_path / "hand.bin"
    path.write_bytes(
        b"2 2\n"
        + b"un " + np.array([0.5, -1.0], dtype="<f4").tobytes()
        + b"deux " + np.array([2.0, 4.5], dtype="<f4").tobytes()
    )
    emb = load_binary(path)
    assert emb.vocab.words == ["un", "deux"]
    assert emb.input_vectors.tolist() == [[0.5, -1.0], [2.0, 4.5]]


def test_binary_truncated_reports_word_index(tmp_path):
    emb = make_embeddings(["a", "b"], [[1.0, 2.0], [3.0, 4.0]])
    path = tmp_path / "m.bin"
    save_binary(emb, path)
    clipped = tmp_path / "clip.bin"
    clipped.write_bytes(path.read_bytes()[:-5])
    with pytest.raises(UnexpectedEof) as err:
        load_binary(clipped)
    assert "word 1" in str(err.value)


def test_binary_invalid_utf8_token(tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"1 1\n\xff\xfe " + np.float32(1.0).tobytes())
    with pytest.raises(FormatError):
        load_binary(path)


def test_binary_and_text_loaders_agree(tmp_path):
    emb = random_embeddings(30, 6, seed=5)
    text_path, bin_path = tmp_path / "m.vec", tmp_path / "m.bin"
    save_text(emb, text_path)
    save_binary(emb, bin_path)
    a = load_text(text_path).input_vectors
    b = load_binary(bin_path).input_vectors.astype(np.float64)
    scale = np.maximum(np.abs(emb.input_vectors), 1e-12)
    assert (np.abs(a - b) / scale).max() <= 5e-7


def test_normalize_values():
    emb = make_embeddings(["w", "unit", "zero"], [[3.0, 4.0], [1.0, 0.0], [0.0, 0.0]])
    view = normalize(emb)
    np.testing.assert_allclose(view.unit_vectors[0], [0.6, 0.8], atol=1e-12)
    assert view.norms[0] == pytest.approx(5.0)
    np.testing.assert_allclose(view.unit_vectors[1], [1.0, 0.0])
    assert view.norms[1] == 1.0
    assert view.zero_rows.tolist() == [False, False, True]
    # the source set is untouched
    assert emb.input_vectors[0].tolist() == [3.0, 4.0]


def test_normalize_idempotent():
    emb = random_embeddings(20, 4, seed=1)
    view = normalize(emb)
    again = normalize(make_embeddings(emb.vocab.words, view.unit_vectors.copy()))
    np.testing.assert_allclose(again.unit_vectors, view.unit_vectors, atol=1e-12)
    np.testing.assert_allclose(again.norms, 1.0, atol=1e-12)


def test_unit_norms_within_tolerance():
    view = normalize(random_embeddings(64, 9, seed=2))
    norms = np.linalg.norm(view.unit_vectors, axis=1)
    np.testing.assert_allclose(norms, 1.0, atol=1e-6)


def test_view_is_read_only():
    view = normalize(random_embeddings(4, 3, seed=0))
    with pytest.raises(ValueError):
        view.unit_vectors[0, 0] = 9.9


def test_lookup_policy_exact_then_lowercase():
    emb = make_embeddings(["Paris", "paris", "Lyon"], np.eye(3))
    view = normalize(emb)
    assert view.resolve("Paris") == 0
    assert view.resolve("paris") == 1
    assert view.resolve("LYON") == 2
    with pytest.raises(OovWord) as err:
        view.resolve("Nice")
    assert err.value.token == "Nice"
