import numpy as np
import pytest

from conftest import make_embeddings, random_embeddings
from motvec.analogy import AnalogyQuestion, evaluate, parse_questions, solve_analogy
from motvec.errors import FormatError, OovWord
from motvec.store import normalize


def toy_view():
    # constructed so roi - homme + femme == reine exactly
    words = ["homme", "femme", "roi", "reine", "tour"]
    rows = [[1.0, 0.0], [1.0, 1.0], [2.0, 1.0], [2.0, 2.0], [0.1, 3.0]]
    return normalize(make_embeddings(words, rows))


def brute_force_top1(view, a, b, c):
    """Independent full-scan oracle over raw embedding rows."""
    ia, ib, ic = view.resolve(a), view.resolve(b), view.resolve(c)
    target = view.original(ib) - view.original(ia) + view.original(ic)
    best, best_score = None, -np.inf
    for i in range(len(view)):
        if i in (ia, ib, ic) or view.zero_rows[i]:
            continue
        row = view.original(i)
        score = float(row @ target / (np.linalg.norm(row) * np.linalg.norm(target)))
        if score > best_score:
            best, best_score = i, score
    return view.words[best]


# --- parsing ------------------------------------------------------------


def test_parse_with_category(tmp_path):
    path = tmp_path / "q.txt"
    path.write_text(": capital-fr\nparis france rome italie\n", encoding="utf-8")
    questions = parse_questions(path)
    assert questions == [
        AnalogyQuestion("paris", "france", "rome", "italie", category="capital-fr")
    ]


def test_parse_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("", encoding="utf-8")
    assert parse_questions(path) == []


def test_parse_bad_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("a b c\n", encoding="utf-8")
    with pytest.raises(FormatError) as err:
        parse_questions(path)
    assert err.value.line == 1


def test_parse_blank_lines_ignored(tmp_path):
    path = tmp_path / "q.txt"
    path.write_text("\n: cat\n\na b c d\n\n", encoding="utf-8")
    assert len(parse_questions(path)) == 1


# --- solving ------------------------------------------------------------


def test_parallelogram_fixture():
    view = toy_view()
    results = solve_analogy(view, "homme", "roi", "femme", k=2)
    assert results[0][0] == "reine"
    assert results[0][1] == pytest.approx(1.0, abs=1e-12)


def test_query_words_excluded():
    view = toy_view()
    results = solve_analogy(view, "homme", "homme", "homme", k=4)
    words = [w for w, _ in results]
    assert "homme" not in words
    # target is x_homme itself; nearest other word by cosine wins
    unit = view.unit_vectors
    scores = unit @ unit[view.resolve("homme")]
    scores[view.resolve("homme")] = -np.inf
    assert results[0][0] == view.words[int(np.argmax(scores))]


def test_oov_raises():
    with pytest.raises(OovWord) as err:
        solve_analogy(toy_view(), "homme", "roi", "absent")
    assert err.value.token == "absent"


def test_matches_brute_force_oracle(rng):
    view = normalize(random_embeddings(50, 8, seed=77))
    for _ in range(100):
        a, b, c = (view.words[int(i)] for i in rng.integers(0, 50, size=3))
        assert solve_analogy(view, a, b, c, k=1)[0][0] == brute_force_top1(view, a, b, c)


def test_scale_invariance(rng):
    emb = random_embeddings(30, 6, seed=4)
    scaled = make_embeddings(emb.vocab.words, emb.input_vectors * 37.5)
    view, view_scaled = normalize(emb), normalize(scaled)
    for _ in range(20):
        a, b, c = (view.words[int(i)] for i in rng.integers(0, 30, size=3))
        assert (
            solve_analogy(view, a, b, c, k=1)[0][0]
            == solve_analogy(view_scaled, a, b, c, k=1)[0][0]
        )


def test_candidate_limit_restricts_pool():
    view = toy_view()
    results = solve_analogy(view, "homme", "roi", "femme", k=5, candidate_limit=2)
    assert all(view.index[w] < 2 for w, _ in results)


# --- evaluation ---------------------------------------------------------


def crafted_questions():
    # q1 solved exactly by the parallelogram; q2 expects a word that cannot win
    return [
        AnalogyQuestion("homme", "roi", "femme", "reine", category="couronne"),
        AnalogyQuestion("homme", "roi", "tour", "homme", category="couronne"),
    ]


def test_accuracy_half():
    report = evaluate(toy_view(), crafted_questions())
    assert report.attempted == 2
    assert report.correct == 1
    assert report.accuracy == 0.5


def test_oov_questions_skipped():
    questions = crafted_questions() + [
        AnalogyQuestion("homme", "roi", "femme", "inconnu", category="oov")
    ]
    report = evaluate(toy_view(), questions)
    assert report.attempted == 2
    assert report.skipped_oov == 1
    assert report.categories["oov"].skipped_oov == 1


def test_all_oov_degenerate():
    questions = [AnalogyQuestion("x", "y", "z", "w")]
    report = evaluate(toy_view(), questions)
    assert report.attempted == 0
    assert report.accuracy == 0.0
    assert report.all_skipped


def test_totals_equal_category_sums():
    report = evaluate(toy_view(), crafted_questions() * 3)
    assert report.attempted == sum(c.attempted for c in report.categories.values())
    assert report.correct == sum(c.correct for c in report.categories.values())


def test_order_independence(rng):
    view = normalize(random_embeddings(40, 6, seed=8))
    questions = [
        AnalogyQuestion(*(view.words[int(i)] for i in rng.integers(0, 40, size=4)),
                        category=f"cat{int(rng.integers(0, 3))}")
        for _ in range(30)
    ]
    base = evaluate(view, questions)
    shuffled = list(questions)
    rng.shuffle(shuffled)
    other = evaluate(view, shuffled)
    assert base.to_dict() == other.to_dict()


def test_case_insensitive_match():
    words = ["Homme", "Femme", "Roi", "REINE", "tour"]
    rows = [[1.0, 0.0], [1.0, 1.0], [2.0, 1.0], [2.0, 2.0], [0.1, 3.0]]
    view = normalize(make_embeddings(words, rows))
    questions = [AnalogyQuestion("homme", "roi", "femme", "reine")]
    report = evaluate(view, questions)
    assert report.attempted == 1 and report.correct == 1
