import numpy as np
import pytest

from motvec.trainer import EmbeddingSet, Vocabulary

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE):
        outcome = "PASS" if _ACCEPTANCE[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{outcome}  {nodeid.split('::')[-1]}")


def make_embeddings(words, matrix, counts=None) -> EmbeddingSet:
    """Embedding set from explicit rows, for hand-built fixtures."""
    return EmbeddingSet(Vocabulary(list(words), counts), np.asarray(matrix, dtype=np.float64))


def random_embeddings(v, d, seed, words=None) -> EmbeddingSet:
    rng = np.random.default_rng(seed)
    words = words or [f"w{i:04d}" for i in range(v)]
    return make_embeddings(words, rng.standard_normal((v, d)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
