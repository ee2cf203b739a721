"""Record UI test fixtures from the real service.

Builds a deterministic 300-word model whose first five words form an exact
analogy parallelogram, replays the canonical explorer session against the
FastAPI app, and freezes every response under frontend/test/fixtures/.
Run from the repository root:

    python scripts/make_ui_fixtures.py
"""

import json
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from motvec.service import LoadedModel, ModelRegistry, create_app
from motvec.store import normalize
from motvec.trainer import EmbeddingSet, Vocabulary

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures"


def fixture_model() -> EmbeddingSet:
    rng = np.random.default_rng(2024)
    planted = {
        "homme": [4.0, 0.0, 0.0, 0.0],
        "femme": [4.0, 4.0, 0.0, 0.0],
        "roi": [8.0, 4.0, 2.0, 0.0],
        "reine": [8.0, 8.0, 2.0, 0.0],
        "tour": [0.5, 12.0, 0.0, 1.0],
    }
    words = list(planted) + [f"mot{i:03d}" for i in range(295)]
    filler = rng.standard_normal((295, 4)) * 2.0
    matrix = np.vstack([np.array(list(planted.values())), filler])
    return EmbeddingSet(Vocabulary(words), matrix.astype(np.float64))


def main():
    emb = fixture_model()
    registry = ModelRegistry([LoadedModel("demo", emb, normalize(emb))])
    client = TestClient(create_app(registry))
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)

    session = {
        "models": ("GET", "/api/models", None),
        "analogy": ("POST", "/api/analogy", {"a": "homme", "b": "roi", "c": "femme", "k": 10}),
        "neighbors": ("POST", "/api/neighbors", {"word": "reine", "k": 10}),
        "visualize": ("POST", "/api/visualize", {"word": "reine", "n": 200, "k": 8, "seed": 1}),
        "similarity": ("POST", "/api/similarity", {"w1": "roi", "w2": "reine"}),
        "analogy_oov": ("POST", "/api/analogy", {"a": "homme", "b": "roi", "c": "zyx"}),
    }
    for name, (method, path, body) in session.items():
        response = client.get(path) if method == "GET" else client.post(path, json=body)
        payload = response.json()
        if name != "analogy_oov":
            assert response.status_code == 200, (name, payload)
            payload["elapsedMs"] = 1.0  # freeze the one nondeterministic field
        else:
            assert response.status_code == 422
            payload = {"status": 422, "body": payload}
        out = FIXTURE_DIR / f"{name}.json"
        out.write_text(json.dumps(payload, indent=1, ensure_ascii=False) + "\n", "utf-8")
        print(f"wrote {out.relative_to(FIXTURE_DIR.parent.parent)}")

    top = json.loads((FIXTURE_DIR / "analogy.json").read_text("utf-8"))["results"][0]
    assert top["word"] == "reine", top


if __name__ == "__main__":
    main()
