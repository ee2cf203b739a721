"""motvec: web-corpus pipeline, CBoW word vectors and an embedding explorer."""

__version__ = "0.1.0"

from motvec.trainer import EmbeddingSet, TrainingConfig, Vocabulary, train
from motvec.store import (
    NormalizedView,
    load_binary,
    load_embeddings,
    load_text,
    normalize,
    save_binary,
    save_embeddings,
    save_text,
)

__all__ = [
    "EmbeddingSet",
    "NormalizedView",
    "TrainingConfig",
    "Vocabulary",
    "__version__",
    "load_binary",
    "load_embeddings",
    "load_text",
    "normalize",
    "save_binary",
    "save_embeddings",
    "save_text",
    "train",
]
