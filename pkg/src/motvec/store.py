"""Embedding persistence (text and binary interchange formats) and the
normalized row view behind every similarity query.

Text format: header "V D", then one line per word with D values printed at
exactly 8 significant digits, which makes save -> load -> save a byte-level
fixed point.  Binary format: ASCII header, then per word the UTF-8 token,
one 0x20 byte and D little-endian float32 values.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from motvec.errors import DuplicateWord, FormatError, OovWord, UnexpectedEof
from motvec.trainer import EmbeddingSet, Vocabulary


def _check_token(token: str):
    if token == "" or " " in token or "\n" in token or "\r" in token:
        raise FormatError(f"token not storable: {token!r}")


def _format_value(x: float) -> str:
    return f"{x:#.8g}"


def save_text(emb: EmbeddingSet, path: str | Path):
    vectors = emb.input_vectors
    if not np.isfinite(vectors).all():
        raise FormatError("embedding matrix contains non-finite values")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{len(emb.vocab)} {emb.dim}\n")
        for word, row in zip(emb.vocab.words, vectors):
            _check_token(word)
            fh.write(word)
            for x in row:
                fh.write(" " + _format_value(float(x)))
            fh.write("\n")


def load_text(path: str | Path) -> EmbeddingSet:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or not all(p.isdigit() for p in header):
            raise FormatError("header must be 'V D'", line=1)
        v, d = int(header[0]), int(header[1])
        words: list[str] = []
        seen: set[str] = set()
        matrix = np.empty((v, d), dtype=np.float64)
        for i in range(v):
            line = fh.readline()
            if line == "":
                raise UnexpectedEof(f"expected {v} rows, file ended after {i}")
            parts = line.rstrip("\n").split(" ")
            if len(parts) != d + 1:
                raise FormatError(
                    f"row has {len(parts) - 1} values, header says {d}", line=i + 2
                )
            token = parts[0]
            if token in seen:
                raise DuplicateWord(token)
            seen.add(token)
            words.append(token)
            try:
                matrix[i] = [float(p) for p in parts[1:]]
            except ValueError:
                raise FormatError("non-numeric vector component", line=i + 2) from None
    return EmbeddingSet(Vocabulary(words), matrix)


def save_binary(emb: EmbeddingSet, path: str | Path):
    vectors = np.asarray(emb.input_vectors, dtype=np.float32)
    if not np.isfinite(vectors).all():
        raise FormatError("embedding matrix contains non-finite values")
    with open(path, "wb") as fh:
        fh.write(f"{len(emb.vocab)} {emb.dim}\n".encode("ascii"))
        for word, row in zip(emb.vocab.words, vectors):
            _check_token(word)
            fh.write(word.encode("utf-8") + b" " + row.tobytes())


def load_binary(path: str | Path) -> EmbeddingSet:
    data = Path(path).read_bytes()
    eol = data.find(b"\n")
    if eol < 0:
        raise FormatError("missing header line", line=1)
    header = data[:eol].split()
    if len(header) != 2 or not all(p.isdigit() for p in header):
        raise FormatError("header must be 'V D'", line=1)
    v, d = int(header[0]), int(header[1])
    row_bytes = 4 * d
    words: list[str] = []
    seen: set[str] = set()
    matrix = np.empty((v, d), dtype=np.float32)
    offset = eol + 1
    for i in range(v):
        sep = data.find(b" ", offset)
        if sep < 0:
            raise UnexpectedEof(f"stream ended in token of word {i}")
        token_bytes = data[offset:sep]
        if b"\n" in token_bytes:
            raise FormatError(f"token of word {i} contains a newline")
        try:
            token = token_bytes.decode("utf-8")
        except UnicodeDecodeError:
            raise FormatError(f"token of word {i} is not valid UTF-8") from None
        if token in seen:
            raise DuplicateWord(token)
        seen.add(token)
        if len(data) < sep + 1 + row_bytes:
            raise UnexpectedEof(f"vector of word {i} truncated")
        matrix[i] = np.frombuffer(data, dtype="<f4", count=d, offset=sep + 1)
        words.append(token)
        offset = sep + 1 + row_bytes
    return EmbeddingSet(Vocabulary(words), matrix)


def save_embeddings(emb: EmbeddingSet, path: str | Path):
    """Pick the format from the suffix: .bin is binary, anything else text."""
    if str(path).endswith(".bin"):
        save_binary(emb, path)
    else:
        save_text(emb, path)


def load_embeddings(path: str | Path) -> EmbeddingSet:
    if str(path).endswith(".bin"):
        return load_binary(path)
    return load_text(path)


class NormalizedView:
    """L2-normalized, read-only view of an embedding matrix.

    Zero rows are flagged and excluded from search rather than rejected.
    Lookup policy (shared by every query surface): exact token first, then
    lowercase fallback to the lowest matching vocabulary index.
    """

    __slots__ = ("words", "index", "unit_vectors", "norms", "zero_rows", "_lower")

    def __init__(self, words: list[str], unit_vectors: np.ndarray, norms: np.ndarray):
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self.unit_vectors = unit_vectors
        self.norms = norms
        self.zero_rows = norms == 0.0
        unit_vectors.setflags(write=False)
        norms.setflags(write=False)
        lower: dict[str, int] = {}
        for i, w in enumerate(words):
            lower.setdefault(w.lower(), i)
        self._lower = lower

    def __len__(self) -> int:
        return len(self.words)

    @property
    def dim(self) -> int:
        return self.unit_vectors.shape[1]

    def resolve(self, token: str) -> int:
        idx = self.index.get(token)
        if idx is None:
            idx = self._lower.get(token.lower())
        if idx is None:
            raise OovWord(token)
        return idx

    def original(self, idx: int) -> np.ndarray:
        """Row in the original (unnormalized) embedding space."""
        return self.unit_vectors[idx] * self.norms[idx]


def normalize(emb: EmbeddingSet) -> NormalizedView:
    """Build the unit-row view; the embedding set itself is untouched."""
    vectors = emb.input_vectors
    norms = np.sqrt((vectors.astype(np.float64) ** 2).sum(axis=1))
    safe = np.where(norms == 0.0, 1.0, norms)
    unit = (vectors / safe[:, None]).astype(vectors.dtype, copy=False)
    return NormalizedView(list(emb.vocab.words), np.ascontiguousarray(unit), norms)
