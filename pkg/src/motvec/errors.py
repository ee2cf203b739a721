"""Exception types shared by all motvec modules."""


class MotvecError(Exception):
    """Base class for every error raised by this package."""


class RecordMalformed(MotvecError):
    """A WARC record violates the container format."""


class UnexpectedEof(MotvecError):
    """Input ended in the middle of a record or vector."""


class TextTooShort(MotvecError):
    """Not enough text to identify a language."""


class NoProfiles(MotvecError):
    """Language detection was called without any profiles."""


class EmptyVocabulary(MotvecError):
    """No word survived the min_count threshold."""


class InvalidFrequency(MotvecError):
    """A word frequency outside (0, 1] was passed to subsampling."""


class FormatError(MotvecError):
    """An embedding file (or question file) does not match its format."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DuplicateWord(MotvecError):
    """The same token appears twice in an embedding file."""


class OovWord(MotvecError):
    """A query token has no embedding row."""

    def __init__(self, token: str):
        super().__init__(f"out-of-vocabulary word: {token!r}")
        self.token = token


class TooFewPoints(MotvecError):
    """Fewer points than the operation needs (e.g. n < k for k-means)."""


class PerplexityTooLarge(MotvecError):
    """t-SNE perplexity exceeds (n - 1) / 3."""


class ShapeError(MotvecError):
    """Array arguments have inconsistent shapes."""


class DegenerateLabels(MotvecError):
    """Probe training set contains a single class."""


class UnknownModel(MotvecError):
    """Request names a model that is not in the registry."""
