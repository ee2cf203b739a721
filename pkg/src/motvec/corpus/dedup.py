"""Streaming exact line deduplication over 128-bit content digests.

Only digests are retained in memory, never the lines themselves; xxh3-128
keeps accidental collisions negligible at desk scale and is fast enough to
sustain well over the pipeline's throughput needs.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Iterator

from xxhash import xxh3_128_intdigest


def line_digest(line: str) -> int:
    """128-bit digest of one line's UTF-8 bytes."""
    return xxh3_128_intdigest(line.encode("utf-8"))


class DigestSet:
    """Shared digest set with atomic insert-if-absent semantics.

    Safe to share across threads deduplicating different shards: concurrent
    insertion of the same digest keeps exactly one line.
    """

    __slots__ = ("_seen", "_lock")

    def __init__(self):
        self._seen: set[int] = set()
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._seen)

    def add(self, line: str) -> bool:
        """Insert the line's digest; True if it was not present before."""
        digest = xxh3_128_intdigest(line.encode("utf-8"))
        with self._lock:
            if digest in self._seen:
                return False
            self._seen.add(digest)
            return True


def dedup_lines(lines: Iterable[str], seen: DigestSet | None = None) -> Iterator[str]:
    """Yield the first occurrence of each distinct line, in input order.

    With `seen` given, the digest set is shared (and thread-safe); without
    it a private set is used on a faster lock-free path.
    """
    if seen is not None:
        for line in lines:
            if seen.add(line):
                yield line
        return

    digests: set[int] = set()
    add = digests.add
    digest = xxh3_128_intdigest
    for line in lines:
        d = digest(line.encode("utf-8"))
        if d not in digests:
            add(d)
            yield line
