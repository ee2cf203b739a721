"""WARC 1.0/1.1 record reader and fixture writer.

Records are parsed as raw content blocks: version line, named headers, a
payload of exactly Content-Length bytes, then a blank separator.  A stream
whose first two bytes are the gzip magic is transparently gunzipped, which
covers the common record-per-member compression layout.
"""

from __future__ import annotations

import gzip
import io
from collections.abc import Iterator, MutableMapping
from dataclasses import dataclass, field
from typing import BinaryIO

from motvec.errors import RecordMalformed, UnexpectedEof

_VERSIONS = ("WARC/1.0", "WARC/1.1")
_KNOWN_TYPES = ("response", "request", "metadata")


class Headers(MutableMapping):
    """Ordered name->value map with case-insensitive names."""

    def __init__(self, items=()):
        self._data: dict[str, tuple[str, str]] = {}
        if isinstance(items, Headers):
            items = items.items()
        elif isinstance(items, dict):
            items = items.items()
        for name, value in items:
            self[name] = value

    def __setitem__(self, name: str, value: str):
        self._data[name.lower()] = (name, value)

    def __getitem__(self, name: str) -> str:
        return self._data[name.lower()][1]

    def __delitem__(self, name: str):
        del self._data[name.lower()]

    def __iter__(self):
        return (orig for orig, _ in self._data.values())

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if not isinstance(other, (Headers, dict)):
            return NotImplemented
        other = other if isinstance(other, Headers) else Headers(other)
        return {k: v for k, (_, v) in self._data.items()} == {
            k: v for k, (_, v) in other._data.items()
        }

    def __repr__(self):
        return f"Headers({dict(self.items())!r})"


@dataclass
class WarcRecord:
    headers: Headers
    payload: bytes
    version: str = "WARC/1.0"
    record_type: str = field(init=False)
    declared_length: int = field(init=False)

    def __post_init__(self):
        declared = self.headers.get("Content-Length")
        self.declared_length = len(self.payload) if declared is None else int(declared)
        warc_type = self.headers.get("WARC-Type", "").lower()
        self.record_type = warc_type if warc_type in _KNOWN_TYPES else "other"


def read_warc(stream: BinaryIO) -> Iterator[WarcRecord]:
    """Yield records from a (possibly gzipped) WARC stream, in file order.

    All record types are yielded; callers filter on ``record_type``.
    Raises RecordMalformed for structural damage and UnexpectedEof for a
    truncated payload.
    """
    if not hasattr(stream, "peek"):
        stream = io.BufferedReader(stream)
    if stream.peek(2)[:2] == b"\x1f\x8b":
        stream = gzip.GzipFile(fileobj=stream)

    index = 0
    while True:
        line = stream.readline()
        # tolerate blank padding between records
        while line in (b"\r\n", b"\n"):
            line = stream.readline()
        if line == b"":
            return
        version = line.rstrip(b"\r\n").decode("utf-8", "replace")
        if version not in _VERSIONS:
            raise RecordMalformed(f"record {index}: bad version line {version!r}")

        headers = Headers()
        while True:
            line = stream.readline()
            if line == b"":
                raise UnexpectedEof(f"record {index}: stream ended inside headers")
            if line in (b"\r\n", b"\n"):
                break
            name, sep, value = line.rstrip(b"\r\n").decode("utf-8", "replace").partition(":")
            if not sep:
                raise RecordMalformed(f"record {index}: header without colon: {name!r}")
            headers[name.strip()] = value.strip()

        if "Content-Length" not in headers:
            raise RecordMalformed(f"record {index}: missing Content-Length header")
        try:
            length = int(headers["Content-Length"])
        except ValueError:
            raise RecordMalformed(
                f"record {index}: bad Content-Length {headers['Content-Length']!r}"
            ) from None

        payload = stream.read(length)
        if len(payload) < length:
            raise UnexpectedEof(
                f"record {index}: payload truncated at {len(payload)}/{length} bytes"
            )
        yield WarcRecord(headers=headers, payload=payload, version=version)
        index += 1


def write_warc(records, stream: BinaryIO, gzip_records: bool = False):
    """Write records in WARC layout; the inverse of read_warc on its output."""
    for record in records:
        headers = Headers(record.headers)
        headers["Content-Length"] = str(len(record.payload))
        block = io.BytesIO()
        block.write(record.version.encode() + b"\r\n")
        for name in headers:
            block.write(f"{name}: {headers[name]}\r\n".encode())
        block.write(b"\r\n")
        block.write(record.payload)
        block.write(b"\r\n\r\n")
        data = block.getvalue()
        stream.write(gzip.compress(data) if gzip_records else data)
