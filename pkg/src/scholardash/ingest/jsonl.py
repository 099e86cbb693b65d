"""Normalized line-delimited JSON interchange format.

One UTF-8 JSON object per line with the PaperRecord field names; this is
the format corpora from any source get converted into before loading.
Serialization is deterministic so round-trips and snapshots compare
byte for byte.
"""
from __future__ import annotations

import json
from typing import IO, Iterable, Iterator

from scholardash.records import PaperRecord, SchemaViolation, record_from_dict, record_to_dict


def parse_jsonl_dump(
    stream: IO[bytes] | bytes,
    errors: list[Exception] | None = None,
) -> Iterator[PaperRecord]:
    """Yield validated records; bad lines are skipped and reported.

    ``errors`` collects one SchemaViolation per failing line, carrying
    its 1-based line number. Blank lines are ignored.
    """
    sink = errors if errors is not None else []
    if isinstance(stream, bytes):
        lines: Iterable[bytes] = stream.splitlines()
    else:
        lines = stream
    for lineno, raw_line in enumerate(lines, start=1):
        text = raw_line.decode("utf-8", errors="replace") if isinstance(raw_line, bytes) else raw_line
        if not text.strip():
            continue
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            sink.append(SchemaViolation("", f"not valid JSON: {exc.msg}", line=lineno))
            continue
        try:
            yield record_from_dict(data, line=lineno)
        except SchemaViolation as exc:
            sink.append(exc)


def serialize_record(record: PaperRecord) -> str:
    """One deterministic JSON line (no trailing newline)."""
    return json.dumps(record_to_dict(record), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def write_jsonl(records: Iterable[PaperRecord], stream: IO[bytes]) -> int:
    """Write records one per line; returns the number written."""
    count = 0
    for record in records:
        stream.write(serialize_record(record).encode("utf-8"))
        stream.write(b"\n")
        count += 1
    return count
