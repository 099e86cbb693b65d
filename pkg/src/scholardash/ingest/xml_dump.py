"""Streaming parser for DBLP-flavored XML dumps.

The dump is framed into record fragments (the root element's children)
by a lexical scan, and each fragment is parsed on its own. That keeps
memory bounded by one record rather than the dump, and it isolates
errors: a structurally broken record, or one using an entity outside the
supported table, is skipped and reported while parsing continues.

Framing recognizes the declared record tags at the top level and cuts a
fragment at the record's close tag, or at the start of the next record
when the close tag never shows up (the broken-record case). Record tags
are assumed not to nest inside each other, which holds for DBLP-style
dumps.
"""
from __future__ import annotations

import codecs
import re
import xml.etree.ElementTree as ET
from typing import BinaryIO, Iterator

from scholardash.ingest import entities
from scholardash.ingest.errors import MalformedXml, UnknownEntity
from scholardash.records import RawRecord, SchemaViolation

DEFAULT_RECORD_TAGS = frozenset({
    "article",
    "inproceedings",
    "proceedings",
    "book",
    "incollection",
    "phdthesis",
    "mastersthesis",
    "www",
    "person",
    "data",
})

_ENTITY_RX = re.compile(r"&([A-Za-z][A-Za-z0-9._-]*);")
_CHUNK_SIZE = 64 * 1024
# Longest lookbehind that could hold a partial frame-start tag or comment
# opener straddling a chunk boundary.
_TAIL_KEEP = 64


def _start_rx(record_tags: frozenset[str]) -> re.Pattern[str]:
    alt = "|".join(sorted(record_tags))
    return re.compile(rf"<({alt})(?=[\s/>])|<!--")


def _tag_end(text: str, start: int) -> int | None:
    """Index of the start tag's closing '>', honoring quoted attributes."""
    quote = None
    for idx in range(start, len(text)):
        ch = text[idx]
        if quote is not None:
            if ch == quote:
                quote = None
        elif ch in ('"', "'"):
            quote = ch
        elif ch == ">":
            return idx
    return None


def _decode_entities(fragment: str, line: int) -> str:
    """Rewrite supported named entities as numeric references.

    Raises UnknownEntity on the first name outside the table.
    """

    def repl(match: re.Match[str]) -> str:
        replacement = entities.substitute(match.group(1))
        if replacement is None:
            raise UnknownEntity(match.group(1), line)
        return replacement

    return _ENTITY_RX.sub(repl, fragment)


def _next_record_start(buf: str, rx: re.Pattern[str], pos: int) -> re.Match[str] | None:
    """Next record start tag at or after pos, skipping over comments."""
    while True:
        match = rx.search(buf, pos)
        if match is None or match.group(0) != "<!--":
            return match
        end = buf.find("-->", match.end())
        if end < 0:
            return None
        pos = end + 3


def _to_raw_record(elem: ET.Element, line: int) -> RawRecord:
    key = elem.attrib.get("key", "")
    if not key:
        raise SchemaViolation("key", "record has no key attribute", line=line)
    fields: dict[str, list[str]] = {}
    for child in elem:
        text = "".join(child.itertext()).strip()
        fields.setdefault(child.tag, []).append(text)
    return RawRecord(
        source_key=key,
        element_kind=elem.tag,
        fields=fields,
        attributes=dict(elem.attrib),
    )


def parse_xml_dump(
    stream: BinaryIO | bytes,
    record_tags: frozenset[str] = DEFAULT_RECORD_TAGS,
    errors: list[Exception] | None = None,
) -> Iterator[RawRecord]:
    """Yield one RawRecord per record element, in document order.

    ``errors`` collects per-record failures (MalformedXml, UnknownEntity,
    missing-key SchemaViolation); pass a list to inspect them, otherwise
    they are dropped. Positions are 1-based line numbers of the record's
    start tag.
    """
    sink = errors if errors is not None else []
    start_rx = _start_rx(record_tags)
    decoder = codecs.getincrementaldecoder("utf-8")(errors="replace")

    buf = ""
    line = 1          # line number of buf[0]
    if isinstance(stream, bytes):
        buf = stream.decode("utf-8", errors="replace")
        stream = None
    exhausted = stream is None

    def refill() -> bool:
        nonlocal buf, exhausted
        if exhausted:
            return False
        chunk = stream.read(_CHUNK_SIZE)
        if not chunk:
            buf += decoder.decode(b"", final=True)
            exhausted = True
            return False
        buf += decoder.decode(chunk)
        return True

    def drop(n: int) -> None:
        nonlocal buf, line
        line += buf.count("\n", 0, n)
        buf = buf[n:]

    while True:
        match = start_rx.search(buf)
        if match is None:
            if exhausted:
                return
            # Nothing interesting buffered; keep only a tail that could be
            # the beginning of a tag split across chunks.
            if len(buf) > _TAIL_KEEP:
                drop(len(buf) - _TAIL_KEEP)
            refill()
            continue

        if match.group(0) == "<!--":
            end = buf.find("-->", match.end())
            if end < 0:
                if not refill():
                    return
                continue
            drop(end + 3)
            continue

        tag = match.group(1)
        frame_start = match.start()

        tag_close = _tag_end(buf, match.end())
        if tag_close is None:
            if refill():
                continue
            frame_end = len(buf)
        elif buf[tag_close - 1] == "/":
            frame_end = tag_close + 1
        else:
            close = re.compile(rf"</{tag}\s*>").search(buf, tag_close + 1)
            nxt = _next_record_start(buf, start_rx, tag_close + 1)
            if close is not None and (nxt is None or close.start() < nxt.start()):
                frame_end = close.end()
            elif nxt is not None:
                # Close tag missing before the next record: broken frame.
                frame_end = nxt.start()
            elif refill():
                continue
            else:
                frame_end = len(buf)

        frame = buf[frame_start:frame_end]
        frame_line = line + buf.count("\n", 0, frame_start)
        drop(frame_end)

        try:
            decoded = _decode_entities(frame, frame_line)
            elem = ET.fromstring(decoded)
        except UnknownEntity as exc:
            sink.append(exc)
            continue
        except ET.ParseError as exc:
            sink.append(MalformedXml(frame_line, str(exc)))
            continue
        try:
            yield _to_raw_record(elem, frame_line)
        except SchemaViolation as exc:
            sink.append(exc)
