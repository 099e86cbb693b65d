"""Dump ingestion: streaming XML and line-delimited JSON parsers."""
from scholardash.ingest.errors import (
    IngestError,
    MalformedXml,
    MissingTitle,
    UnknownEntity,
)
from scholardash.ingest.jsonl import parse_jsonl_dump, serialize_record, write_jsonl
from scholardash.ingest.normalize import normalize
from scholardash.ingest.xml_dump import parse_xml_dump

__all__ = [
    "IngestError",
    "MalformedXml",
    "MissingTitle",
    "UnknownEntity",
    "normalize",
    "parse_jsonl_dump",
    "parse_xml_dump",
    "serialize_record",
    "write_jsonl",
]
