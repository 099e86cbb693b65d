"""Ingestion error taxonomy.

Parsers collect these into a caller-supplied list instead of aborting,
so a single bad entry never kills a multi-gigabyte dump run.
"""
from __future__ import annotations


class IngestError(Exception):
    pass


class MalformedXml(IngestError):
    """A record fragment is structurally broken (bad nesting, stray markup)."""

    def __init__(self, position: int, detail: str = ""):
        self.position = position
        suffix = f": {detail}" if detail else ""
        super().__init__(f"malformed XML near line {position}{suffix}")


class UnknownEntity(IngestError):
    """A named character entity outside the supported table."""

    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unknown entity &{name}; near line {position}")


class MissingTitle(IngestError):
    def __init__(self, source_key: str):
        self.source_key = source_key
        super().__init__(f"record {source_key!r} has no title")
