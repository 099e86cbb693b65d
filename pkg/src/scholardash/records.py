"""Publication record types shared by every layer of the package.

A :class:`PaperRecord` is the normalized unit everything else (store,
query, analytics, topics) operates on. :class:`RawRecord` is the
pre-normalization shape of one dump entry as found in an XML dump.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

PAPER_TYPES = (
    "article",
    "proceedings",
    "book",
    "incollection",
    "phdthesis",
    "mastersthesis",
    "other",
)

ACCESS_TYPES = ("open", "closed", "unknown")

YEAR_MIN = 1000
YEAR_MAX = 3000


class SchemaViolation(ValueError):
    """A record (or one line of an interchange file) breaks the schema."""

    def __init__(self, field_name: str, reason: str, line: int | None = None):
        self.field = field_name
        self.reason = reason
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{field_name}: {reason}")


@dataclass(frozen=True)
class RawRecord:
    """One dump entry before normalization.

    ``fields`` is a multimap: repeated child tags (e.g. several author
    elements) accumulate in document order.
    """

    source_key: str
    element_kind: str
    fields: dict[str, list[str]] = field(default_factory=dict)
    attributes: dict[str, str] = field(default_factory=dict)

    def first(self, tag: str) -> str | None:
        values = self.fields.get(tag)
        return values[0] if values else None


@dataclass(frozen=True)
class PaperRecord:
    """One publication's metadata with facet values and citation degrees."""

    id: str
    title: str
    year: int
    authors: tuple[str, ...] = ()
    abstract: str | None = None
    venue: str | None = None
    publisher: str | None = None
    paper_type: str = "other"
    fields_of_study: frozenset[str] = frozenset()
    access_type: str = "unknown"
    url: str | None = None
    in_citations: int = 0
    out_citations: int = 0


def derive_id(source_key: str) -> str:
    """Stable id for a dump-local key; identical across re-ingests."""
    return hashlib.sha256(source_key.encode("utf-8")).hexdigest()[:16]


def validate_record(record: PaperRecord) -> None:
    """Raise :class:`SchemaViolation` when a record breaks an invariant."""
    if not record.id:
        raise SchemaViolation("id", "must be non-empty")
    if not record.title:
        raise SchemaViolation("title", "must be non-empty")
    if not isinstance(record.year, int) or isinstance(record.year, bool):
        raise SchemaViolation("year", "must be an integer")
    if not YEAR_MIN <= record.year <= YEAR_MAX:
        raise SchemaViolation("year", f"out of range [{YEAR_MIN}, {YEAR_MAX}]")
    for name in record.authors:
        if not name:
            raise SchemaViolation("authors", "must not contain empty strings")
    if record.paper_type not in PAPER_TYPES:
        raise SchemaViolation("paper_type", f"unknown value {record.paper_type!r}")
    if record.access_type not in ACCESS_TYPES:
        raise SchemaViolation("access_type", f"unknown value {record.access_type!r}")
    for label in record.fields_of_study:
        if not label:
            raise SchemaViolation("fields_of_study", "entries must be non-empty")
    if record.in_citations < 0:
        raise SchemaViolation("in_citations", "must be >= 0")
    if record.out_citations < 0:
        raise SchemaViolation("out_citations", "must be >= 0")


def record_from_dict(data: dict, line: int | None = None) -> PaperRecord:
    """Build a validated record from a JSON-ish dict (snake_case keys).

    Unknown keys are ignored; absent optionals get their defaults.
    """

    def fail(field_name: str, reason: str):
        raise SchemaViolation(field_name, reason, line=line)

    if not isinstance(data, dict):
        fail("", "record must be a JSON object")

    def str_field(name: str, default=None):
        value = data.get(name)
        if value is None:
            return default
        if not isinstance(value, str):
            fail(name, "must be a string")
        return value

    def required_str(name: str) -> str:
        value = data.get(name)
        if value is None:
            fail(name, "missing")
        if not isinstance(value, str):
            fail(name, "must be a string")
        return value

    def int_field(name: str, default=None) -> int:
        value = data.get(name, default)
        if value is None:
            fail(name, "missing")
        if isinstance(value, bool) or not isinstance(value, int):
            fail(name, "must be an integer")
        return value

    def str_list(name: str) -> list[str]:
        value = data.get(name, [])
        if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
            fail(name, "must be a list of strings")
        return value

    record = PaperRecord(
        id=required_str("id"),
        title=required_str("title"),
        year=int_field("year"),
        authors=tuple(str_list("authors")),
        abstract=str_field("abstract"),
        venue=str_field("venue"),
        publisher=str_field("publisher"),
        paper_type=str_field("paper_type", "other"),
        fields_of_study=frozenset(dict.fromkeys(str_list("fields_of_study"))),
        access_type=str_field("access_type", "unknown"),
        url=str_field("url"),
        in_citations=int_field("in_citations", 0),
        out_citations=int_field("out_citations", 0),
    )
    try:
        validate_record(record)
    except SchemaViolation as exc:
        raise SchemaViolation(exc.field, exc.reason, line=line) from None
    return record


def record_to_dict(record: PaperRecord) -> dict:
    """Deterministic dict form; inverse of :func:`record_from_dict`."""
    return {
        "id": record.id,
        "title": record.title,
        "year": record.year,
        "authors": list(record.authors),
        "abstract": record.abstract,
        "venue": record.venue,
        "publisher": record.publisher,
        "paper_type": record.paper_type,
        "fields_of_study": sorted(record.fields_of_study),
        "access_type": record.access_type,
        "url": record.url,
        "in_citations": record.in_citations,
        "out_citations": record.out_citations,
    }
