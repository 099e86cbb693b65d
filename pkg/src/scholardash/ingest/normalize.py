"""RawRecord -> PaperRecord normalization."""
from __future__ import annotations

from scholardash.ingest.errors import MissingTitle
from scholardash.records import ACCESS_TYPES, PaperRecord, RawRecord, SchemaViolation, derive_id, validate_record

# Dump element kinds onto paper types. Conference papers surface as
# articles; "proceedings" is the volume itself. Everything unmapped
# (www, person, data, ...) falls through to "other".
KIND_TO_TYPE = {
    "article": "article",
    "inproceedings": "article",
    "proceedings": "proceedings",
    "book": "book",
    "incollection": "incollection",
    "phdthesis": "phdthesis",
    "mastersthesis": "mastersthesis",
}


def normalize(raw: RawRecord) -> PaperRecord:
    """Map one dump entry onto the normalized record shape.

    Venue comes from journal or booktitle, whichever is present; citation
    counts default to 0 because the dump format does not carry them; an
    unrecognized access attribute degrades to "unknown" rather than
    rejecting the record.

    Raises MissingTitle or SchemaViolation (bad year) for entries that
    cannot be normalized.
    """
    title = (raw.first("title") or "").strip()
    if not title:
        raise MissingTitle(raw.source_key)

    year_text = raw.first("year")
    if year_text is None:
        raise SchemaViolation("year", f"record {raw.source_key!r} has no year")
    try:
        year = int(year_text.strip())
    except ValueError:
        raise SchemaViolation("year", f"not an integer: {year_text!r}") from None

    authors = tuple(a.strip() for a in raw.fields.get("author", []) if a.strip())

    access = raw.attributes.get("access", "unknown")
    if access not in ACCESS_TYPES:
        access = "unknown"

    record = PaperRecord(
        id=derive_id(raw.source_key),
        title=title,
        year=year,
        authors=authors,
        venue=raw.first("journal") or raw.first("booktitle"),
        publisher=raw.first("publisher"),
        paper_type=KIND_TO_TYPE.get(raw.element_kind, "other"),
        access_type=access,
        url=raw.first("ee"),
    )
    validate_record(record)
    return record
