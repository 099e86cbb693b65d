"""Faceted filter engine.

Filter semantics: values inside one facet combine with OR, different
facets combine with AND, numeric ranges are inclusive. Textual matchers
are either exact (case-sensitive, matching the indexed value) or regex.

Regex dialect: Python ``re`` with unanchored ``search`` semantics, so
``ACL`` matches "NAACL" and anchors must be written explicitly. The same
dialect drives regex auto-complete, keeping both behaviors coherent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, fields
from typing import Callable

from scholardash.records import ACCESS_TYPES, PAPER_TYPES, PaperRecord
from scholardash.store import Corpus


class QueryError(Exception):
    pass


class InvalidRegex(QueryError):
    def __init__(self, pattern: str, reason: str):
        self.pattern = pattern
        self.reason = reason
        super().__init__(f"invalid regex {pattern!r}: {reason}")


class InvalidRange(QueryError):
    def __init__(self, facet: str):
        self.facet = facet
        super().__init__(f"{facet}: range min must be <= max")


class UnknownFacet(QueryError):
    def __init__(self, facet: str):
        self.facet = facet
        super().__init__(f"unknown facet {facet!r}")


@dataclass(frozen=True)
class TextMatcher:
    pattern: str
    mode: str = "exact"  # "exact" | "regex"


@dataclass(frozen=True)
class FilterQuery:
    """The eight-facet selection predicate. Empty lists mean no constraint."""

    venues: tuple[TextMatcher, ...] = ()
    authors: tuple[TextMatcher, ...] = ()
    paper_types: tuple[str, ...] = ()
    fields_of_study: tuple[str, ...] = ()
    publishers: tuple[TextMatcher, ...] = ()
    access_types: tuple[str, ...] = ()
    year_range: tuple[int, int] | None = None
    citation_range: tuple[int, int] | None = None

    def is_empty(self) -> bool:
        return all(getattr(self, f.name) in ((), None) for f in fields(self))


# FilterQuery field -> store facet holding its values.
_MATCHER_FACETS = {"venues": "venue", "authors": "author", "publishers": "publisher"}
_VALUE_FACETS = {
    "paper_types": "paper_type",
    "fields_of_study": "field_of_study",
    "access_types": "access_type",
}

# Auto-complete facets (wire names) and the enum facets whose pre-set
# values always appear in suggestions even at zero count.
TEXTUAL_FACETS = ("venues", "authors", "paper_types", "fields_of_study", "publishers", "access_types")
_PRESET_VALUES = {
    "paper_type": [t for t in PAPER_TYPES if t != "other"],
    "access_type": list(ACCESS_TYPES),
}


def _compile_regex(pattern: str) -> re.Pattern[str]:
    try:
        return re.compile(pattern)
    except re.error as exc:
        raise InvalidRegex(pattern, str(exc)) from None


def _matcher_fn(matchers: tuple[TextMatcher, ...]) -> Callable[[tuple[str, ...]], bool]:
    """True when any record value matches any matcher (OR within facet)."""
    exact = {m.pattern for m in matchers if m.mode == "exact"}
    regexes = [_compile_regex(m.pattern) for m in matchers if m.mode == "regex"]

    def matches(values: tuple[str, ...]) -> bool:
        for value in values:
            if value in exact:
                return True
            for rx in regexes:
                if rx.search(value):
                    return True
        return False

    return matches


def compile(filter_query: FilterQuery) -> Callable[[PaperRecord], bool]:
    """Compile the filter into a record predicate.

    Raises InvalidRegex / InvalidRange eagerly so select() and the API
    can reject bad filters before touching the corpus.
    """
    checks: list[Callable[[PaperRecord], bool]] = []

    if filter_query.venues:
        match = _matcher_fn(filter_query.venues)
        checks.append(lambda r, m=match: r.venue is not None and m((r.venue,)))
    if filter_query.authors:
        match = _matcher_fn(filter_query.authors)
        checks.append(lambda r, m=match: m(r.authors))
    if filter_query.publishers:
        match = _matcher_fn(filter_query.publishers)
        checks.append(lambda r, m=match: r.publisher is not None and m((r.publisher,)))
    if filter_query.paper_types:
        accepted = frozenset(filter_query.paper_types)
        checks.append(lambda r: r.paper_type in accepted)
    if filter_query.access_types:
        accepted_access = frozenset(filter_query.access_types)
        checks.append(lambda r: r.access_type in accepted_access)
    if filter_query.fields_of_study:
        wanted = frozenset(filter_query.fields_of_study)
        checks.append(lambda r: bool(wanted & r.fields_of_study))

    for name, getter in (("year_range", lambda r: r.year), ("citation_range", lambda r: r.in_citations)):
        bounds = getattr(filter_query, name)
        if bounds is not None:
            lo, hi = bounds
            if lo > hi:
                raise InvalidRange(name)
            checks.append(lambda r, lo=lo, hi=hi, get=getter: lo <= get(r) <= hi)

    def predicate(record: PaperRecord) -> bool:
        return all(check(record) for check in checks)

    return predicate


def _facet_candidates(corpus: Corpus, facet: str, matchers: tuple[TextMatcher, ...]) -> set[str]:
    """Union of postings for one facet's matcher list (index path)."""
    ids: set[str] = set()
    for matcher in matchers:
        if matcher.mode == "exact":
            ids |= corpus.posting(facet, matcher.pattern)
        else:
            rx = _compile_regex(matcher.pattern)
            for value in corpus.facet_counts(facet):
                if rx.search(value):
                    ids |= corpus.posting(facet, value)
    return ids


def select(corpus: Corpus, filter_query: FilterQuery) -> set[str]:
    """Ids of records matching the filter.

    Exact facet values resolve through posting lists; regex matchers scan
    the facet's distinct values (never the records). Result equals a full
    scan with the compiled predicate.
    """
    compile(filter_query)  # surface errors even on the index path

    candidate_sets: list[set[str]] = []
    for field_name, facet in _MATCHER_FACETS.items():
        matchers = getattr(filter_query, field_name)
        if matchers:
            candidate_sets.append(_facet_candidates(corpus, facet, matchers))
    for field_name, facet in _VALUE_FACETS.items():
        values = getattr(filter_query, field_name)
        if values:
            ids: set[str] = set()
            for value in values:
                ids |= corpus.posting(facet, value)
            candidate_sets.append(ids)
    if filter_query.year_range is not None:
        candidate_sets.append(corpus.ids_in_year_range(*filter_query.year_range))
    if filter_query.citation_range is not None:
        candidate_sets.append(corpus.ids_in_citation_range(*filter_query.citation_range))

    if not candidate_sets:
        return corpus.ids()
    result = set(min(candidate_sets, key=len))
    for ids in candidate_sets:
        result &= ids
    return result


@dataclass(frozen=True)
class Suggestion:
    value: str
    count: int


def autocomplete(
    corpus: Corpus,
    facet: str,
    text: str,
    limit: int,
    regex: bool = False,
) -> list[Suggestion]:
    """Ranked facet-value suggestions for a textual facet.

    Substring matching is case-insensitive; regex mode uses the filter
    dialect as written. Ranking: record count descending, then value.
    The enum facets suggest exactly their pre-set values (with corpus
    counts, possibly 0), so an empty query on paper_types lists the six
    publication classes even on an empty corpus and never the catch-all
    "other" bucket.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if facet in _MATCHER_FACETS:
        store_facet = _MATCHER_FACETS[facet]
    elif facet in _VALUE_FACETS:
        store_facet = _VALUE_FACETS[facet]
    else:
        raise UnknownFacet(facet)

    counts = corpus.facet_counts(store_facet)
    presets = _PRESET_VALUES.get(store_facet)
    if presets is not None:
        counts = {value: counts.get(value, 0) for value in presets}

    if regex:
        rx = _compile_regex(text)
        matched = [v for v in counts if rx.search(v)]
    else:
        needle = text.lower()
        matched = [v for v in counts if needle in v.lower()]

    matched.sort(key=lambda v: (-counts[v], v))
    return [Suggestion(v, counts[v]) for v in matched[:limit]]
