"""Shared corpus generators for the test suite."""
from __future__ import annotations

import random

import pytest

from scholardash.query import FilterQuery, TextMatcher
from scholardash.records import PaperRecord
from scholardash.store import Corpus

VENUE_POOL = ["ACL", "NAACL", "EMNLP", "CVPR", "SIGMOD", "STOC", "Commun. ACM", "NeuroImage"]
AUTHOR_POOL = [f"Author {chr(ord('A') + i)}" for i in range(20)] + ["Anil K. Jain 0001", "J. Müller"]
PUBLISHER_POOL = ["ACM", "IEEE", "Springer", "Elsevier"]
FIELD_POOL = ["Computer Science", "Mathematics", "Medicine", "Engineering", "Psychology", "Physics"]
PAPER_TYPE_POOL = ["article", "proceedings", "book", "incollection", "phdthesis", "mastersthesis", "other"]
ACCESS_POOL = ["open", "closed", "unknown"]
TITLE_WORDS = "deep neural graph kernel sparse robust online causal quantum secure".split()


def random_record(rng: random.Random, i: int) -> PaperRecord:
    n_authors = rng.randint(0, 4)
    return PaperRecord(
        id=f"r{i:06d}",
        title=" ".join(rng.sample(TITLE_WORDS, k=rng.randint(2, 4))) + f" {i}",
        year=rng.randint(1990, 2022),
        authors=tuple(rng.sample(AUTHOR_POOL, k=n_authors)),
        abstract=None if rng.random() < 0.5 else "on " + " ".join(rng.sample(TITLE_WORDS, k=5)),
        venue=None if rng.random() < 0.15 else rng.choice(VENUE_POOL),
        publisher=None if rng.random() < 0.6 else rng.choice(PUBLISHER_POOL),
        paper_type=rng.choice(PAPER_TYPE_POOL),
        fields_of_study=frozenset(rng.sample(FIELD_POOL, k=rng.randint(0, 3))),
        access_type=rng.choice(ACCESS_POOL),
        url=None if rng.random() < 0.3 else f"https://example.org/{i}",
        in_citations=rng.choice([0, 0, 1, 2, 3, 5, 8, 13, 40, 120, 500]),
        out_citations=rng.randint(0, 80),
    )


def random_records(seed: int, n: int) -> list[PaperRecord]:
    rng = random.Random(seed)
    return [random_record(rng, i) for i in range(n)]


def build_corpus(records) -> Corpus:
    corpus = Corpus()
    for record in records:
        corpus.upsert(record)
    return corpus


def random_filter(rng: random.Random) -> FilterQuery:
    """A random eight-facet filter; regex matchers mixed in sparingly."""

    def matchers(pool):
        out = []
        for _ in range(rng.randint(1, 2)):
            if rng.random() < 0.25:
                value = rng.choice(["AC", "C.*M", "^E", "L$", "a", "S[IP]"])
                out.append(TextMatcher(value, "regex"))
            else:
                out.append(TextMatcher(rng.choice(pool + ["No Such Value"])))
        return tuple(out)

    kwargs = {}
    if rng.random() < 0.35:
        kwargs["venues"] = matchers(VENUE_POOL)
    if rng.random() < 0.35:
        kwargs["authors"] = matchers(AUTHOR_POOL)
    if rng.random() < 0.2:
        kwargs["publishers"] = matchers(PUBLISHER_POOL)
    if rng.random() < 0.3:
        kwargs["paper_types"] = tuple(rng.sample(PAPER_TYPE_POOL, k=rng.randint(1, 2)))
    if rng.random() < 0.3:
        kwargs["fields_of_study"] = tuple(rng.sample(FIELD_POOL, k=rng.randint(1, 2)))
    if rng.random() < 0.2:
        kwargs["access_types"] = tuple(rng.sample(ACCESS_POOL, k=rng.randint(1, 2)))
    if rng.random() < 0.4:
        lo = rng.randint(1990, 2022)
        kwargs["year_range"] = (lo, rng.randint(lo, 2022))
    if rng.random() < 0.35:
        lo = rng.choice([0, 1, 3, 10, 100])
        kwargs["citation_range"] = (lo, lo + rng.choice([0, 2, 50, 1000]))
    return FilterQuery(**kwargs)


def filter_to_params(fq: FilterQuery) -> list[tuple[str, str]]:
    """Encode a FilterQuery as the API's query-string pairs."""
    params: list[tuple[str, str]] = []
    for key, field in (("venue", "venues"), ("author", "authors"), ("publisher", "publishers")):
        for m in getattr(fq, field):
            params.append((key, ("re:" + m.pattern) if m.mode == "regex" else m.pattern))
    for key, field in (
        ("paper_type", "paper_types"),
        ("field_of_study", "fields_of_study"),
        ("access_type", "access_types"),
    ):
        for value in getattr(fq, field):
            params.append((key, value))
    if fq.year_range:
        params += [("year_min", str(fq.year_range[0])), ("year_max", str(fq.year_range[1]))]
    if fq.citation_range:
        params += [("cit_min", str(fq.citation_range[0])), ("cit_max", str(fq.citation_range[1]))]
    return params


def brute_force_select(corpus: Corpus, fq: FilterQuery) -> set[str]:
    """Independent full-scan oracle; reimplements the matching rules."""

    def text_match(matchers, values) -> bool:
        import re as _re

        for value in values:
            for m in matchers:
                if m.mode == "exact":
                    if value == m.pattern:
                        return True
                elif _re.search(m.pattern, value):
                    return True
        return False

    matched = set()
    for record in corpus:
        ok = True
        if fq.venues:
            ok = ok and record.venue is not None and text_match(fq.venues, [record.venue])
        if fq.authors:
            ok = ok and text_match(fq.authors, list(record.authors))
        if fq.publishers:
            ok = ok and record.publisher is not None and text_match(fq.publishers, [record.publisher])
        if fq.paper_types:
            ok = ok and record.paper_type in fq.paper_types
        if fq.access_types:
            ok = ok and record.access_type in fq.access_types
        if fq.fields_of_study:
            ok = ok and any(f in record.fields_of_study for f in fq.fields_of_study)
        if fq.year_range:
            ok = ok and fq.year_range[0] <= record.year <= fq.year_range[1]
        if fq.citation_range:
            ok = ok and fq.citation_range[0] <= record.in_citations <= fq.citation_range[1]
        if ok:
            matched.add(record.id)
    return matched


@pytest.fixture(scope="session")
def medium_corpus() -> Corpus:
    return build_corpus(random_records(seed=11, n=400))
