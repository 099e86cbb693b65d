from __future__ import annotations

import random

import pytest

from scholardash.query import (
    FilterQuery,
    InvalidRange,
    InvalidRegex,
    Suggestion,
    TextMatcher,
    UnknownFacet,
    autocomplete,
    compile as compile_filter,
    select,
)
from scholardash.records import PaperRecord
from tests.conftest import brute_force_select, build_corpus, random_filter, random_records


def make(id, **kw):
    defaults = dict(title="T", year=2020)
    defaults.update(kw)
    return PaperRecord(id=id, **defaults)


def test_empty_filter_matches_everything():
    corpus = build_corpus(random_records(seed=1, n=100))
    assert select(corpus, FilterQuery()) == corpus.ids()
    predicate = compile_filter(FilterQuery())
    assert all(predicate(r) for r in corpus)


def test_venue_and_year_conjunction():
    corpus = build_corpus(
        [
            make("a", venue="ACL", year=2019),
            make("b", venue="ACL", year=2019),
            make("c", venue="ACL", year=2018),
            make("d", venue="EMNLP", year=2019),
            make("e", venue=None, year=2019),
        ]
    )
    fq = FilterQuery(venues=(TextMatcher("ACL"),), year_range=(2019, 2019))
    assert select(corpus, fq) == {"a", "b"}


def test_or_within_authors_facet():
    corpus = build_corpus(
        [
            make("only-a", authors=("A",)),
            make("only-b", authors=("B",)),
            make("only-c", authors=("C",)),
        ]
    )
    fq = FilterQuery(authors=(TextMatcher("A"), TextMatcher("B")))
    assert select(corpus, fq) == {"only-a", "only-b"}


def test_fields_of_study_intersection_semantics():
    corpus = build_corpus(
        [
            make("x", fields_of_study=frozenset({"CS", "Math"})),
            make("y", fields_of_study=frozenset({"Biology"})),
            make("z", fields_of_study=frozenset()),
        ]
    )
    fq = FilterQuery(fields_of_study=("Math", "Physics"))
    assert select(corpus, fq) == {"x"}


def test_exact_matching_is_case_sensitive():
    corpus = build_corpus([make("a", venue="ACL"), make("b", venue="acl")])
    assert select(corpus, FilterQuery(venues=(TextMatcher("ACL"),))) == {"a"}


def test_regex_is_unanchored_search():
    corpus = build_corpus([make("a", venue="NAACL"), make("b", venue="EMNLP")])
    fq = FilterQuery(venues=(TextMatcher("ACL", "regex"),))
    assert select(corpus, fq) == {"a"}
    fq_anchored = FilterQuery(venues=(TextMatcher("^ACL$", "regex"),))
    assert select(corpus, fq_anchored) == set()


def test_degenerate_citation_range():
    corpus = build_corpus(random_records(seed=2, n=200))
    expected = {r.id for r in corpus if r.in_citations == 10}
    assert select(corpus, FilterQuery(citation_range=(10, 10))) == expected


def test_invalid_regex_raises():
    corpus = build_corpus(random_records(seed=3, n=5))
    with pytest.raises(InvalidRegex):
        select(corpus, FilterQuery(venues=(TextMatcher("(", "regex"),)))


def test_invalid_range_raises():
    with pytest.raises(InvalidRange):
        compile_filter(FilterQuery(year_range=(2020, 2019)))


def test_index_path_equals_full_scan_on_random_filters():
    corpus = build_corpus(random_records(seed=4, n=600))
    rng = random.Random(42)
    for _ in range(150):
        fq = random_filter(rng)
        assert select(corpus, fq) == brute_force_select(corpus, fq)


def test_adding_value_to_facet_never_shrinks_result():
    corpus = build_corpus(random_records(seed=5, n=400))
    base = FilterQuery(venues=(TextMatcher("ACL"),))
    wider = FilterQuery(venues=(TextMatcher("ACL"), TextMatcher("EMNLP")))
    assert select(corpus, base) <= select(corpus, wider)


def test_adding_new_facet_never_grows_result():
    corpus = build_corpus(random_records(seed=6, n=400))
    base = FilterQuery(venues=(TextMatcher("ACL"),))
    narrower = FilterQuery(venues=(TextMatcher("ACL"),), year_range=(2000, 2010))
    assert select(corpus, narrower) <= select(corpus, base)


# -- autocomplete -----------------------------------------------------


def test_paper_types_empty_input_lists_six_preset_values():
    suggestions = autocomplete(build_corpus([]), "paper_types", "", limit=10)
    values = {s.value for s in suggestions}
    assert values == {"article", "proceedings", "book", "incollection", "phdthesis", "mastersthesis"}


def test_access_types_presets():
    suggestions = autocomplete(build_corpus([]), "access_types", "", limit=10)
    assert {s.value for s in suggestions} == {"open", "closed", "unknown"}


def test_paper_types_never_suggests_the_other_bucket():
    corpus = build_corpus([make("a", paper_type="other"), make("b", paper_type="article")])
    suggestions = autocomplete(corpus, "paper_types", "", limit=10)
    values = {s.value for s in suggestions}
    assert "other" not in values
    assert len(values) == 6
    # The catch-all stays filterable by explicit value.
    assert select(corpus, FilterQuery(paper_types=("other",))) == {"a"}


def test_substring_matching_ranked_by_count():
    corpus = build_corpus(
        [
            make("1", venue="ACL"),
            make("2", venue="ACL"),
            make("3", venue="NAACL"),
            make("4", venue="EMNLP"),
        ]
    )
    suggestions = autocomplete(corpus, "venues", "ACL", limit=10)
    assert suggestions == [Suggestion("ACL", 2), Suggestion("NAACL", 1)]


def test_substring_matching_is_case_insensitive():
    corpus = build_corpus([make("1", venue="NeuroImage")])
    assert autocomplete(corpus, "venues", "neuro", limit=5)[0].value == "NeuroImage"


def test_count_ties_break_lexicographically():
    corpus = build_corpus([make("1", venue="B-Conf"), make("2", venue="A-Conf")])
    values = [s.value for s in autocomplete(corpus, "venues", "Conf", limit=5)]
    assert values == ["A-Conf", "B-Conf"]


def test_match_all_regex_respects_limit():
    corpus = build_corpus(random_records(seed=7, n=100))
    suggestions = autocomplete(corpus, "venues", ".*", limit=3, regex=True)
    assert len(suggestions) == 3
    counts = [s.count for s in suggestions]
    assert counts == sorted(counts, reverse=True)


def test_unknown_facet_raises():
    with pytest.raises(UnknownFacet):
        autocomplete(build_corpus([]), "titles", "x", limit=5)


def test_limit_must_be_positive():
    with pytest.raises(ValueError):
        autocomplete(build_corpus([]), "venues", "x", limit=0)
