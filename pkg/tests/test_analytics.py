from __future__ import annotations

import csv
import io
import random
from collections import Counter, defaultdict

import numpy as np
import pytest

from scholardash import analytics
from scholardash.analytics import (
    BadPage,
    BadSortKey,
    DistributionSummary,
    EmptySelection,
    InvalidMetric,
    UnknownDimension,
    YearHistogram,
    average_citations,
    citations_over_time,
    details_grid,
    distribution,
    export_csv,
    per_year,
    top_k,
)
from scholardash.query import FilterQuery, TextMatcher, select
from scholardash.records import PaperRecord
from tests.conftest import build_corpus, random_filter, random_records


def make(id, **kw):
    defaults = dict(title=f"Paper {id}", year=2020)
    defaults.update(kw)
    return PaperRecord(id=id, **defaults)


# -- independent oracles ------------------------------------------------


def oracle_quartiles(samples) -> DistributionSummary:
    data = np.asarray(sorted(samples), dtype=float)
    return DistributionSummary(
        min=float(data.min()),
        q25=float(np.percentile(data, 25)),
        median=float(np.percentile(data, 50)),
        q75=float(np.percentile(data, 75)),
        max=float(data.max()),
    )


def oracle_entities(record: PaperRecord, dim: str) -> list[str]:
    if dim == "authors":
        return list(dict.fromkeys(record.authors))
    if dim == "venues":
        return [record.venue] if record.venue else []
    if dim == "paper_types":
        return [record.paper_type]
    if dim == "fields_of_study":
        return sorted(record.fields_of_study)
    if dim == "publishers":
        return [record.publisher] if record.publisher else []
    raise AssertionError(dim)


def oracle_per_year(records, dim):
    if dim == "papers":
        return sorted(Counter(r.year for r in records).items())
    seen = defaultdict(set)
    for r in records:
        for label in oracle_entities(r, dim):
            seen[r.year].add(label)
    return sorted((year, len(labels)) for year, labels in seen.items())


# -- per_year -----------------------------------------------------------


def test_per_year_empty_selection():
    corpus = build_corpus([])
    assert per_year(corpus, "papers", set()).buckets == ()


def test_per_year_distinct_venues_fixture():
    corpus = build_corpus(
        [
            make("a", year=2020, venue="V1"),
            make("b", year=2020, venue="V1"),
            make("c", year=2020, venue="V2"),
        ]
    )
    assert per_year(corpus, "venues", corpus.ids()).buckets == ((2020, 2),)


@pytest.mark.parametrize("dim", analytics.DIMENSIONS)
def test_per_year_matches_oracle(dim):
    records = random_records(seed=21, n=300)
    corpus = build_corpus(records)
    rng = random.Random(1)
    ids = {r.id for r in records if rng.random() < 0.6}
    selected = [r for r in records if r.id in ids]
    assert list(per_year(corpus, dim, ids).buckets) == oracle_per_year(selected, dim)


def test_per_year_sum_law():
    records = random_records(seed=22, n=250)
    corpus = build_corpus(records)
    hist = per_year(corpus, "papers", corpus.ids())
    assert sum(count for _, count in hist.buckets) == len(records)


def test_unknown_dimension_rejected():
    with pytest.raises(UnknownDimension):
        per_year(build_corpus([]), "citations", set())


# -- distribution ---------------------------------------------------------


def test_distribution_symmetric_five_samples():
    corpus = build_corpus([make(str(i), in_citations=i) for i in (1, 2, 3, 4, 5)])
    dist = distribution(corpus, "papers", corpus.ids())
    assert (dist.min, dist.q25, dist.median, dist.q75, dist.max) == (1, 2, 3, 4, 5)


def test_distribution_single_paper_degenerate():
    corpus = build_corpus([make("a", in_citations=7)])
    dist = distribution(corpus, "papers", corpus.ids())
    assert dist == DistributionSummary(7, 7, 7, 7, 7)


def test_distribution_empty_selection_raises():
    with pytest.raises(EmptySelection):
        distribution(build_corpus([]), "papers", set())


def test_distribution_papers_requires_citations_metric():
    corpus = build_corpus([make("a")])
    with pytest.raises(InvalidMetric):
        distribution(corpus, "papers", corpus.ids(), metric="papers")


@pytest.mark.parametrize("metric", ["citations", "papers"])
def test_distribution_matches_numpy_oracle(metric):
    records = random_records(seed=23, n=400)
    corpus = build_corpus(records)
    rng = random.Random(2)
    ids = {r.id for r in records if rng.random() < 0.7}
    selected = [r for r in records if r.id in ids]
    for dim in ("authors", "venues", "fields_of_study"):
        weights = defaultdict(int)
        for r in selected:
            for label in oracle_entities(r, dim):
                weights[label] += r.in_citations if metric == "citations" else 1
        if not weights:
            continue
        expected = oracle_quartiles(list(weights.values()))
        got = distribution(corpus, dim, ids, metric=metric)
        for field in ("min", "q25", "median", "q75", "max"):
            assert getattr(got, field) == pytest.approx(getattr(expected, field), abs=1e-9)
        assert got.min <= got.q25 <= got.median <= got.q75 <= got.max


def test_distribution_ordering_invariant_random():
    records = random_records(seed=24, n=300)
    corpus = build_corpus(records)
    rng = random.Random(3)
    for _ in range(30):
        ids = {r.id for r in records if rng.random() < 0.5}
        if not ids:
            continue
        d = distribution(corpus, "papers", ids)
        assert d.min <= d.q25 <= d.median <= d.q75 <= d.max


# -- top_k ---------------------------------------------------------------


def test_top_k_tie_break_fixture():
    corpus = build_corpus(
        [make(f"v1-{i}", venue="V1") for i in range(5)]
        + [make(f"v2-{i}", venue="V2") for i in range(3)]
        + [make(f"v3-{i}", venue="V3") for i in range(3)]
    )
    result = top_k(corpus, "venues", corpus.ids(), metric="papers", k=2)
    assert result.entries == (("V1", 5), ("V2", 3))


def test_top_k_k_larger_than_entities():
    corpus = build_corpus([make("a", venue="X"), make("b", venue="Y", in_citations=4)])
    result = top_k(corpus, "venues", corpus.ids(), metric="citations", k=99)
    assert result.entries == (("Y", 4), ("X", 0))


def test_top_k_papers_uses_titles_and_citations():
    corpus = build_corpus(
        [
            make("a", title="Alpha", in_citations=10),
            make("b", title="Beta", in_citations=30),
        ]
    )
    result = top_k(corpus, "papers", corpus.ids(), metric="citations", k=2)
    assert result.entries == (("Beta", 30), ("Alpha", 10))
    with pytest.raises(InvalidMetric):
        top_k(corpus, "papers", corpus.ids(), metric="papers", k=2)


def test_top_k_dominant_field_shapes_treemap():
    # One field holding ~2x the citations of all others combined stays on top.
    records = []
    for i in range(40):
        records.append(make(f"cs{i}", fields_of_study=frozenset({"Computer Science"}), in_citations=100))
    for i, field in enumerate(["Mathematics", "Medicine", "Engineering", "Psychology"] * 5):
        records.append(make(f"o{i}", fields_of_study=frozenset({field}), in_citations=100))
    corpus = build_corpus(records)
    result = top_k(corpus, "fields_of_study", corpus.ids(), metric="citations", k=5)
    assert result.entries[0][0] == "Computer Science"
    assert result.entries[0][1] >= 2 * sum(w for _, w in result.entries[1:]) * 0.5


def test_top_k_consistency_total_weight():
    records = random_records(seed=25, n=200)
    corpus = build_corpus(records)
    result = top_k(corpus, "authors", corpus.ids(), metric="papers", k=10**9)
    total = sum(w for _, w in result.entries)
    assert total == sum(len(set(r.authors)) for r in records)


def test_top_k_requires_positive_k():
    with pytest.raises(ValueError):
        top_k(build_corpus([]), "venues", set(), metric="papers", k=0)


# -- details_grid ---------------------------------------------------------


def test_average_citations_reproduces_published_averages():
    assert average_citations(74_467, 1_649) == 45.16
    assert average_citations(96_935_856, 4_189_349) == 23.14


def test_authors_grid_row_statistics():
    corpus = build_corpus(
        [
            make("a", authors=("Ada",), year=1999, venue="V1", in_citations=10),
            make("b", authors=("Ada",), year=2001, venue="V2", in_citations=5),
            make("c", authors=("Ada",), year=2000, venue="V1", in_citations=0),
        ]
    )
    page = details_grid(corpus, "authors", corpus.ids())
    (row,) = page.rows
    assert row == {
        "name": "Ada",
        "first_year": 1999,
        "last_year": 2001,
        "n_papers": 3,
        "n_citations": 15,
        "avg_citations": 5.0,
        "n_venues": 2,
    }


def test_papers_grid_columns_and_sort():
    corpus = build_corpus(
        [
            make("a", title="B-paper", in_citations=5, venue="V", url="u"),
            make("b", title="A-paper", in_citations=9),
        ]
    )
    page = details_grid(corpus, "papers", corpus.ids(), sort_key="citations", sort_dir="desc")
    assert page.columns == ("title", "year", "authors", "venue", "citations", "link")
    assert [r["title"] for r in page.rows] == ["A-paper", "B-paper"]
    assert page.rows[1]["link"] == "u"


def test_grid_avg_consistency_random():
    records = random_records(seed=26, n=250)
    corpus = build_corpus(records)
    page = details_grid(corpus, "venues", corpus.ids(), page_size=500)
    for row in page.rows:
        assert abs(row["avg_citations"] * row["n_papers"] - row["n_citations"]) <= 0.005 * row["n_papers"] + 1e-9


def test_grid_total_invariant_under_pagination():
    records = random_records(seed=27, n=150)
    corpus = build_corpus(records)
    first = details_grid(corpus, "authors", corpus.ids(), page=1, page_size=7)
    later = details_grid(corpus, "authors", corpus.ids(), page=3, page_size=7)
    assert first.total == later.total
    assert len(first.rows) <= 7
    seen = {r["name"] for r in first.rows} & {r["name"] for r in later.rows}
    assert not seen


def test_grid_sort_ties_break_by_label():
    corpus = build_corpus(
        [
            make("a", venue="B-Conf", in_citations=5),
            make("b", venue="A-Conf", in_citations=5),
        ]
    )
    page = details_grid(corpus, "venues", corpus.ids(), sort_key="n_citations", sort_dir="desc")
    assert [r["label"] for r in page.rows] == ["A-Conf", "B-Conf"]


def test_grid_bad_page_and_sort_key():
    corpus = build_corpus([make("a")])
    with pytest.raises(BadPage):
        details_grid(corpus, "papers", corpus.ids(), page=0)
    with pytest.raises(BadPage):
        details_grid(corpus, "papers", corpus.ids(), page_size=501)
    with pytest.raises(BadSortKey):
        details_grid(corpus, "papers", corpus.ids(), sort_key="authors")
    with pytest.raises(BadSortKey):
        details_grid(corpus, "papers", corpus.ids(), sort_key="n_papers")
    with pytest.raises(BadSortKey):
        details_grid(corpus, "papers", corpus.ids(), sort_dir="sideways")


# -- citations_over_time ----------------------------------------------------


def test_citations_single_paper_fixture():
    corpus = build_corpus([make("a", year=2020, in_citations=3, out_citations=10)])
    series = citations_over_time(corpus, corpus.ids())
    assert series.incoming.buckets == ((2020, 3),)
    assert series.outgoing.buckets == ((2020, 10),)
    assert series.incoming_dist == DistributionSummary(3, 3, 3, 3, 3)


def test_citations_empty_selection():
    series = citations_over_time(build_corpus([]), set())
    assert series.incoming.buckets == ()
    assert series.outgoing.buckets == ()
    assert series.incoming_dist is None and series.outgoing_dist is None


def test_citations_matches_brute_force():
    records = random_records(seed=28, n=300)
    corpus = build_corpus(records)
    rng = random.Random(4)
    ids = {r.id for r in records if rng.random() < 0.5}
    selected = [r for r in records if r.id in ids]
    series = citations_over_time(corpus, ids)
    incoming = defaultdict(int)
    outgoing = defaultdict(int)
    for r in selected:
        incoming[r.year] += r.in_citations
        outgoing[r.year] += r.out_citations
    assert list(series.incoming.buckets) == sorted(incoming.items())
    assert list(series.outgoing.buckets) == sorted(outgoing.items())
    assert series.incoming_dist == oracle_quartiles([r.in_citations for r in selected])


# -- aggregates depend only on the id set -----------------------------------


def test_aggregates_ignore_filter_syntax():
    records = random_records(seed=29, n=300)
    corpus = build_corpus(records)
    by_exact = select(corpus, FilterQuery(venues=(TextMatcher("ACL"),)))
    by_regex = select(corpus, FilterQuery(venues=(TextMatcher("^ACL$", "regex"),)))
    assert by_exact == by_regex
    assert per_year(corpus, "authors", by_exact) == per_year(corpus, "authors", by_regex)
    assert top_k(corpus, "venues", by_exact, "papers", 5) == top_k(corpus, "venues", by_regex, "papers", 5)


# -- export_csv ---------------------------------------------------------------


def test_export_histogram_exact_bytes():
    assert export_csv(YearHistogram(((2020, 2),))) == b"year,count\n2020,2\n"


def test_export_quotes_commas():
    data = export_csv(analytics.TopKList((("Jones, A.", 3),), metric="papers"))
    assert data == b'label,weight\n"Jones, A.",3\n'


def test_export_grid_round_trips_through_csv_reader():
    records = random_records(seed=30, n=60)
    corpus = build_corpus(records)
    page = details_grid(corpus, "papers", corpus.ids(), page_size=60)
    parsed = list(csv.reader(io.StringIO(export_csv(page).decode("utf-8"))))
    assert parsed[0] == list(page.columns)
    assert len(parsed) == 1 + len(page.rows)
    for cells, row in zip(parsed[1:], page.rows):
        expected = ["; ".join(v) if isinstance(v, list) else ("" if v is None else str(v)) for v in (row[c] for c in page.columns)]
        assert cells == expected


def test_export_distribution_and_series():
    dist_bytes = export_csv(DistributionSummary(1, 2, 3, 4, 5))
    assert dist_bytes.splitlines()[0] == b"min,q25,median,q75,max"
    corpus = build_corpus([make("a", year=2001, in_citations=1, out_citations=2)])
    series_bytes = export_csv(citations_over_time(corpus, corpus.ids()))
    assert series_bytes == b"year,incoming,outgoing\n2001,1,2\n"
