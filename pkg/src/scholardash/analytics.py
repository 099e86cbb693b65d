"""Dashboard aggregates over a selected id set.

Every operation here depends only on the id set handed in, never on how
the filter that produced it was written. Output ordering is fully
deterministic: metric descending, label ascending on ties.

Aggregation dimensions count different entities extracted per record:
papers themselves, author names, venue strings, paper types, fields of
study, publisher names. Records lacking the attribute (no venue, no
publisher) contribute nothing to that dimension.
"""
from __future__ import annotations

import csv
import io
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable

from scholardash.records import PaperRecord
from scholardash.store import Corpus

DIMENSIONS = ("papers", "authors", "venues", "paper_types", "fields_of_study", "publishers")

METRIC_CITATIONS = "citations"
METRIC_PAPERS = "papers"


class AnalyticsError(Exception):
    pass


class EmptySelection(AnalyticsError):
    pass


class InvalidMetric(AnalyticsError):
    pass


class UnknownDimension(AnalyticsError):
    def __init__(self, dim: str):
        super().__init__(f"unknown dimension {dim!r}")


class BadPage(AnalyticsError):
    pass


class BadSortKey(AnalyticsError):
    pass


@dataclass(frozen=True)
class YearHistogram:
    buckets: tuple[tuple[int, int], ...]  # (year, count), years strictly increasing
    metric: str = "entity_count"


@dataclass(frozen=True)
class DistributionSummary:
    min: float
    q25: float
    median: float
    q75: float
    max: float


@dataclass(frozen=True)
class TopKList:
    entries: tuple[tuple[str, int], ...]  # (label, weight), weights non-increasing
    metric: str


@dataclass(frozen=True)
class DetailsPage:
    columns: tuple[str, ...]
    rows: tuple[dict, ...]
    total: int
    page: int
    page_size: int


@dataclass(frozen=True)
class CitationSeries:
    incoming: YearHistogram
    outgoing: YearHistogram
    incoming_dist: DistributionSummary | None
    outgoing_dist: DistributionSummary | None


def _check_dimension(dim: str) -> None:
    if dim not in DIMENSIONS:
        raise UnknownDimension(dim)


def _entity_labels(record: PaperRecord, dim: str) -> tuple[str, ...]:
    """The entities this record contributes to a non-papers dimension."""
    if dim == "authors":
        return tuple(dict.fromkeys(record.authors))
    if dim == "venues":
        return (record.venue,) if record.venue else ()
    if dim == "paper_types":
        return (record.paper_type,)
    if dim == "fields_of_study":
        return tuple(sorted(record.fields_of_study))
    if dim == "publishers":
        return (record.publisher,) if record.publisher else ()
    raise UnknownDimension(dim)


def _selected(corpus: Corpus, ids: Iterable[str]) -> list[PaperRecord]:
    records = []
    for record_id in ids:
        record = corpus.get(record_id)
        if record is not None:
            records.append(record)
    records.sort(key=lambda r: r.id)
    return records


def quantile(sorted_values: list[int] | list[float], q: float) -> float:
    """Linear interpolation between closest ranks (the type-7 rule)."""
    n = len(sorted_values)
    if n == 1:
        return float(sorted_values[0])
    h = (n - 1) * q
    lo = int(h)
    frac = h - lo
    if frac == 0.0:
        return float(sorted_values[lo])
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo])


def five_number_summary(values: Iterable[float]) -> DistributionSummary:
    data = sorted(values)
    if not data:
        raise EmptySelection("no values to summarize")
    return DistributionSummary(
        min=float(data[0]),
        q25=quantile(data, 0.25),
        median=quantile(data, 0.50),
        q75=quantile(data, 0.75),
        max=float(data[-1]),
    )


def per_year(corpus: Corpus, dim: str, ids: Iterable[str]) -> YearHistogram:
    """Entity count per publication year (paper count for dim=papers).

    Only years present in the selection are emitted; consumers zero-fill.
    """
    _check_dimension(dim)
    records = _selected(corpus, ids)
    if dim == "papers":
        counts = Counter(r.year for r in records)
        buckets = tuple(sorted(counts.items()))
    else:
        per_year_entities: dict[int, set[str]] = defaultdict(set)
        for record in records:
            for label in _entity_labels(record, dim):
                per_year_entities[record.year].add(label)
        buckets = tuple(sorted((year, len(ents)) for year, ents in per_year_entities.items()))
    return YearHistogram(buckets=buckets)


def _entity_weights(records: list[PaperRecord], dim: str, metric: str) -> dict[str, int]:
    """Per-entity aggregate: summed citations or paper count."""
    weights: dict[str, int] = defaultdict(int)
    for record in records:
        for label in _entity_labels(record, dim):
            weights[label] += record.in_citations if metric == METRIC_CITATIONS else 1
    return weights


def _check_metric(dim: str, metric: str) -> None:
    if metric not in (METRIC_CITATIONS, METRIC_PAPERS):
        raise InvalidMetric(f"unknown metric {metric!r}")
    if dim == "papers" and metric != METRIC_CITATIONS:
        raise InvalidMetric("the papers dimension only supports the citations metric")


def distribution(corpus: Corpus, dim: str, ids: Iterable[str], metric: str = METRIC_CITATIONS) -> DistributionSummary:
    """Five-number summary of the selection's metric samples.

    For papers the sample is each paper's incoming citations; for every
    other dimension it is the per-entity aggregate over the selection.
    """
    _check_dimension(dim)
    _check_metric(dim, metric)
    records = _selected(corpus, ids)
    if dim == "papers":
        samples: list[int] = [r.in_citations for r in records]
    else:
        samples = list(_entity_weights(records, dim, metric).values())
    return five_number_summary(samples)


def top_k(corpus: Corpus, dim: str, ids: Iterable[str], metric: str, k: int) -> TopKList:
    """Top k entities by metric, ties broken by label."""
    _check_dimension(dim)
    _check_metric(dim, metric)
    if k < 1:
        raise ValueError("k must be >= 1")
    records = _selected(corpus, ids)
    if dim == "papers":
        pairs = [(r.title, r.in_citations) for r in records]
    else:
        pairs = list(_entity_weights(records, dim, metric).items())
    pairs.sort(key=lambda e: (-e[1], e[0]))
    return TopKList(entries=tuple(pairs[:k]), metric=metric)


def average_citations(n_citations: int, n_papers: int) -> float:
    """Citations per paper, rounded to 2 decimals (grid display rule)."""
    return round(n_citations / n_papers, 2)


GRID_COLUMNS = {
    "papers": ("title", "year", "authors", "venue", "citations", "link"),
    "authors": ("name", "first_year", "last_year", "n_papers", "n_citations", "avg_citations", "n_venues"),
    "entity": ("label", "first_year", "last_year", "n_papers", "n_citations", "avg_citations"),
}

# The authors list column is display-only, everything else sorts.
_UNSORTABLE = {"authors"}


def _grid_rows(records: list[PaperRecord], dim: str) -> tuple[tuple[str, ...], list[dict]]:
    if dim == "papers":
        columns = GRID_COLUMNS["papers"]
        rows = [
            {
                "title": r.title,
                "year": r.year,
                "authors": list(r.authors),
                "venue": r.venue,
                "citations": r.in_citations,
                "link": r.url,
            }
            for r in records
        ]
        return columns, rows

    grouped: dict[str, list[PaperRecord]] = defaultdict(list)
    for record in records:
        for label in _entity_labels(record, dim):
            grouped[label].append(record)

    rows = []
    for label, group in grouped.items():
        n_papers = len(group)
        n_citations = sum(r.in_citations for r in group)
        row = {
            "label": label,
            "first_year": min(r.year for r in group),
            "last_year": max(r.year for r in group),
            "n_papers": n_papers,
            "n_citations": n_citations,
            "avg_citations": average_citations(n_citations, n_papers),
        }
        if dim == "authors":
            row = {"name": label, **{k: v for k, v in row.items() if k != "label"}}
            row["n_venues"] = len({r.venue for r in group if r.venue})
        rows.append(row)
    columns = GRID_COLUMNS["authors"] if dim == "authors" else GRID_COLUMNS["entity"]
    return columns, rows


def details_grid(
    corpus: Corpus,
    dim: str,
    ids: Iterable[str],
    page: int = 1,
    page_size: int = 50,
    sort_key: str | None = None,
    sort_dir: str = "asc",
) -> DetailsPage:
    """Sortable, paginated per-dimension detail rows.

    Pages are 1-based; total counts all rows regardless of pagination.
    Rows order by the sort key with the label column as tie break.
    """
    _check_dimension(dim)
    if page < 1 or page_size < 1 or page_size > 500:
        raise BadPage(f"page {page}, page_size {page_size}")
    if sort_dir not in ("asc", "desc"):
        raise BadSortKey(f"sort_dir must be asc or desc, got {sort_dir!r}")

    records = _selected(corpus, ids)
    columns, rows = _grid_rows(records, dim)
    label_key = columns[0]
    rows.sort(key=lambda row: row[label_key])
    if sort_key is not None:
        if sort_key not in columns or sort_key in _UNSORTABLE:
            raise BadSortKey(f"cannot sort {dim} by {sort_key!r}")
        # Stable sort keeps the label order as tie break; absent values
        # group together via the is-None flag.
        rows.sort(
            key=lambda row: (row[sort_key] is None, 0 if row[sort_key] is None else row[sort_key]),
            reverse=sort_dir == "desc",
        )
    elif sort_dir == "desc":
        rows.reverse()

    start = (page - 1) * page_size
    return DetailsPage(
        columns=columns,
        rows=tuple(rows[start : start + page_size]),
        total=len(rows),
        page=page,
        page_size=page_size,
    )


def citations_over_time(corpus: Corpus, ids: Iterable[str]) -> CitationSeries:
    """Incoming and outgoing citation sums bucketed by publication year.

    The dump only carries the cited paper's own publication year, so both
    series bucket by it. Empty selections produce empty series and no
    distributions.
    """
    records = _selected(corpus, ids)
    incoming: Counter[int] = Counter()
    outgoing: Counter[int] = Counter()
    for record in records:
        incoming[record.year] += record.in_citations
        outgoing[record.year] += record.out_citations
    return CitationSeries(
        incoming=YearHistogram(tuple(sorted(incoming.items())), metric="citation_sum"),
        outgoing=YearHistogram(tuple(sorted(outgoing.items())), metric="citation_sum"),
        incoming_dist=five_number_summary([r.in_citations for r in records]) if records else None,
        outgoing_dist=five_number_summary([r.out_citations for r in records]) if records else None,
    )


def export_csv(result) -> bytes:
    """RFC-4180 style CSV with a header row, UTF-8, newline-terminated."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if isinstance(result, YearHistogram):
        writer.writerow(["year", "count"])
        writer.writerows(result.buckets)
    elif isinstance(result, DistributionSummary):
        writer.writerow(["min", "q25", "median", "q75", "max"])
        writer.writerow([result.min, result.q25, result.median, result.q75, result.max])
    elif isinstance(result, TopKList):
        writer.writerow(["label", "weight"])
        writer.writerows(result.entries)
    elif isinstance(result, DetailsPage):
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow(
                ["; ".join(v) if isinstance(v, list) else ("" if v is None else v) for v in (row[c] for c in result.columns)]
            )
    elif isinstance(result, CitationSeries):
        writer.writerow(["year", "incoming", "outgoing"])
        incoming = dict(result.incoming.buckets)
        outgoing = dict(result.outgoing.buckets)
        for year in sorted(incoming.keys() | outgoing.keys()):
            writer.writerow([year, incoming.get(year, 0), outgoing.get(year, 0)])
    else:
        raise TypeError(f"cannot export {type(result).__name__}")
    return out.getvalue().encode("utf-8")
