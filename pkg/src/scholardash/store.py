"""Embedded record store with secondary indexes.

Single-process, file-backed corpus. Facet posting lists and the ordered
citation index keep filtering and auto-complete away from full scans.
Concurrency contract: many readers or one writer; ingestion takes the
writer role, queries and snapshots the reader role.
"""
from __future__ import annotations

import json
import threading
from bisect import bisect_left, bisect_right, insort
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from scholardash.records import PaperRecord, SchemaViolation, record_from_dict, record_to_dict, validate_record

SNAPSHOT_MAGIC = "scholardash.store"
SNAPSHOT_VERSION = 1

# Facet name -> extractor producing that record's facet values.
FACET_VALUES = {
    "venue": lambda r: (r.venue,) if r.venue else (),
    "author": lambda r: tuple(dict.fromkeys(r.authors)),
    "publisher": lambda r: (r.publisher,) if r.publisher else (),
    "paper_type": lambda r: (r.paper_type,),
    "field_of_study": lambda r: tuple(sorted(r.fields_of_study)),
    "access_type": lambda r: (r.access_type,),
}

FACETS = tuple(FACET_VALUES)


class StoreError(Exception):
    pass


class CorruptSnapshot(StoreError):
    pass


class UnsupportedVersion(StoreError):
    pass


class RWLock:
    """Many concurrent readers or one writer."""

    def __init__(self) -> None:
        self._cond = threading.Condition()
        self._readers = 0
        self._writing = False

    @contextmanager
    def read(self):
        with self._cond:
            while self._writing:
                self._cond.wait()
            self._readers += 1
        try:
            yield
        finally:
            with self._cond:
                self._readers -= 1
                if self._readers == 0:
                    self._cond.notify_all()

    @contextmanager
    def write(self):
        with self._cond:
            while self._writing or self._readers:
                self._cond.wait()
            self._writing = True
        try:
            yield
        finally:
            with self._cond:
                self._writing = False
                self._cond.notify_all()


@dataclass(frozen=True)
class StoreStats:
    n_records: int
    per_facet_cardinality: dict[str, int]
    year_range: tuple[int, int] | None


class Corpus:
    """Records plus the indexes that answer faceted queries.

    Index mutation happens only inside upsert/remove under the write
    lock; all read paths (including snapshot) take the read lock.
    """

    def __init__(self) -> None:
        self.lock = RWLock()
        self._records: dict[str, PaperRecord] = {}
        self._facet_index: dict[str, dict[str, set[str]]] = {f: {} for f in FACETS}
        self._year_index: dict[int, set[str]] = {}
        self._citation_keys: list[int] = []
        self._citation_index: dict[int, set[str]] = {}

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[PaperRecord]:
        return iter(self._records.values())

    def get(self, record_id: str) -> PaperRecord | None:
        return self._records.get(record_id)

    def ids(self) -> set[str]:
        return set(self._records)

    def upsert(self, record: PaperRecord) -> bool:
        """Insert or replace; returns whether a previous version existed."""
        validate_record(record)
        with self.lock.write():
            previous = self._records.get(record.id)
            if previous is not None:
                self._deindex(previous)
            self._records[record.id] = record
            self._index(record)
            return previous is not None

    def remove(self, record_id: str) -> bool:
        with self.lock.write():
            record = self._records.pop(record_id, None)
            if record is None:
                return False
            self._deindex(record)
            return True

    def _index(self, record: PaperRecord) -> None:
        for facet, extract in FACET_VALUES.items():
            index = self._facet_index[facet]
            for value in extract(record):
                index.setdefault(value, set()).add(record.id)
        self._year_index.setdefault(record.year, set()).add(record.id)
        postings = self._citation_index.get(record.in_citations)
        if postings is None:
            self._citation_index[record.in_citations] = {record.id}
            insort(self._citation_keys, record.in_citations)
        else:
            postings.add(record.id)

    def _deindex(self, record: PaperRecord) -> None:
        for facet, extract in FACET_VALUES.items():
            index = self._facet_index[facet]
            for value in extract(record):
                postings = index.get(value)
                if postings is not None:
                    postings.discard(record.id)
                    if not postings:
                        del index[value]
        year_postings = self._year_index.get(record.year)
        if year_postings is not None:
            year_postings.discard(record.id)
            if not year_postings:
                del self._year_index[record.year]
        cit_postings = self._citation_index.get(record.in_citations)
        if cit_postings is not None:
            cit_postings.discard(record.id)
            if not cit_postings:
                del self._citation_index[record.in_citations]
                idx = bisect_left(self._citation_keys, record.in_citations)
                del self._citation_keys[idx]

    # -- read paths -------------------------------------------------

    def posting(self, facet: str, value: str) -> frozenset[str]:
        return frozenset(self._facet_index[facet].get(value, ()))

    def facet_counts(self, facet: str) -> dict[str, int]:
        """Distinct facet values with their record counts."""
        return {value: len(ids) for value, ids in self._facet_index[facet].items()}

    def ids_in_year_range(self, lo: int, hi: int) -> set[str]:
        matched: set[str] = set()
        for year, ids in self._year_index.items():
            if lo <= year <= hi:
                matched |= ids
        return matched

    def ids_in_citation_range(self, lo: int, hi: int) -> set[str]:
        matched: set[str] = set()
        start = bisect_left(self._citation_keys, lo)
        stop = bisect_right(self._citation_keys, hi)
        for key in self._citation_keys[start:stop]:
            matched |= self._citation_index[key]
        return matched

    def stats(self) -> StoreStats:
        with self.lock.read():
            years = self._year_index.keys()
            return StoreStats(
                n_records=len(self._records),
                per_facet_cardinality={f: len(self._facet_index[f]) for f in FACETS},
                year_range=(min(years), max(years)) if years else None,
            )

    # -- persistence ------------------------------------------------

    def snapshot(self, path: str | Path) -> None:
        """Write a deterministic versioned snapshot (sorted, keyed JSON)."""
        with self.lock.read():
            records = [record_to_dict(self._records[i]) for i in sorted(self._records)]
        payload = {"magic": SNAPSHOT_MAGIC, "version": SNAPSHOT_VERSION, "records": records}
        text = json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
        Path(path).write_text(text, encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Corpus":
        try:
            text = Path(path).read_text(encoding="utf-8")
            payload = json.loads(text)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise CorruptSnapshot(f"unreadable snapshot: {exc}") from exc
        if not isinstance(payload, dict) or payload.get("magic") != SNAPSHOT_MAGIC:
            raise CorruptSnapshot("missing snapshot magic header")
        version = payload.get("version")
        if not isinstance(version, int) or version < 1:
            raise CorruptSnapshot(f"bad snapshot version {version!r}")
        if version > SNAPSHOT_VERSION:
            raise UnsupportedVersion(
                f"snapshot version {version} is newer than supported {SNAPSHOT_VERSION}"
            )
        records = payload.get("records")
        if not isinstance(records, list):
            raise CorruptSnapshot("snapshot has no record list")
        corpus = cls()
        for entry in records:
            try:
                record = record_from_dict(entry)
            except SchemaViolation as exc:
                raise CorruptSnapshot(f"invalid record in snapshot: {exc}") from exc
            corpus._records[record.id] = record
            corpus._index(record)
        return corpus
