"""Text cleanup for topic training.

Per document: concatenate title and abstract, fold accents to ascii,
lowercase, drop digits, split on anything that is not a letter, remove
stopwords, drop tokens shorter than 3 characters, stem. The vocabulary
is built over the whole batch in first-occurrence order.
"""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from typing import Iterable

from scholardash.topics.porter import stem
from scholardash.topics.stopwords import STOPWORDS

_DIGITS_RX = re.compile(r"[0-9]+")
_TOKEN_RX = re.compile(r"[a-z]+")
MIN_TOKEN_LEN = 3


class EmptyCorpusAfterCleaning(Exception):
    pass


@dataclass
class ProcessedDocs:
    """Token-id documents plus the id <-> stem vocabulary."""

    docs: list[list[int]]
    vocabulary: list[str]            # token id -> stem
    vocab_index: dict[str, int]      # stem -> token id
    doc_ids: list[str]
    token_total: int
    dropped_ids: list[str] = field(default_factory=list)


def tokenize(text: str) -> list[str]:
    """Cleaned, stemmed tokens of one document."""
    folded = unicodedata.normalize("NFKD", text).encode("ascii", "ignore").decode("ascii")
    folded = _DIGITS_RX.sub("", folded.lower())
    return [
        stem(token)
        for token in _TOKEN_RX.findall(folded)
        if token not in STOPWORDS and len(token) >= MIN_TOKEN_LEN
    ]


def preprocess(papers: Iterable[tuple[str, str, str | None]]) -> ProcessedDocs:
    """Tokenize (paper_id, title, abstract) triples into a training corpus.

    Documents left with zero tokens are dropped and recorded in
    dropped_ids. Raises EmptyCorpusAfterCleaning when nothing survives.
    """
    docs: list[list[int]] = []
    doc_ids: list[str] = []
    dropped: list[str] = []
    vocabulary: list[str] = []
    vocab_index: dict[str, int] = {}
    token_total = 0

    for paper_id, title, abstract in papers:
        text = f"{title} {abstract}" if abstract else title
        stems = tokenize(text)
        if not stems:
            dropped.append(paper_id)
            continue
        token_ids = []
        for stem_text in stems:
            token_id = vocab_index.get(stem_text)
            if token_id is None:
                token_id = len(vocabulary)
                vocab_index[stem_text] = token_id
                vocabulary.append(stem_text)
            token_ids.append(token_id)
        docs.append(token_ids)
        doc_ids.append(paper_id)
        token_total += len(token_ids)

    if not docs:
        raise EmptyCorpusAfterCleaning("no documents survived cleaning")
    return ProcessedDocs(
        docs=docs,
        vocabulary=vocabulary,
        vocab_index=vocab_index,
        doc_ids=doc_ids,
        token_total=token_total,
        dropped_ids=dropped,
    )
