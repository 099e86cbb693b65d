"""Latent Dirichlet allocation by collapsed Gibbs sampling.

The per-token conditional is

    P(z_i = k | rest) ~ (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta)

with the current token excluded from all counts. After the final sweep,
point estimates come from the counts:

    phi[k][w]   = (n_kw + beta) / (n_k + V*beta)
    theta[d][k] = (n_dk + alpha) / (n_d + K*alpha)
    marginal[k] = n_k / N

Sampling runs on plain Python ints driven by random.Random(seed), so a
given (corpus, K, alpha, beta, iterations, seed) tuple reproduces the
model bit for bit.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

import numpy as np

from scholardash.topics.distance import project_topics
from scholardash.topics.preprocess import ProcessedDocs

MAX_TRAINING_DOCS = 100_000

DEFAULT_TOPICS = 20
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 500
DEFAULT_LAMBDA = 0.6

MODEL_MAGIC = "scholardash.topicmodel"
MODEL_VERSION = 1


class TooManyDocuments(Exception):
    def __init__(self, count: int, cap: int = MAX_TRAINING_DOCS):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} documents exceed the training cap of {cap}")


class DegenerateCorpus(Exception):
    pass


@dataclass
class TopicModel:
    k: int
    alpha: float
    beta: float
    iterations: int
    seed: int
    vocabulary: list[str]
    phi: np.ndarray        # K x V, rows sum to 1
    theta: np.ndarray      # D x K, rows sum to 1
    marginal: np.ndarray   # K, sums to 1
    term_freq: np.ndarray  # V, corpus counts
    doc_ids: list[str]
    coords: np.ndarray     # K x 2 intertopic map positions

    @property
    def token_total(self) -> int:
        return int(self.term_freq.sum())


def default_alpha(k: int) -> float:
    return 50.0 / k


def _check_counts(docs, n_dk, n_kw, n_k) -> None:
    for d, doc in enumerate(docs):
        if sum(n_dk[d]) != len(doc):
            raise AssertionError(f"doc {d}: topic counts do not sum to its length")
    for k, row in enumerate(n_kw):
        if sum(row) != n_k[k]:
            raise AssertionError(f"topic {k}: term counts do not sum to its total")


def train(
    corpus: ProcessedDocs,
    k: int = DEFAULT_TOPICS,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
    validate_each_sweep: bool = False,
) -> TopicModel:
    """Train on a tokenized corpus; deterministic for a given seed.

    Raises TooManyDocuments above the 100K document cap and
    DegenerateCorpus when the vocabulary is smaller than k.
    """
    docs = corpus.docs
    n_docs = len(docs)
    n_vocab = len(corpus.vocabulary)
    if n_docs > MAX_TRAINING_DOCS:
        raise TooManyDocuments(n_docs)
    if k < 2:
        raise ValueError("k must be >= 2")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if beta <= 0:
        raise ValueError("beta must be > 0")
    if n_vocab < k:
        raise DegenerateCorpus(f"vocabulary size {n_vocab} < topic count {k}")
    if alpha is None:
        alpha = default_alpha(k)
    if alpha <= 0:
        raise ValueError("alpha must be > 0")

    rng = random.Random(seed)
    n_dk = [[0] * k for _ in range(n_docs)]
    n_kw = [[0] * n_vocab for _ in range(k)]
    n_k = [0] * k
    assignments = []
    for d, doc in enumerate(docs):
        doc_topics = []
        row = n_dk[d]
        for w in doc:
            t = rng.randrange(k)
            doc_topics.append(t)
            row[t] += 1
            n_kw[t][w] += 1
            n_k[t] += 1
        assignments.append(doc_topics)

    v_beta = n_vocab * beta
    topic_range = range(k)
    probs = [0.0] * k
    for _ in range(iterations):
        for d, doc in enumerate(docs):
            doc_topics = assignments[d]
            row = n_dk[d]
            for i, w in enumerate(doc):
                t = doc_topics[i]
                row[t] -= 1
                n_kw[t][w] -= 1
                n_k[t] -= 1
                total = 0.0
                for kk in topic_range:
                    p = (row[kk] + alpha) * (n_kw[kk][w] + beta) / (n_k[kk] + v_beta)
                    probs[kk] = p
                    total += p
                u = rng.random() * total
                acc = 0.0
                t = k - 1
                for kk in topic_range:
                    acc += probs[kk]
                    if u < acc:
                        t = kk
                        break
                doc_topics[i] = t
                row[t] += 1
                n_kw[t][w] += 1
                n_k[t] += 1
        if validate_each_sweep or __debug__:
            _check_counts(docs, n_dk, n_kw, n_k)

    counts_kw = np.array(n_kw, dtype=np.float64)
    counts_dk = np.array(n_dk, dtype=np.float64)
    totals_k = np.array(n_k, dtype=np.float64)
    doc_lens = np.array([len(doc) for doc in docs], dtype=np.float64)

    phi = (counts_kw + beta) / (totals_k[:, None] + v_beta)
    theta = (counts_dk + alpha) / (doc_lens[:, None] + k * alpha)
    marginal = totals_k / float(corpus.token_total)

    term_freq = np.zeros(n_vocab, dtype=np.int64)
    for doc in docs:
        for w in doc:
            term_freq[w] += 1

    return TopicModel(
        k=k,
        alpha=alpha,
        beta=beta,
        iterations=iterations,
        seed=seed,
        vocabulary=list(corpus.vocabulary),
        phi=phi,
        theta=theta,
        marginal=marginal,
        term_freq=term_freq,
        doc_ids=list(corpus.doc_ids),
        coords=project_topics(phi, marginal),
    )


def model_to_bytes(model: TopicModel, include_theta: bool = True) -> bytes:
    """Deterministic versioned artifact; loadable without the corpus."""
    payload = {
        "magic": MODEL_MAGIC,
        "version": MODEL_VERSION,
        "k": model.k,
        "alpha": model.alpha,
        "beta": model.beta,
        "iterations": model.iterations,
        "seed": model.seed,
        "vocabulary": model.vocabulary,
        "phi": model.phi.tolist(),
        "theta": model.theta.tolist() if include_theta else None,
        "marginal": model.marginal.tolist(),
        "term_freq": model.term_freq.tolist(),
        "doc_ids": model.doc_ids,
        "coords": model.coords.tolist(),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


class CorruptModel(Exception):
    pass


def model_from_bytes(data: bytes) -> TopicModel:
    try:
        payload = json.loads(data.decode("utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CorruptModel(f"unreadable model artifact: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("magic") != MODEL_MAGIC:
        raise CorruptModel("missing model magic header")
    version = payload.get("version")
    if not isinstance(version, int) or version > MODEL_VERSION:
        raise CorruptModel(f"unsupported model version {version!r}")
    k = payload["k"]
    theta = payload.get("theta")
    return TopicModel(
        k=k,
        alpha=payload["alpha"],
        beta=payload["beta"],
        iterations=payload["iterations"],
        seed=payload["seed"],
        vocabulary=list(payload["vocabulary"]),
        phi=np.array(payload["phi"], dtype=np.float64),
        theta=np.array(theta, dtype=np.float64) if theta is not None else np.zeros((0, k)),
        marginal=np.array(payload["marginal"], dtype=np.float64),
        term_freq=np.array(payload["term_freq"], dtype=np.int64),
        doc_ids=list(payload["doc_ids"]),
        coords=np.array(payload["coords"], dtype=np.float64),
    )
