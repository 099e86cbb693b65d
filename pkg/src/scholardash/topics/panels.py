"""Term ranking panels for the topic explorer.

Two rankings drive the bar panels:

- saliency(w) = P(w) * sum_k P(k|w) * log(P(k|w) / P(k)), the corpus-wide
  "frequent and distinctive" score, where P(k|w) is proportional to
  phi[k][w] * P(k) and P(w) is the normalized corpus term frequency;
- relevance(w, k | lambda) = lambda*log(phi[k][w])
  + (1-lambda)*log(phi[k][w] / P(w)), blending in-topic probability with
  lift.

Panels cap at 30 rows. The overall bar shows raw corpus counts; the
in-topic bar shows the expected count phi[k][w] * n_k, clamped to the
overall count so the red bar can never outgrow the blue one.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from scholardash.topics.distance import project_topics
from scholardash.topics.lda import TopicModel

PANEL_SIZE = 30

MODE_SALIENT = "salient_overall"
MODE_RELEVANT = "relevant_in_topic"


class TopicOutOfRange(Exception):
    def __init__(self, topic: int, k: int):
        super().__init__(f"topic {topic} outside [0, {k - 1}]")


class UnknownTerm(Exception):
    def __init__(self, term: str):
        self.term = term
        super().__init__(f"term {term!r} not in the model vocabulary")


@dataclass(frozen=True)
class PanelRow:
    term: str
    overall: float            # corpus count
    in_topic: float | None    # expected in-topic count, when a topic is selected


@dataclass(frozen=True)
class TermPanel:
    mode: str
    lam: float
    rows: tuple[PanelRow, ...]
    topic_weights: tuple[float, ...] | None  # P(k|w) when a term is selected


def term_probabilities(model: TopicModel) -> np.ndarray:
    return model.term_freq / float(model.term_freq.sum())


def topic_given_term(model: TopicModel) -> np.ndarray:
    """K x V matrix of P(k|w), columns normalized."""
    joint = model.phi * model.marginal[:, None]
    col = joint.sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(col > 0, joint / col, 0.0)


def saliency_scores(model: TopicModel) -> np.ndarray:
    pkw = topic_given_term(model)
    marg = model.marginal[:, None]
    with np.errstate(invalid="ignore", divide="ignore"):
        contrib = np.where(pkw > 0, pkw * np.log(pkw / marg), 0.0)
    return term_probabilities(model) * contrib.sum(axis=0)


def saliency(model: TopicModel) -> list[tuple[str, float]]:
    """All terms ranked by descending saliency (ties by term)."""
    scores = saliency_scores(model)
    order = sorted(range(len(model.vocabulary)), key=lambda w: (-scores[w], model.vocabulary[w]))
    return [(model.vocabulary[w], float(scores[w])) for w in order]


def relevance_scores(model: TopicModel, topic: int, lam: float) -> np.ndarray:
    if not 0 <= topic < model.k:
        raise TopicOutOfRange(topic, model.k)
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must be within [0, 1]")
    log_phi = np.log(model.phi[topic])
    lift = log_phi - np.log(term_probabilities(model))
    return lam * log_phi + (1.0 - lam) * lift


def relevance(model: TopicModel, topic: int, lam: float) -> list[tuple[str, float]]:
    """Terms ranked by descending relevance; ties by overall frequency."""
    scores = relevance_scores(model, topic, lam)
    order = sorted(
        range(len(model.vocabulary)),
        key=lambda w: (-scores[w], -int(model.term_freq[w]), model.vocabulary[w]),
    )
    return [(model.vocabulary[w], float(scores[w])) for w in order]


def term_panel(
    model: TopicModel,
    selected_topic: int | None = None,
    selected_term: str | None = None,
    lam: float = 0.6,
    n: int = PANEL_SIZE,
) -> TermPanel:
    """The bar panel for the current selection state.

    No selection: top-n salient terms, overall bars only. Topic selected:
    top-n relevant terms with expected in-topic counts. Term selected:
    the saliency panel re-ranked with that term pinned first, plus the
    per-topic weights P(k|w) that drive circle resizing.
    """
    if selected_topic is not None and selected_term is not None:
        raise ValueError("select a topic or a term, not both")
    n = min(n, PANEL_SIZE)
    index = {term: w for w, term in enumerate(model.vocabulary)}

    if selected_topic is not None:
        scores = relevance(model, selected_topic, lam)
        n_k = float(model.marginal[selected_topic]) * model.token_total
        rows = []
        for term, _ in scores[:n]:
            w = index[term]
            count = float(model.term_freq[w])
            expected = float(model.phi[selected_topic, w]) * n_k
            rows.append(PanelRow(term=term, overall=count, in_topic=min(expected, count)))
        return TermPanel(mode=MODE_RELEVANT, lam=lam, rows=tuple(rows), topic_weights=None)

    ranked = [term for term, _ in saliency(model)]
    weights = None
    if selected_term is not None:
        w = index.get(selected_term)
        if w is None:
            raise UnknownTerm(selected_term)
        weights = tuple(float(x) for x in topic_given_term(model)[:, w])
        ranked = [selected_term] + [t for t in ranked if t != selected_term]

    rows = tuple(
        PanelRow(term=t, overall=float(model.term_freq[index[t]]), in_topic=None) for t in ranked[:n]
    )
    return TermPanel(mode=MODE_SALIENT, lam=lam, rows=rows, topic_weights=weights)


def intertopic_map(model: TopicModel) -> np.ndarray:
    """Recompute the K x 2 map from the model (pure; equals model.coords)."""
    return project_topics(model.phi, model.marginal)
