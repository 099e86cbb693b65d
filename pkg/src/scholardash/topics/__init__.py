"""Topic modeling: preprocessing, LDA training, term panels, distance map."""
from scholardash.topics.distance import jensen_shannon, jsd_matrix, principal_coordinates, project_topics
from scholardash.topics.lda import (
    DEFAULT_BETA,
    DEFAULT_ITERATIONS,
    DEFAULT_LAMBDA,
    DEFAULT_TOPICS,
    MAX_TRAINING_DOCS,
    CorruptModel,
    DegenerateCorpus,
    TooManyDocuments,
    TopicModel,
    default_alpha,
    model_from_bytes,
    model_to_bytes,
    train,
)
from scholardash.topics.panels import (
    PANEL_SIZE,
    PanelRow,
    TermPanel,
    TopicOutOfRange,
    UnknownTerm,
    intertopic_map,
    relevance,
    saliency,
    term_panel,
)
from scholardash.topics.preprocess import EmptyCorpusAfterCleaning, ProcessedDocs, preprocess, tokenize

__all__ = [
    "DEFAULT_BETA",
    "DEFAULT_ITERATIONS",
    "DEFAULT_LAMBDA",
    "DEFAULT_TOPICS",
    "MAX_TRAINING_DOCS",
    "PANEL_SIZE",
    "CorruptModel",
    "DegenerateCorpus",
    "EmptyCorpusAfterCleaning",
    "PanelRow",
    "ProcessedDocs",
    "TermPanel",
    "TooManyDocuments",
    "TopicModel",
    "TopicOutOfRange",
    "UnknownTerm",
    "default_alpha",
    "intertopic_map",
    "jensen_shannon",
    "jsd_matrix",
    "model_from_bytes",
    "model_to_bytes",
    "preprocess",
    "principal_coordinates",
    "project_topics",
    "relevance",
    "saliency",
    "term_panel",
    "tokenize",
    "train",
]
