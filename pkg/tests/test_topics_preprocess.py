from __future__ import annotations

import json
from pathlib import Path

import pytest

from scholardash.topics import EmptyCorpusAfterCleaning, preprocess, tokenize
from scholardash.topics.porter import stem

FIXTURES = Path(__file__).parent / "fixtures"

# (word, expected stem) pairs traced by hand against the algorithm
# definition; the full-pipeline outputs match the reference behavior.
PORTER_VECTORS = [
    ("caresses", "caress"), ("ponies", "poni"), ("ties", "ti"), ("caress", "caress"),
    ("cats", "cat"), ("feed", "feed"), ("agreed", "agre"), ("plastered", "plaster"),
    ("bled", "bled"), ("motoring", "motor"), ("sing", "sing"), ("conflated", "conflat"),
    ("troubled", "troubl"), ("sized", "size"), ("hopping", "hop"), ("tanned", "tan"),
    ("falling", "fall"), ("hissing", "hiss"), ("fizzed", "fizz"), ("failing", "fail"),
    ("filing", "file"), ("happy", "happi"), ("sky", "sky"), ("relational", "relat"),
    ("conditional", "condit"), ("rational", "ration"), ("valenci", "valenc"),
    ("hesitanci", "hesit"), ("digitizer", "digit"), ("conformabli", "conform"),
    ("radicalli", "radic"), ("differentli", "differ"), ("vileli", "vile"),
    ("analogousli", "analog"), ("vietnamization", "vietnam"), ("predication", "predic"),
    ("operator", "oper"), ("feudalism", "feudal"), ("decisiveness", "decis"),
    ("hopefulness", "hope"), ("callousness", "callous"), ("formaliti", "formal"),
    ("sensitiviti", "sensit"), ("sensibiliti", "sensibl"), ("triplicate", "triplic"),
    ("formative", "form"), ("formalize", "formal"), ("electriciti", "electr"),
    ("electrical", "electr"), ("hopeful", "hope"), ("goodness", "good"),
    ("revival", "reviv"), ("allowance", "allow"), ("inference", "infer"),
    ("airliner", "airlin"), ("gyroscopic", "gyroscop"), ("adjustable", "adjust"),
    ("defensible", "defens"), ("irritant", "irrit"), ("replacement", "replac"),
    ("adjustment", "adjust"), ("dependent", "depend"), ("adoption", "adopt"),
    ("homologou", "homolog"), ("communism", "commun"), ("activate", "activ"),
    ("angulariti", "angular"), ("homologous", "homolog"), ("effective", "effect"),
    ("bowdlerize", "bowdler"), ("probate", "probat"), ("rate", "rate"),
    ("cease", "ceas"), ("controll", "control"), ("roll", "roll"),
    ("generalizations", "gener"), ("oscillators", "oscil"),
    ("computing", "comput"), ("computers", "comput"), ("computes", "comput"),
    ("computation", "comput"), ("computer", "comput"),
]


@pytest.mark.parametrize("word,expected", PORTER_VECTORS)
def test_porter_vectors(word, expected):
    assert stem(word) == expected


def test_inflections_collapse_to_comput():
    assert tokenize("Computing Computers Computes") == ["comput"] * 3


def test_stopword_only_title_drops_document():
    processed = preprocess([("keep", "Computing", None), ("drop", "the of and", None)])
    assert processed.doc_ids == ["keep"]
    assert processed.dropped_ids == ["drop"]


def test_all_documents_dropped_raises():
    with pytest.raises(EmptyCorpusAfterCleaning):
        preprocess([("a", "the of", None), ("b", "12345 !!", None)])


def test_empty_input_raises():
    with pytest.raises(EmptyCorpusAfterCleaning):
        preprocess([])


def test_digits_and_punctuation_are_stripped():
    assert tokenize("graph-based 42 routing!") == ["graph", "base", "rout"]


def test_accents_fold_to_ascii():
    assert tokenize("Müller's naïve café") == ["muller", "naiv", "cafe"]


def test_reference_tokenization_fixture():
    reference = json.loads((FIXTURES / "tokenization_reference.json").read_text(encoding="utf-8"))
    docs = reference["docs"]
    processed = preprocess([(d["id"], d["title"], d["abstract"]) for d in docs])

    expected_kept = [d for d in docs if d["tokens"]]
    assert processed.doc_ids == [d["id"] for d in expected_kept]
    assert processed.dropped_ids == [d["id"] for d in docs if not d["tokens"]]

    # Vocabulary in first-occurrence order over the kept documents.
    expected_vocab: list[str] = []
    for d in expected_kept:
        for token in d["tokens"]:
            if token not in expected_vocab:
                expected_vocab.append(token)
    assert processed.vocabulary == expected_vocab

    for doc, expected in zip(processed.docs, expected_kept):
        assert [processed.vocabulary[t] for t in doc] == expected["tokens"]
    assert processed.token_total == sum(len(d["tokens"]) for d in docs)
