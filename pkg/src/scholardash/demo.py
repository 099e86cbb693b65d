"""Seeded demo corpus so the server and UI have data out of the box.

Titles and abstracts are drawn from themed word pools, which gives the
topic explorer visibly separated clusters; citation counts follow a
heavy tail so the top-k and distribution views look like real data.
Fully deterministic for a given seed.
"""
from __future__ import annotations

import random

from scholardash.records import PaperRecord

THEMES = {
    "networks": (
        "network protocol latency routing packet bandwidth congestion wireless "
        "throughput queue transport overlay peer"
    ),
    "vision": (
        "image segmentation detection object recognition convolution pixel scene "
        "camera depth tracking feature shape"
    ),
    "language": (
        "language translation parsing corpus grammar semantic embedding token "
        "dialogue sentiment summarization lexicon"
    ),
    "databases": (
        "database index transaction storage relational schema partition replication "
        "consistency snapshot view materialized"
    ),
    "theory": (
        "complexity approximation bound algorithm graph optimization matroid "
        "hardness random reduction combinatorial proof"
    ),
    "security": (
        "encryption authentication vulnerability malware intrusion key signature "
        "privacy attack defense audit sandbox"
    ),
}

VENUES = [
    "ACL", "EMNLP", "NAACL", "CVPR", "ICCV", "SIGMOD", "VLDB", "SIGCOMM",
    "NSDI", "STOC", "FOCS", "CCS", "USENIX Security", "Commun. ACM",
    "IEEE Trans. Pattern Anal. Mach. Intell.", "Theor. Comput. Sci.",
]

PUBLISHERS = ["ACM", "IEEE", "Springer", "Elsevier", None, None, None]

FIELDS = [
    "Computer Science", "Mathematics", "Engineering", "Medicine",
    "Psychology", "Physics", "Business",
]

FIRST_NAMES = [
    "Ada", "Alan", "Grace", "Edsger", "Donald", "Barbara", "John", "Frances",
    "Tony", "Leslie", "Shafi", "Silvio", "Judea", "Manuel", "Radia", "Butler",
]

LAST_NAMES = [
    "Lovelace", "Turing", "Hopper", "Dijkstra", "Knuth", "Liskov", "Backus",
    "Allen", "Hoare", "Lamport", "Goldwasser", "Micali", "Pearl", "Blum",
    "Perlman", "Lampson",
]

PAPER_TYPE_WEIGHTS = [
    ("article", 70), ("proceedings", 4), ("book", 3), ("incollection", 6),
    ("phdthesis", 4), ("mastersthesis", 3), ("other", 10),
]


def generate_demo_records(n_records: int = 300, seed: int = 7) -> list[PaperRecord]:
    rng = random.Random(seed)
    theme_words = {name: words.split() for name, words in THEMES.items()}
    theme_names = sorted(theme_words)
    authors_pool = [f"{f} {l}" for f in FIRST_NAMES for l in LAST_NAMES]
    types, type_weights = zip(*PAPER_TYPE_WEIGHTS)

    records = []
    for i in range(n_records):
        theme = theme_names[i % len(theme_names)]
        words = theme_words[theme]
        title_words = rng.sample(words, k=rng.randint(3, 5))
        title = " ".join(w.capitalize() for w in title_words)
        abstract = " ".join(rng.choice(words) for _ in range(rng.randint(15, 30)))
        year = rng.randint(1990, 2021)
        n_authors = rng.randint(1, 4)
        record = PaperRecord(
            id=f"demo-{i:05d}",
            title=title,
            year=year,
            authors=tuple(rng.sample(authors_pool, k=n_authors)),
            abstract=abstract,
            venue=rng.choice(VENUES),
            publisher=rng.choice(PUBLISHERS),
            paper_type=rng.choices(types, weights=type_weights)[0],
            fields_of_study=frozenset(rng.sample(FIELDS, k=rng.randint(1, 3))),
            access_type=rng.choices(["open", "closed", "unknown"], weights=[3, 2, 5])[0],
            url=f"https://example.org/paper/{i:05d}" if rng.random() < 0.8 else None,
            in_citations=int(rng.paretovariate(1.3)) - 1,
            out_citations=rng.randint(0, 60),
        )
        records.append(record)
    return records
