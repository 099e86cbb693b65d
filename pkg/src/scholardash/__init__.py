"""scholardash: bibliometric analytics backend.

Ingests publication metadata dumps, serves filtered dashboard
aggregations over a REST API, and trains LDA topic models with
saliency/relevance term panels and an intertopic distance map.
"""

__version__ = "0.1.0"
