"""Fixed English stopword list, applied before stemming.

The list is versioned because changing it silently changes every model
trained afterwards; bump STOPWORDS_VERSION with any edit. Function words
only: domain vocabulary (even ubiquitous words like "paper") is kept so
it can surface in topic panels.
"""
from __future__ import annotations

STOPWORDS_VERSION = 1

STOPWORDS = frozenset("""
a about above after again against all also am an and any are aren as at
be because been before being below between both but by
can cannot could couldn
did didn do does doesn doing don down during
each either
few for from further
had hadn has hasn have haven having he her here hers herself him himself
his how however
i if in into is isn it its itself
just
let
may me might more most mustn my myself
no nor not
of off on once only onto or other ought our ours ourselves out over own
per
same shall shan she should shouldn since so some such
than that the their theirs them themselves then there these they this
those through thus to too toward towards
under until unto up upon us
very via
was wasn we were weren what when where whether which while who whom why
will with within without won would wouldn
yet you your yours yourself yourselves
""".split())
