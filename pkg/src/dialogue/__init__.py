"""
Dialogue data model operations.

- validation.py: dialogue and turn invariants
- serialization.py: NDJSON corpus format
- stats.py: corpus statistics
- sgd.py: schema-guided TOD corpus reader
"""

from .serialization import deserialize, iter_corpus, read_corpus, serialize, write_corpus
from .stats import compute_stats, render_stats_table
from .validation import validate

__all__ = [
    "validate",
    "serialize",
    "deserialize",
    "iter_corpus",
    "read_corpus",
    "write_corpus",
    "compute_stats",
    "render_stats_table",
]
