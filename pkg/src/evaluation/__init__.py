"""
Crowdsourcing evaluation kit.

- guidelines.py: Worker instructions per task
- export.py: Task CSV exports and implicit-intent snippets
- ingest.py: Completed annotation files
- aggregate.py: Score and rank aggregates with text summaries
"""

from .aggregate import (
    aggregate_ranks,
    aggregate_scores,
    compare_provenance,
    render_rank_table,
    render_score_summary,
    score_histogram,
)
from .export import build_task3_snippets, export_amt, instructions_path
from .guidelines import guideline_for
from .ingest import ingest_annotations

__all__ = [
    "export_amt",
    "build_task3_snippets",
    "instructions_path",
    "guideline_for",
    "ingest_annotations",
    "aggregate_scores",
    "compare_provenance",
    "aggregate_ranks",
    "score_histogram",
    "render_rank_table",
    "render_score_summary",
]
