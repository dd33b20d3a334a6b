"""
End-to-end generation runs.

- runner.py: seeded batch generation and the generation report
- manifest.py: run manifest beside the corpus
"""

from .manifest import build_run_manifest, write_run_manifest
from .runner import GenerationReport, build_catalog, generate_dialogues, run_pipeline, summarize

__all__ = [
    "run_pipeline",
    "generate_dialogues",
    "build_catalog",
    "summarize",
    "GenerationReport",
    "build_run_manifest",
    "write_run_manifest",
]
