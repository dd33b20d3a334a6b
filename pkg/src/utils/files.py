"""
File helpers for exported datasets.

Training data and generated corpora are newline-delimited JSON; each export
gets a ``<file>.manifest.json`` sidecar describing how it was produced.
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterable

from src.models.record_types import TrainingManifest


def manifest_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".manifest.json")


def write_json(path: str | Path, data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return path


def write_ndjson(path: str | Path, records: Iterable[Dict[str, Any]]) -> int:
    """Write one compact JSON object per line; returns the record count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
            count += 1
    return count


def write_training_manifest(
    data_path: str | Path,
    kind: str,
    examples: int,
    trainer_defaults: Dict[str, Any],
    sources: Dict[str, Any],
) -> Path:
    manifest = TrainingManifest(
        kind=kind,
        examples=examples,
        trainer_defaults=dict(trainer_defaults),
        sources=sources,
    )
    return write_json(manifest_path(data_path), manifest)
