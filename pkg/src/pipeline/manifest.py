"""Run manifest written beside a generated corpus."""

from pathlib import Path
from typing import Any, Dict

from src.config.pipeline_config import PipelineConfig
from src.models.constants import PACKAGE_VERSION
from src.models.record_types import RunManifest
from src.utils.files import manifest_path, write_json


def build_run_manifest(config: PipelineConfig, n_dialogues: int, report: Dict[str, Any]) -> RunManifest:
    return RunManifest(
        version=PACKAGE_VERSION,
        master_seed=config.master_seed,
        n_dialogues=n_dialogues,
        config=config.echo(),
        report=report,
    )


def write_run_manifest(output_path: str | Path, config: PipelineConfig, n_dialogues: int, report: Dict[str, Any]) -> Path:
    """Write ``<output>.manifest.json``."""
    return write_json(manifest_path(output_path), build_run_manifest(config, n_dialogues, report))
