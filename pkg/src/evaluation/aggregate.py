"""
Aggregates over completed annotations.

Scores (Tasks 1 and 2) are averaged per item over its three workers; the
corpus distribution of a question is the histogram of those item means.
Detector ranks (Task 3) are averaged over every (snippet, worker) record.
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from src.exceptions import PreconditionError
from src.models.constants import HISTOGRAM_BIN_WIDTH, SCORE_MAX, SCORE_MIN, TASK1_QUESTIONS, TASK2_QUESTIONS, WORKERS_PER_ITEM
from src.models.enums import Detector, EvalTask, Provenance
from src.models.types import (
    Dialogue,
    ProvenanceBreakdown,
    ProvenanceComparison,
    RankReport,
    RankSummary,
    ScoreReport,
    Task1Annotation,
    Task2Annotation,
    Task3Annotation,
)

logger = logging.getLogger(__name__)

ScoreAnnotation = Union[Task1Annotation, Task2Annotation]

N_BINS = int((SCORE_MAX - SCORE_MIN) / HISTOGRAM_BIN_WIDTH)
BIN_EDGES = np.linspace(SCORE_MIN, SCORE_MAX, N_BINS + 1)
BIN_LABELS = [f"{edge:.1f}" for edge in BIN_EDGES[:-1]]

QUESTIONS = {
    EvalTask.CONVERSATION: TASK1_QUESTIONS,
    EvalTask.TRANSITION: TASK2_QUESTIONS,
}
ANNOTATION_TYPES = {
    EvalTask.CONVERSATION: Task1Annotation,
    EvalTask.TRANSITION: Task2Annotation,
}


def score_histogram(values: Sequence[float]) -> Dict[str, int]:
    """Counts per 0.5-wide bin over [1, 5], keyed by left edge; 5.0 falls in the last bin."""
    counts, _ = np.histogram(np.asarray(values, dtype=float), bins=BIN_EDGES)
    return {label: int(count) for label, count in zip(BIN_LABELS, counts)}


def _mean_or_none(values: Sequence[float]) -> Optional[float]:
    return float(np.mean(values)) if len(values) else None


def modal_index(indices: Sequence[int]) -> int:
    """Most frequent candidate index; ties go to the lowest index."""
    counts = Counter(indices)
    return max(sorted(counts), key=lambda index: (counts[index], -index))


def _distributions(item_means: Dict[str, Dict[str, float]], questions: Sequence[str]) -> Dict[str, Dict[str, int]]:
    return {q: score_histogram([means[q] for means in item_means.values()]) for q in questions}


def _question_means(item_means: Dict[str, Dict[str, float]], questions: Sequence[str]) -> Dict[str, Optional[float]]:
    return {q: _mean_or_none(sorted(means[q] for means in item_means.values())) for q in questions}


def aggregate_scores(annotations: Sequence[ScoreAnnotation], task: EvalTask | int) -> ScoreReport:
    """
    Per-item means, per-question corpus means and score distributions.

    Items without exactly three workers are excluded and listed in
    ``excluded``. For Task 2 the modal best candidate per dialogue is added.
    """
    task = EvalTask(task)
    if task not in QUESTIONS:
        raise PreconditionError(f"Score aggregation covers Tasks 1 and 2, got {int(task)}", invalid_fields=["task"])
    expected_type = ANNOTATION_TYPES[task]
    wrong = [a for a in annotations if not isinstance(a, expected_type)]
    if wrong:
        raise PreconditionError(
            f"Task {int(task)} aggregation got {len(wrong)} {type(wrong[0]).__name__} records",
            invalid_fields=["annotations"],
        )

    questions = QUESTIONS[task]
    by_item: Dict[str, List[ScoreAnnotation]] = defaultdict(list)
    for annotation in annotations:
        by_item[annotation.item_id].append(annotation)

    item_means: Dict[str, Dict[str, float]] = {}
    excluded: Dict[str, int] = {}
    best_candidate: Dict[str, int] = {}
    for item_id in sorted(by_item):
        records = by_item[item_id]
        if len(records) != WORKERS_PER_ITEM:
            excluded[item_id] = len(records)
            continue
        item_means[item_id] = {q: float(np.mean([r.scores()[q] for r in records])) for q in questions}
        if task == EvalTask.TRANSITION:
            best_candidate[item_id] = modal_index([r.best_candidate_index for r in records])

    if excluded:
        logger.warning(f"Excluded {len(excluded)} items without {WORKERS_PER_ITEM} workers: {sorted(excluded)}")

    return ScoreReport(
        task=int(task),
        n_records=len(annotations),
        item_means=item_means,
        question_means=_question_means(item_means, questions),
        distributions=_distributions(item_means, questions),
        excluded=excluded,
        best_candidate=best_candidate,
    )


def compare_provenance(report: ScoreReport, corpus: Sequence[Dialogue]) -> ProvenanceComparison:
    """Split a score report's items by the provenance of their dialogue."""
    provenance_of = {dialogue.id: dialogue.provenance for dialogue in corpus}
    questions = QUESTIONS[EvalTask(report.task)]

    grouped: Dict[Provenance, Dict[str, Dict[str, float]]] = {provenance: {} for provenance in Provenance}
    missing: List[str] = []
    for item_id, means in report.item_means.items():
        provenance = provenance_of.get(item_id)
        if provenance is None:
            missing.append(item_id)
            continue
        grouped[provenance][item_id] = means

    if missing:
        logger.warning(f"{len(missing)} annotated dialogues are not in the corpus")

    return ProvenanceComparison(
        groups={
            provenance: ProvenanceBreakdown(
                count=len(items),
                question_means=_question_means(items, questions),
                distributions=_distributions(items, questions),
            )
            for provenance, items in grouped.items()
        },
        missing=missing,
    )


def _deviation(values: Sequence[float], sample: bool) -> float:
    ddof = 1 if sample else 0
    if len(values) <= ddof:
        return 0.0
    return float(np.std(values, ddof=ddof))


def aggregate_ranks(
    annotations: Sequence[Task3Annotation],
    sample: bool = False,
    per_snippet: bool = False,
) -> RankReport:
    """
    Mean rank and standard deviation per detector.

    Args:
        annotations: Task 3 records
        sample: Sample (n-1) deviation instead of population
        per_snippet: Average each snippet's workers first, then aggregate the snippet means

    Returns:
        RankReport; means lie in [1, 3] (no detectors when there are no records)
    """
    snippet_ids = sorted({annotation.snippet_id for annotation in annotations})
    detectors: Dict[Detector, RankSummary] = {}
    for detector in Detector if annotations else ():
        if per_snippet:
            by_snippet: Dict[str, List[int]] = defaultdict(list)
            for annotation in annotations:
                by_snippet[annotation.snippet_id].append(annotation.rank_per_detector[detector])
            values = sorted(float(np.mean(by_snippet[snippet_id])) for snippet_id in snippet_ids)
        else:
            values = sorted(float(annotation.rank_per_detector[detector]) for annotation in annotations)
        detectors[detector] = RankSummary(mean=float(np.mean(values)), std=_deviation(values, sample))

    return RankReport(
        detectors=detectors,
        n_records=len(annotations),
        n_snippets=len(snippet_ids),
        deviation="sample" if sample else "population",
        unit="snippets" if per_snippet else "records",
    )


def render_rank_table(report: RankReport) -> str:
    """Detector / Avg Rank (std.) table."""
    lines = [
        f"# {report.deviation} deviation over {report.n_records} records ({report.n_snippets} snippets, per {report.unit})",
        f"{'Detector':<12}{'Avg Rank (std.)':>18}",
    ]
    for detector, summary in report.detectors.items():
        lines.append(f"{detector.value:<12}{f'{summary.mean:.2f} ({summary.std:.2f})':>18}")
    return "\n".join(lines)


def _format_mean(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.2f}"


def render_score_summary(report: ScoreReport, comparison: Optional[ProvenanceComparison] = None) -> str:
    """Per-question mean and item-mean histogram, optionally split by provenance."""
    lines = [f"Task {report.task}: {report.n_items} items, {report.n_records} records, {len(report.excluded)} excluded"]
    header = f"{'Question':<20}{'Mean':>6}  " + " ".join(f"{label:>4}" for label in BIN_LABELS)
    lines.append(header)
    for question, mean in report.question_means.items():
        counts = " ".join(f"{report.distributions[question][label]:>4}" for label in BIN_LABELS)
        lines.append(f"{question:<20}{_format_mean(mean):>6}  {counts}")

    if comparison is not None:
        for provenance, group in comparison.groups.items():
            lines.append("")
            lines.append(f"{provenance.value} ({group.count} items)")
            for question, mean in group.question_means.items():
                counts = " ".join(f"{group.distributions[question][label]:>4}" for label in BIN_LABELS)
                lines.append(f"{question:<20}{_format_mean(mean):>6}  {counts}")
        if comparison.missing:
            lines.append(f"{len(comparison.missing)} items not found in the corpus")
    return "\n".join(lines)
