"""
Corpus statistics.

Counts and average lengths grouped by intent and by provenance. Lengths are
counted in turns (one utterance each); averages keep full precision and are
only rounded by ``render_stats_table``.
"""

from collections import defaultdict
from typing import Dict, List, Sequence

import numpy as np

from src.models.constants import INTENT_ORDER
from src.models.enums import Phase, Provenance
from src.models.types import CorpusStats, Dialogue, GroupStats

_PROVENANCE_LABELS = {
    Provenance.MERGE_SGD.value: "Merge SGD",
    Provenance.SIMULATION.value: "TOD Simulation",
}


def _group_stats(dialogues: Sequence[Dialogue]) -> GroupStats:
    if not dialogues:
        return GroupStats(count=0)
    lengths = np.array([len(dialogue.turns) for dialogue in dialogues])
    chitchat = np.array([len(dialogue.turns_in_phase(Phase.CHITCHAT)) for dialogue in dialogues])
    return GroupStats(
        count=len(dialogues),
        average_length=float(np.mean(lengths)),
        min_length=int(np.min(lengths)),
        max_length=int(np.max(lengths)),
        average_chitchat_length=float(np.mean(chitchat)),
    )


def compute_stats(corpus: Sequence[Dialogue]) -> CorpusStats:
    """
    Compute per-intent, per-provenance and total statistics.

    An empty corpus yields zero counts with absent averages.
    """
    by_intent: Dict[str, List[Dialogue]] = defaultdict(list)
    by_provenance: Dict[str, List[Dialogue]] = {provenance.value: [] for provenance in Provenance}

    for dialogue in corpus:
        if dialogue.intent is not None:
            by_intent[dialogue.intent.name].append(dialogue)
        by_provenance[dialogue.provenance.value].append(dialogue)

    intent_names = list(INTENT_ORDER)
    intent_names += sorted(name for name in by_intent if name not in INTENT_ORDER)

    return CorpusStats(
        per_intent={name: _group_stats(by_intent.get(name, [])) for name in intent_names},
        per_provenance={name: _group_stats(group) for name, group in by_provenance.items()},
        total=_group_stats(list(corpus)),
    )


def _format_average(value: float | None) -> str:
    return "-" if value is None else f"{value:.0f}"


def render_stats_table(stats: CorpusStats) -> str:
    """Plain-text table: intent rows, provenance rows, then the total."""
    rows = [("Intent", "#Dialogues", "Avg Length")]
    intent_rows = [(name, f"{group.count:,}", _format_average(group.average_length))
                   for name, group in stats.per_intent.items()]
    provenance_rows = [(_PROVENANCE_LABELS.get(name, name), f"{group.count:,}", _format_average(group.average_length))
                       for name, group in stats.per_provenance.items()]
    total_row = [("Total", f"{stats.total.count:,}", _format_average(stats.total.average_length))]

    widths = [max(len(row[column]) for row in rows + intent_rows + provenance_rows + total_row) for column in range(3)]

    def fmt(row) -> str:
        return f"{row[0]:<{widths[0]}}  {row[1]:>{widths[1]}}  {row[2]:>{widths[2]}}"

    rule = "-" * (sum(widths) + 4)
    lines = [fmt(rows[0]), rule]
    lines += [fmt(row) for row in intent_rows]
    lines.append(rule)
    lines += [fmt(row) for row in provenance_rows]
    lines.append(rule)
    lines += [fmt(row) for row in total_row]
    return "\n".join(lines)
