"""
Crowdsourcing exports.

Each task is written as a UTF-8 CSV (one row per item, RFC-4180 quoting)
plus a ``<file>.instructions.txt`` holding the worker guidelines.

Columns:
    Task 1: dialogue_id, dialogue
    Task 2: dialogue_id, dialogue, transition, candidate_1 .. candidate_5
    Task 3: snippet_id, dialogue_id, snippet, detector1 .. detector3
"""

import csv
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Union

from src.backends.base import QABackend
from src.evaluation.guidelines import guideline_for
from src.exceptions import ExportError
from src.intent.detector import detect_intent_all
from src.models.constants import DEFAULT_DETECTION_THRESHOLD, DEFAULT_TRANSITION_CANDIDATES, NONE_INTENT
from src.models.enums import Detector, EvalTask, Phase, Speaker
from src.models.types import Dialogue, IntentQuestionSet, Task3Snippet, Turn

logger = logging.getLogger(__name__)

SPEAKER_LABELS = {Speaker.SALES: "Sales", Speaker.USER: "User"}
TRANSITION_MARK = " - [Transition]"

TASK1_COLUMNS = ["dialogue_id", "dialogue"]
TASK2_COLUMNS = ["dialogue_id", "dialogue", "transition"] + [
    f"candidate_{i + 1}" for i in range(DEFAULT_TRANSITION_CANDIDATES)
]
TASK3_COLUMNS = ["snippet_id", "dialogue_id", "snippet"] + [detector.value.lower() for detector in Detector]

COLUMNS: Dict[EvalTask, List[str]] = {
    EvalTask.CONVERSATION: TASK1_COLUMNS,
    EvalTask.TRANSITION: TASK2_COLUMNS,
    EvalTask.IMPLICIT_INTENT: TASK3_COLUMNS,
}


def render_turns(turns: Sequence[Turn], highlight_transition: bool = False) -> str:
    lines = []
    for turn in turns:
        line = f"{SPEAKER_LABELS[turn.speaker]}: {turn.text}"
        if highlight_transition and turn.phase == Phase.TRANSITION:
            line += TRANSITION_MARK
        lines.append(line)
    return "\n".join(lines)


def render_intents(intents: Sequence[str]) -> str:
    """Bracketed intent list; an empty detection reads "[None]"."""
    names = [name for name in intents if name != NONE_INTENT]
    return f"[{', '.join(names)}]" if names else "[None]"


def instructions_path(out_path: str | Path) -> Path:
    out_path = Path(out_path)
    return out_path.with_name(out_path.stem + ".instructions.txt")


def _task1_row(dialogue: Dialogue) -> Dict[str, str]:
    return {"dialogue_id": dialogue.id, "dialogue": render_turns(dialogue.turns)}


def _task2_row(dialogue: Dialogue) -> Dict[str, str]:
    index = dialogue.transition_index
    row = {
        "dialogue_id": dialogue.id,
        "dialogue": render_turns(dialogue.turns, highlight_transition=True),
        "transition": dialogue.turns[index].text if index is not None else "",
    }
    for i, candidate in enumerate(dialogue.transition_candidates):
        row[f"candidate_{i + 1}"] = candidate
    return row


def _task3_row(snippet: Task3Snippet) -> Dict[str, str]:
    row = {
        "snippet_id": snippet.snippet_id,
        "dialogue_id": snippet.dialogue_id,
        "snippet": render_turns(snippet.turns),
    }
    for detector in Detector:
        row[detector.value.lower()] = render_intents(snippet.detector_intents[detector])
    return row


def _check_prerequisites(items: Sequence[Union[Dialogue, Task3Snippet]], task: EvalTask) -> None:
    if task == EvalTask.IMPLICIT_INTENT:
        offending = [
            item.snippet_id if isinstance(item, Task3Snippet) else item.id
            for item in items
            if not isinstance(item, Task3Snippet) or set(item.detector_intents) != set(Detector)
        ]
        if offending:
            raise ExportError(f"Task 3 needs detector outputs for every snippet; missing for {offending}", offending)
        return

    offending = [item.snippet_id for item in items if isinstance(item, Task3Snippet)]
    if offending:
        raise ExportError(f"Task {int(task)} exports whole dialogues, got snippets {offending}", offending)
    if task == EvalTask.TRANSITION:
        offending = [
            item.id for item in items
            if len(item.transition_candidates) != DEFAULT_TRANSITION_CANDIDATES or item.transition_index is None
        ]
        if offending:
            raise ExportError(
                f"Task 2 needs a transition and {DEFAULT_TRANSITION_CANDIDATES} candidates; missing for {offending}",
                offending,
            )


def export_amt(
    items: Sequence[Union[Dialogue, Task3Snippet]],
    task: EvalTask | int,
    out_path: str | Path,
) -> int:
    """
    Write one crowdsourcing row per item plus the instructions file.

    Args:
        items: Dialogues (Tasks 1 and 2) or snippets with detector outputs (Task 3)
        task: 1, 2 or 3
        out_path: CSV path; instructions go to ``<stem>.instructions.txt``

    Returns:
        Number of rows written

    Raises:
        ExportError: An item lacks what the task shows (candidates, detector outputs)
    """
    task = EvalTask(task)
    _check_prerequisites(items, task)

    row_builders = {
        EvalTask.CONVERSATION: _task1_row,
        EvalTask.TRANSITION: _task2_row,
        EvalTask.IMPLICIT_INTENT: _task3_row,
    }
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=COLUMNS[task])
        writer.writeheader()
        for item in items:
            writer.writerow(row_builders[task](item))

    instructions_path(out_path).write_text(guideline_for(task), encoding="utf-8")
    logger.info(f"Exported {len(items)} Task {int(task)} rows to {out_path}")
    return len(items)


async def build_task3_snippets(
    corpus: Sequence[Dialogue],
    detectors: Mapping[Detector, QABackend],
    catalog: Sequence[IntentQuestionSet],
    threshold: float = DEFAULT_DETECTION_THRESHOLD,
) -> List[Task3Snippet]:
    """
    Cut every dialogue after each USER chit-chat turn and attach each detector's intents.

    Snippet ids are ``<dialogue_id>-t<turn_index>``.
    """
    missing = [detector.value for detector in Detector if detector not in detectors]
    if missing:
        raise ExportError(f"No backend for detectors {missing}")

    snippets: List[Task3Snippet] = []
    for dialogue in corpus:
        for index, turn in enumerate(dialogue.turns):
            if turn.speaker != Speaker.USER or turn.phase != Phase.CHITCHAT:
                continue
            prefix = dialogue.turns[: index + 1]
            detector_intents = {}
            for detector in Detector:
                results = await detect_intent_all(prefix, catalog, detectors[detector], threshold)
                detector_intents[detector] = tuple(result.intent.name for result in results)
            snippets.append(
                Task3Snippet(
                    snippet_id=f"{dialogue.id}-t{index}",
                    dialogue_id=dialogue.id,
                    turns=prefix,
                    detector_intents=detector_intents,
                )
            )
    logger.info(f"Built {len(snippets)} snippets from {len(corpus)} dialogues")
    return snippets
