"""Shared fixtures: dialogue samples and temporary corpora."""

import json
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import pytest

from fakes import MOVIE_FUTURE, MOVIE_PAST, MOVIE_TEMPLATE, SGD_DIALOGUES, SGD_SCHEMA, turn
from src.models.enums import Phase, Provenance, Speaker
from src.models.types import Dialogue, IntentLabel


@pytest.fixture
def make_dialogue():
    """Build a dialogue from (speaker, text, phase) triples."""

    def _make(
        rows: Sequence[tuple],
        dialogue_id: str = "d-1",
        intent: Optional[str] = "FindMovies",
        provenance: Provenance = Provenance.MERGE_SGD,
        candidates: Sequence[str] = (),
        seed: int = 0,
    ) -> Dialogue:
        return Dialogue(
            id=dialogue_id,
            seed=seed,
            provenance=provenance,
            intent=IntentLabel.from_name(intent) if intent else None,
            transition_candidates=tuple(candidates),
            turns=tuple(turn(speaker, text, phase) for speaker, text, phase in rows),
        )

    return _make


@pytest.fixture
def movies_dialogue(make_dialogue) -> Dialogue:
    return make_dialogue([
        (Speaker.SALES, "Hello, what is your hobby?", Phase.CHITCHAT),
        (Speaker.USER, MOVIE_PAST, Phase.CHITCHAT),
        (Speaker.SALES, MOVIE_TEMPLATE, Phase.TRANSITION),
        (Speaker.USER, MOVIE_FUTURE, Phase.TOD),
        (Speaker.SALES, "What genre are you in the mood for?", Phase.TOD),
    ], dialogue_id="movies-1")


@pytest.fixture
def linear_dialogues(make_dialogue):
    """Valid alternating dialogues of the given lengths (2 chit-chat turns, the transition, then TOD)."""

    def _make(
        lengths: Iterable[int],
        intent: str = "FindMovies",
        provenance: Provenance = Provenance.MERGE_SGD,
        prefix: str = "d",
    ) -> List[Dialogue]:
        dialogues = []
        for n, length in enumerate(lengths):
            rows = []
            for i in range(length):
                speaker = Speaker.SALES if i % 2 == 0 else Speaker.USER
                phase = Phase.CHITCHAT if i < 2 else (Phase.TRANSITION if i == 2 else Phase.TOD)
                rows.append((speaker, f"utterance {i} of {prefix}-{n}", phase))
            dialogues.append(make_dialogue(rows, dialogue_id=f"{prefix}-{n}", intent=intent, provenance=provenance))
        return dialogues

    return _make


@pytest.fixture
def sgd_dir(tmp_path: Path) -> Path:
    root = tmp_path / "sgd" / "train"
    root.mkdir(parents=True)
    (root / "dialogues_001.json").write_text(json.dumps(SGD_DIALOGUES), encoding="utf-8")
    (root / "schema.json").write_text(json.dumps(SGD_SCHEMA), encoding="utf-8")
    return tmp_path / "sgd"


@pytest.fixture
def otters_file(tmp_path: Path) -> Path:
    rows = ["first_turn\tintermediate_turn\tsecond_turn\tid"]
    for i in range(8):
        rows.append(f"I love dogs {i}.\tDogs love parks, and so do I.\tI walk in the park {i}.\tok-{i}")
    rows.append("I love cats.\t\tI like the sea.\tbad-1")
    rows.append("Only one column\t\t\tbad-2")
    path = tmp_path / "otters.tsv"
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return path
