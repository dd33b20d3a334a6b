"""Sample data and scripted backends shared by the tests."""

import random
from typing import Any, Dict, List, Optional, Sequence, Set

from src.models.constants import INTENT_ORDER
from src.models.enums import Phase, Provenance, Speaker
from src.models.types import DecodingConfig, Dialogue, IntentLabel, Turn

MOVIE_PAST = "I like to read a lot. I also like to go to the movies. What about yourself?"
MOVIE_FUTURE = "I'm looking for a movie to watch. A regular showing would be fine."
MOVIE_TEMPLATE = "Do you want to find movies to watch?"
MOVIE_REGENERATED = "Are you interested in watching any movie?"

MUSIC_REQUEST = "I'm in the mood for some music. Can you find songs from the album Camila."
MUSIC_SUGGESTION = "What about the song [song_name] from the album [album] by [artist]?"


def turn(speaker: Speaker, text: str, phase: Phase = Phase.CHITCHAT, **meta) -> Turn:
    return Turn(speaker=speaker, text=text, phase=phase, meta=meta)


def transition_context(past: str = MOVIE_PAST, template: str = MOVIE_TEMPLATE) -> List[Turn]:
    """Chit-chat ending on a USER turn followed by the SALES transition."""
    return [
        turn(Speaker.SALES, "Hello, what is your hobby?"),
        turn(Speaker.USER, past),
        turn(Speaker.SALES, template, Phase.TRANSITION),
    ]


# ============================================================================
# Scripted backends
# ============================================================================

class SeedTriggeredChat:
    """
    Chat backend whose USER lines mention the movies only for chosen seeds.

    Controls exactly which dialogue attempts surface an intent.
    """

    def __init__(self, trigger_seeds: Set[int], name: str = "seed-triggered"):
        self.name = name
        self.trigger_seeds = set(trigger_seeds)

    async def chat_reply(self, context: Sequence[Turn], persona: Sequence[str], config: DecodingConfig) -> str:
        speaker = context[-1].speaker.other if context else Speaker.SALES
        if speaker == Speaker.SALES:
            return f"Sales line {len(context)}."
        if config.seed in self.trigger_seeds:
            return MOVIE_PAST
        return f"I spent the afternoon at home, part {len(context)}."


class FailingChat:
    """Succeeds ``fail_after`` times, then raises."""
    name = "failing-chat"

    def __init__(self, fail_after: int = 0):
        self.fail_after = fail_after
        self.calls = 0

    async def chat_reply(self, context, persona, config) -> str:
        self.calls += 1
        if self.calls > self.fail_after:
            raise RuntimeError("backend down")
        return f"line {self.calls}"


class ConstantChat:
    def __init__(self, text: str, name: str = "constant-chat"):
        self.name = name
        self.text = text

    async def chat_reply(self, context, persona, config) -> str:
        return self.text


class CountingChat:
    """Never repeats itself and never says a keyword."""
    name = "counting-chat"

    async def chat_reply(self, context, persona, config) -> str:
        return f"Turn number {len(context)} here."


class RecordingQA:
    """Answers from a (context substring, question) -> answer table and records every call."""

    def __init__(self, table: Dict[tuple, tuple], name: str = "recording-qa"):
        from src.models.types import QAAnswer
        self.name = name
        self.table = {key: QAAnswer(label=label, confidence=confidence) for key, (label, confidence) in table.items()}
        self.calls: List[tuple] = []

    async def answer_question(self, context_text: str, question: str):
        from src.models.enums import QALabel
        from src.models.types import QAAnswer
        self.calls.append((context_text, question))
        for (substring, asked), answer in self.table.items():
            if substring in context_text and asked == question:
                return answer
        return QAAnswer(label=QALabel.NO, confidence=0.1)


# ============================================================================
# Random dialogues
# ============================================================================

WORDS = ["movie", "café", "naïve", "日本語", "🎬", "Ünïcödé", "tonight", "[song_name]", "\"quoted\"", "back\\slash", "ok"]
SPACES = [" ", "  ", "\t", " \n "]


def random_text(rng: random.Random) -> str:
    words = [rng.choice(WORDS) for _ in range(rng.randint(1, 6))]
    text = words[0]
    for word in words[1:]:
        text += rng.choice(SPACES) + word
    return rng.choice(["", " "]) + text + rng.choice(["", "\t"])


def random_meta(rng: random.Random) -> Dict[str, Any]:
    values = [None, True, 7, -3, 0.25, "x", "ü", [1, "two", None], {"nested": {"deep": [0.5]}}]
    return {f"key_{i}": rng.choice(values) for i in range(rng.randint(0, 3))}


def random_dialogue(rng: random.Random, dialogue_id: str) -> Dialogue:
    """A valid dialogue with random lengths, intent, candidates, meta and text."""
    with_intent = rng.random() < 0.8
    n_chitchat = rng.choice([2, 4, 6, 8]) if with_intent else rng.randint(1, 8)
    speakers = [Speaker.SALES, Speaker.USER]

    turns = [
        Turn(speaker=speakers[i % 2], text=random_text(rng), phase=Phase.CHITCHAT, meta=random_meta(rng))
        for i in range(n_chitchat)
    ]
    intent = None
    candidates: tuple = ()
    if with_intent:
        ontology = rng.choice([None, "Find movies by genre and optionally director"])
        intent = IntentLabel.from_name(rng.choice(INTENT_ORDER), ontology_description=ontology)
        transition_text = " ".join(rng.choice(WORDS) for _ in range(3)) + "?"
        if rng.random() < 0.5:
            candidates = tuple(f"candidate {i} {rng.choice(WORDS)}" for i in range(4))
            position = rng.randint(0, 4)
            candidates = candidates[:position] + (transition_text,) + candidates[position:]
        turns.append(Turn(speaker=Speaker.SALES, text=transition_text, phase=Phase.TRANSITION))
        for i in range(rng.randint(0, 6)):
            turns.append(Turn(speaker=speakers[(i + 1) % 2], text=random_text(rng), phase=Phase.TOD, meta=random_meta(rng)))

    return Dialogue(
        id=dialogue_id,
        seed=rng.randrange(2**63),
        provenance=rng.choice(list(Provenance)),
        intent=intent,
        transition_candidates=candidates,
        turns=tuple(turns),
    )



# ============================================================================
# SGD sample records
# ============================================================================

def sgd_turn(speaker: str, utterance: str, intent: Optional[str] = None, slots: Optional[List[Dict]] = None) -> Dict:
    frame: Dict = {"service": "Media_1", "slots": slots or []}
    if speaker == "USER":
        frame["state"] = {"active_intent": intent or "NONE", "requested_slots": [], "slot_values": {}}
    return {"speaker": speaker, "utterance": utterance, "frames": [frame]}


SGD_DIALOGUES = [
    {
        "dialogue_id": "1_00001",
        "services": ["Music_1"],
        "turns": [
            sgd_turn("USER", MUSIC_REQUEST, "LookupMusic"),
            sgd_turn("SYSTEM", MUSIC_SUGGESTION),
            sgd_turn("USER", "I'm not in the mood for that one, do you have a different song?", "LookupMusic"),
            sgd_turn("SYSTEM", MUSIC_SUGGESTION),
            sgd_turn("USER", "No, that is all. Thank you for your time.", "LookupMusic"),
            sgd_turn("SYSTEM", "Enjoy your music. Have a wonderful day."),
        ],
    },
    {
        "dialogue_id": "1_00002",
        "services": ["Movies_1"],
        "turns": [
            sgd_turn("SYSTEM", "Welcome back."),
            sgd_turn("USER", MOVIE_FUTURE, "FindMovies"),
            sgd_turn("SYSTEM", "I found [count] movies. How about [movie_name]?"),
            sgd_turn("USER", "That sounds great, thanks.", "FindMovies"),
        ],
    },
    {
        "dialogue_id": "1_00003",
        "services": ["Music_2"],
        "turns": [
            sgd_turn("USER", "Play Hello by Adele", "PlaySong", slots=[
                {"slot": "song_name", "start": 5, "exclusive_end": 10},
                {"slot": "artist", "start": 14, "exclusive_end": 19},
            ]),
            sgd_turn("SYSTEM", "Playing it now."),
        ],
    },
    {
        "dialogue_id": "1_00004",
        "services": ["Banks_1"],
        "turns": [
            sgd_turn("USER", "Check my balance please.", "CheckBalance"),
            sgd_turn("SYSTEM", "Your balance is [balance]."),
        ],
    },
]

SGD_SCHEMA = [
    {
        "service_name": "Movies_1",
        "intents": [{"name": "FindMovies", "description": "Find movies by genre and optionally director"}],
    },
    {
        "service_name": "Banks_1",
        "intents": [{"name": "CheckBalance", "description": "Check the balance of an account"}],
    },
]
