"""
Deterministic mock backends.

Mocks are referentially transparent: outputs are pure functions of the call
arguments (including the decoding seed), so whole pipeline runs are
reproducible without any model. Each mock can be customized through a JSON
script file referenced by ``BackendDescriptor.mock_script``.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from src.backends.base import check_chat_args, check_paraphrase_args, check_qa_args, check_seq2seq_args
from src.exceptions import ConfigError
from src.models.constants import BASE_QUESTIONS
from src.models.enums import IntentName, Phase, QALabel, Speaker
from src.models.types import DecodingConfig, QAAnswer, Turn
from src.utils.seeding import stable_hash
from src.utils.text import lower_first, normalize_for_compare

logger = logging.getLogger(__name__)

# Intent-bearing chit-chat lines and the intent each one implies
INTENT_TRIGGERS: Dict[IntentName, str] = {
    IntentName.FIND_MOVIES: "go to the movies",
    IntentName.GET_TIMES_FOR_MOVIE: "what time the new movie starts",
    IntentName.FIND_ATTRACTIONS: "visit a museum",
    IntentName.LOOKUP_MUSIC: "new music to listen to",
    IntentName.PLAY_SONG: "play my favorite song",
    IntentName.LOOKUP_SONG: "find some good songs",
}

DEFAULT_USER_BANK: List[str] = [
    "I like to read a lot. I also like to go to the movies. What about yourself?",
    "I just got back from work, it was a long day.",
    "I wonder what time the new movie starts tonight.",
    "I have two dogs and they keep me busy.",
    "This weekend I want to visit a museum downtown.",
    "I am always looking for new music to listen to.",
    "I mostly cook at home, I love italian food.",
    "When I am sad I play my favorite song on repeat.",
    "I should find some good songs for my road trip.",
    "I am a teacher, so summers are pretty relaxed for me.",
]

DEFAULT_SALES_BANK: List[str] = [
    "Hi! How are you doing today?",
    "That sounds nice. What do you do for fun?",
    "I love hearing that. Tell me more about it.",
    "I work in sales, so I talk to a lot of people.",
    "Oh cool, I have never tried that.",
    "Do you have any plans for the weekend?",
    "That is interesting. I like hiking when I have time.",
    "What kind of things do you enjoy the most?",
]

DEFAULT_TOD_USER_BANK: List[str] = [
    "I'm looking for a movie to watch. A regular showing would be fine.",
    "Can you find something in [location]?",
    "That works for me.",
    "Yes, please go ahead.",
    "No, that's all. Thank you, bye!",
]

DEFAULT_TOD_SALES_BANK: List[str] = [
    "What genre are you in the mood for?",
    "I found [count] options. How about [title]?",
    "Please confirm: [title] at [theater_name].",
    "Is there anything else I can help you with?",
    "Enjoy your day. Goodbye!",
]

DEFAULT_TRANSITION_BANK: List[str] = [
    "Are you interested in watching any movie?",
    "Would you like me to help you with that?",
    "Do you want me to look that up for you?",
    "I can help you with that if you like.",
    "That sounds fun. Should I find some options for you?",
    "Would you like some recommendations?",
    "Can I help you plan that?",
    "Shall I search for something for you?",
]

DEFAULT_SYNONYMS: Dict[str, List[str]] = {
    "Is the user asking about": [
        "Is the user inquiring about",
        "Does the user want help with",
        "Is the user interested in",
    ],
    "finding": ["searching for", "looking for"],
    "looking up": ["searching for", "checking out"],
    "getting": ["finding out"],
    "playing": ["listening to"],
}

_REPHRASE_SUFFIXES = ("in other words", "put differently", "to rephrase")


def load_mock_script(path: Optional[str]) -> Dict[str, Any]:
    """Read a mock script JSON object; no path means no customization."""
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read mock script {path}: {e}", key_path="mock_script") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Mock script {path} must be a JSON object", key_path="mock_script")
    return data


def _next_speaker(context: Sequence[Turn]) -> Speaker:
    return context[-1].speaker.other if context else Speaker.SALES


def _current_phase_turns(context: Sequence[Turn]) -> List[Turn]:
    """Turns of the segment the next reply belongs to (chit-chat or task part)."""
    if any(turn.phase != Phase.CHITCHAT for turn in context):
        return [turn for turn in context if turn.phase == Phase.TOD]
    return list(context)


class MockChat:
    """
    Chat mock with two modes.

    Bank mode picks from a per-speaker utterance bank with
    ``(hash(persona, last two utterances) + seed) mod len(bank)``, so distinct
    seeds on the same context pick distinct lines. Scripted mode returns the
    k-th scripted line of the next speaker, where k counts that speaker's
    earlier turns in the current segment; the last line repeats once the
    script runs out.
    """

    def __init__(
        self,
        name: str = "mock-chat",
        user_bank: Optional[Sequence[str]] = None,
        sales_bank: Optional[Sequence[str]] = None,
        script: Optional[Mapping[str, Sequence[str]]] = None,
    ):
        self.name = name
        self.banks = {
            Speaker.USER: list(user_bank or DEFAULT_USER_BANK),
            Speaker.SALES: list(sales_bank or DEFAULT_SALES_BANK),
        }
        self.script = {Speaker(speaker): list(lines) for speaker, lines in (script or {}).items()}

    @classmethod
    def from_script(cls, name: str, data: Dict[str, Any], user_bank=None, sales_bank=None) -> "MockChat":
        return cls(
            name=name,
            user_bank=data.get("user_bank") or user_bank,
            sales_bank=data.get("sales_bank") or sales_bank,
            script=data.get("script"),
        )

    async def chat_reply(self, context: Sequence[Turn], persona: Sequence[str], config: DecodingConfig) -> str:
        check_chat_args(context, persona)
        speaker = _next_speaker(context)

        lines = self.script.get(speaker)
        if lines:
            spoken = sum(1 for turn in _current_phase_turns(context) if turn.speaker == speaker)
            return lines[min(spoken, len(lines) - 1)]

        bank = self.banks[speaker]
        recent = [turn.text for turn in context[-2:]]
        index = (stable_hash(*persona, *recent) + config.seed) % len(bank)
        return bank[index]


class QARule(BaseModel):
    """Scripted answer for contexts containing ``substring`` (question None matches any)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    substring: str
    question: Optional[str] = None
    label: QALabel = QALabel.YES
    confidence: float = Field(default=0.9, ge=0.0, le=1.0)

    def matches(self, context_text: str, question: str) -> bool:
        if normalize_for_compare(self.substring) not in normalize_for_compare(context_text):
            return False
        return self.question is None or normalize_for_compare(self.question) == normalize_for_compare(question)


def default_qa_rules() -> List[QARule]:
    """One YES rule per built-in intent: its trigger phrase against its base question."""
    return [
        QARule(substring=trigger, question=BASE_QUESTIONS[intent], confidence=0.9)
        for intent, trigger in INTENT_TRIGGERS.items()
    ]


class MockQA:
    """Answers from an ordered rule table; the first matching rule wins, else (NO, 0.5)."""

    DEFAULT_ANSWER = QAAnswer(label=QALabel.NO, confidence=0.5)

    def __init__(self, name: str = "mock-qa", rules: Optional[Sequence[QARule]] = None):
        self.name = name
        self.rules = list(default_qa_rules() if rules is None else rules)

    @classmethod
    def from_script(cls, name: str, data: Dict[str, Any]) -> "MockQA":
        rules = data.get("rules")
        return cls(name=name, rules=None if rules is None else [QARule.model_validate(rule) for rule in rules])

    async def answer_question(self, context_text: str, question: str) -> QAAnswer:
        check_qa_args(context_text, question)
        for rule in self.rules:
            if rule.matches(context_text, question):
                return QAAnswer(label=rule.label, confidence=rule.confidence)
        return self.DEFAULT_ANSWER


class MockParaphrase:
    """
    Rewrites questions with a synonym table and clause reordering.

    Candidate rewrites are produced in a fixed order (single substitutions,
    the reordered clause, then substitutions chained on earlier rewrites,
    then suffixed forms) and the first ``n`` distinct ones are returned.
    """

    def __init__(self, name: str = "mock-paraphrase", synonyms: Optional[Mapping[str, Sequence[str]]] = None):
        self.name = name
        self.synonyms = {phrase: list(alternatives) for phrase, alternatives in (synonyms or DEFAULT_SYNONYMS).items()}

    @classmethod
    def from_script(cls, name: str, data: Dict[str, Any]) -> "MockParaphrase":
        return cls(name=name, synonyms=data.get("synonyms"))

    def _substitutions(self, text: str) -> List[str]:
        variants = []
        for phrase, alternatives in self.synonyms.items():
            if phrase in text:
                variants.extend(text.replace(phrase, alternative, 1) for alternative in alternatives)
        return variants

    @staticmethod
    def _reorder(text: str) -> Optional[str]:
        body = text.rstrip("?").rstrip()
        if " about " not in body:
            return None
        head, tail = body.split(" about ", 1)
        return f"About {tail}, {lower_first(head)}?"

    def _candidates(self, question: str) -> List[str]:
        first = self._substitutions(question)
        reordered = self._reorder(question)
        if reordered:
            first.append(reordered)
        chained = [variant for rewrite in first for variant in self._substitutions(rewrite)]
        body = question.rstrip("?").rstrip()
        suffixed = [f"{body}, {suffix}?" for suffix in _REPHRASE_SUFFIXES]
        return first + chained + suffixed

    async def paraphrase(self, question: str, n: int) -> List[str]:
        check_paraphrase_args(question, n)
        seen = {normalize_for_compare(question)}
        results: List[str] = []
        for candidate in self._candidates(question):
            key = normalize_for_compare(candidate)
            if key in seen:
                continue
            seen.add(key)
            results.append(candidate)
            if len(results) == n:
                return results

        body = question.rstrip("?").rstrip()
        counter = 1
        while len(results) < n:
            candidate = f"{body}, variant {counter}?"
            counter += 1
            if normalize_for_compare(candidate) not in seen:
                seen.add(normalize_for_compare(candidate))
                results.append(candidate)
        return results


class MockSeq2Seq:
    """Picks ``bank[(hash(source) + seed) mod len(bank)]``."""

    def __init__(self, name: str = "mock-seq2seq", bank: Optional[Sequence[str]] = None):
        self.name = name
        self.bank = list(bank or DEFAULT_TRANSITION_BANK)

    @classmethod
    def from_script(cls, name: str, data: Dict[str, Any]) -> "MockSeq2Seq":
        return cls(name=name, bank=data.get("bank"))

    async def seq2seq_generate(self, source: str, config: DecodingConfig) -> str:
        check_seq2seq_args(source)
        return self.bank[(stable_hash(source) + config.seed) % len(self.bank)]
