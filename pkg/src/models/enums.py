"""
Enumeration types for the dialogue synthesis pipeline.

This module defines the enum types shared by the dialogue data model, the model
backends, the continuation strategies and the crowdsourcing toolkit.
"""

from enum import Enum, IntEnum


class Speaker(str, Enum):
    """Who produced a turn."""
    USER = "USER"
    SALES = "SALES"

    @property
    def other(self) -> "Speaker":
        return Speaker.SALES if self is Speaker.USER else Speaker.USER


class Phase(str, Enum):
    """Which part of the dialogue a turn belongs to."""
    CHITCHAT = "CHITCHAT"
    TRANSITION = "TRANSITION"
    TOD = "TOD"


class IntentName(str, Enum):
    """The six task-oriented intents, in declaration order (used for tie-breaking)."""
    FIND_MOVIES = "FindMovies"
    GET_TIMES_FOR_MOVIE = "GetTimesForMovie"
    FIND_ATTRACTIONS = "FindAttractions"
    LOOKUP_MUSIC = "LookupMusic"
    PLAY_SONG = "PlaySong"
    LOOKUP_SONG = "LookupSong"


class Provenance(str, Enum):
    """Which continuation strategy produced a dialogue's task-oriented part."""
    MERGE_SGD = "MERGE_SGD"
    SIMULATION = "SIMULATION"


class ContinuationMode(str, Enum):
    """Continuation strategy selection for a generation run."""
    MERGE_SGD = "MERGE_SGD"
    SIMULATION = "SIMULATION"
    MIXED = "MIXED"


class QALabel(str, Enum):
    """Binary answer of the yes/no QA intent detector."""
    YES = "yes"
    NO = "no"


class BackendKind(str, Enum):
    """Model contracts a backend can satisfy."""
    CHAT = "chat"
    QA = "qa"
    PARAPHRASE = "paraphrase"
    SEQ2SEQ = "seq2seq"


class BackendProvider(str, Enum):
    """Where a backend's outputs come from."""
    MOCK = "mock"
    REMOTE = "remote"
    ANTHROPIC = "anthropic"


class BackendRole(str, Enum):
    """Pipeline roles that each need one backend."""
    CHITCHAT = "chitchat"
    QA = "qa"
    PARAPHRASE = "paraphrase"
    TRANSITION = "transition"
    TOD_USER = "tod_user"
    TOD_SALES = "tod_sales"


class TerminationKind(str, Enum):
    """Why simulator self-play stopped, in priority order."""
    KEYWORD = "KEYWORD"
    END_TOKEN = "END_TOKEN"
    REPETITION = "REPETITION"
    MAX_TURNS = "MAX_TURNS"


class RepetitionRule(str, Enum):
    """How repeated utterances are recognized."""
    EXACT_SAME_SPEAKER = "EXACT_SAME_SPEAKER"


class DiscardReason(str, Enum):
    """Why a dialogue attempt was not written to the corpus."""
    NO_INTENT = "NO_INTENT"
    SELFCHAT_FAILED = "SELFCHAT_FAILED"
    TRANSITION_FAILED = "TRANSITION_FAILED"
    CONTINUATION_FAILED = "CONTINUATION_FAILED"
    EMPTY_BUCKET = "EMPTY_BUCKET"
    INVALID_DIALOGUE = "INVALID_DIALOGUE"


class TransitionDataMix(str, Enum):
    """Which triples feed the transition model's training data."""
    TEMPLATE = "template"
    OTTERS = "otters"
    BOTH = "both"


class EvalTask(IntEnum):
    """Crowdsourcing tasks."""
    CONVERSATION = 1
    TRANSITION = 2
    IMPLICIT_INTENT = 3


class Detector(str, Enum):
    """The three intent detectors compared in the implicit-intent task."""
    DETECTOR1 = "Detector1"
    DETECTOR2 = "Detector2"
    DETECTOR3 = "Detector3"
