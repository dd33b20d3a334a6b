"""
Shared constants for the dialogue synthesis pipeline.

This module contains the intent ontology, the canonical detection questions,
decoding and trainer defaults, and the string literals of the wire and file
formats so they stay consistent across modules.
"""

from typing import Dict, Any

from .enums import IntentName

PACKAGE_VERSION = "0.1.0"

# HTTP Header Values
CONTENT_TYPE_JSON = "application/json"
ACCEPT_JSON = "application/json"

# Remote inference
INFERENCE_ENDPOINT = "/generate"
TASK_CHAT = "chat"
TASK_QA = "qa"
TASK_PARAPHRASE = "paraphrase"
TASK_SEQ2SEQ = "seq2seq"

# Intent descriptions, in declaration order
INTENT_DESCRIPTIONS: Dict[IntentName, str] = {
    IntentName.FIND_MOVIES: "find movies to watch",
    IntentName.GET_TIMES_FOR_MOVIE: "obtain the available time for watching a movie",
    IntentName.FIND_ATTRACTIONS: "find attractions to visit",
    IntentName.LOOKUP_MUSIC: "find music to listen to",
    IntentName.PLAY_SONG: "play songs",
    IntentName.LOOKUP_SONG: "find songs to listen to",
}

# Hand-written detection questions; generated questions only cover new intents
BASE_QUESTIONS: Dict[IntentName, str] = {
    IntentName.FIND_MOVIES: "Is the user asking about finding movies?",
    IntentName.GET_TIMES_FOR_MOVIE: "Is the user asking about getting the time for movies?",
    IntentName.FIND_ATTRACTIONS: "Is the user asking about finding attractions?",
    IntentName.LOOKUP_MUSIC: "Is the user asking about looking up music?",
    IntentName.PLAY_SONG: "Is the user asking about playing songs?",
    IntentName.LOOKUP_SONG: "Is the user asking about looking up songs?",
}

INTENT_ORDER = [intent.value for intent in IntentName]

# Decoding defaults
TRANSITION_TOP_K = 80
TRANSITION_TOP_P = 0.95
SIMULATOR_TOP_K = 120
DEFAULT_TOP_K = 50
DEFAULT_TOP_P = 1.0
DEFAULT_MAX_NEW_TOKENS = 64

# Trainer defaults exported beside training data (the models are trained elsewhere)
QA_TRAINER_DEFAULTS: Dict[str, Any] = {
    "base_model": "distilbert-base-cased-distilled-squad",
    "learning_rate": 3e-5,
    "batch_size": 64,
    "epochs": 20,
    "optimizer": "AdamW",
}
TRANSITION_TRAINER_DEFAULTS: Dict[str, Any] = {
    "base_model": "t5-small",
    "learning_rate": 5e-5,
    "batch_size": 16,
    "epochs": 5,
    "optimizer": "Adafactor",
    "model_selection": "lowest_dev_loss",
}

# Self-chat / detection / transition defaults
DEFAULT_MAX_CHITCHAT_TURNS = 12
DEFAULT_MIN_CHITCHAT_TURNS = 4
DEFAULT_DETECTION_THRESHOLD = 0.5
DEFAULT_PARAPHRASES_PER_INTENT = 3
DEFAULT_TRANSITION_CANDIDATES = 5
DEFAULT_NEGATIVE_RATIO = 1.0

# Termination defaults
DEFAULT_TERMINATION_KEYWORDS = ("bye", "goodbye")
DEFAULT_END_TOKEN = "<END>"
DEFAULT_MAX_TOD_TURNS = 30

# Dialogue format
TRANSITION_SOURCE_PAST = "past: "
TRANSITION_SOURCE_FUTURE = " future: "
PERSONA_SEPARATOR = " | "
SLOT_TOKEN_PATTERN = r"\[[a-z_]+\]"
META_TERMINATION = "termination"
META_TRIGGER_QUESTION = "trigger_question"
META_BACKEND = "backend"
META_SGD_DIALOGUE = "sgd_dialogue_id"
META_PROVISIONAL = "provisional"
META_TEMPLATE = "template"

# Crowdsourcing
WORKERS_PER_ITEM = 3
SCORE_MIN = 1
SCORE_MAX = 5
RANK_MIN = 1
RANK_MAX = 3
HISTOGRAM_BIN_WIDTH = 0.5
TASK1_QUESTIONS = ("q1_relevance", "q2_aggressiveness", "q3_overall")
TASK2_QUESTIONS = ("q1_right_time", "q2_relevance", "q3_aggressiveness", "q4_overall")
NONE_INTENT = "NONE"
