"""
Intent detection.

- catalog.py: question catalog and paraphrase augmentation
- detector.py: QA-based detection over chit-chat context
- tod_qa.py: TOD-QA training data from annotated dialogues
"""

from .catalog import augment_with_paraphrases, build_question_catalog, load_catalog, save_catalog
from .detector import DetectionHook, detect_intent, detect_intent_all, format_context
from .tod_qa import build_tod_qa, write_tod_qa

__all__ = [
    "build_question_catalog",
    "augment_with_paraphrases",
    "save_catalog",
    "load_catalog",
    "detect_intent",
    "detect_intent_all",
    "DetectionHook",
    "format_context",
    "build_tod_qa",
    "write_tod_qa",
]
