"""
Text normalization utilities.

Functions for whitespace/casing normalization, whole-word matching and the
description-to-question phrasing used by the intent catalog.
"""

import re
from typing import Iterable

_VOWELS = "aeiou"
_IRREGULAR_GERUNDS = {
    "be": "being",
    "see": "seeing",
    "lie": "lying",
    "die": "dying",
    "look": "looking",
    "visit": "visiting",
    "listen": "listening",
    "obtain": "obtaining",
}


def normalize_whitespace(text: str) -> str:
    """Trim and collapse internal whitespace."""
    return " ".join(text.split())


def normalize_for_compare(text: str) -> str:
    """Whitespace- and case-normalized form used for equality checks."""
    return normalize_whitespace(text).casefold()


def contains_word(text: str, word: str) -> bool:
    """Case-insensitive whole-word (or whole-phrase) match."""
    pattern = rf"(?<!\w){re.escape(word)}(?!\w)"
    return re.search(pattern, text, flags=re.IGNORECASE) is not None


def first_matching_word(text: str, words: Iterable[str]) -> str | None:
    """Return the first of ``words`` that appears in ``text`` as a whole word."""
    for word in words:
        if contains_word(text, word):
            return word
    return None


def to_gerund(verb: str) -> str:
    """Turn a base-form verb into its -ing form."""
    lower = verb.lower()
    if lower in _IRREGULAR_GERUNDS:
        return _IRREGULAR_GERUNDS[lower]
    if lower.endswith("ie"):
        return lower[:-2] + "ying"
    if lower.endswith("e") and not lower.endswith(("ee", "ye", "oe")):
        return lower[:-1] + "ing"
    # short consonant-vowel-consonant verbs double the final consonant (get -> getting)
    if (
        len(lower) == 3
        and lower[-1] not in _VOWELS + "wxy"
        and lower[-2] in _VOWELS
        and lower[-3] not in _VOWELS
    ):
        return lower + lower[-1] + "ing"
    return lower + "ing"


def to_gerund_phrase(description: str) -> str:
    """'find movies to watch' -> 'finding movies to watch'."""
    words = normalize_whitespace(description).rstrip(".").split(" ")
    if not words or not words[0]:
        return ""
    return " ".join([to_gerund(words[0]), *words[1:]])


def lower_first(text: str) -> str:
    return text[:1].lower() + text[1:]
