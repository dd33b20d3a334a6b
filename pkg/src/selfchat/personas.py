"""Persona pools: one persona per line, sentences separated by " | "."""

import logging
import random
from pathlib import Path
from typing import List, Sequence, Tuple

from src.exceptions import DataError, PreconditionError
from src.models.constants import PERSONA_SEPARATOR
from src.models.enums import Speaker
from src.models.types import Persona

logger = logging.getLogger(__name__)

# Used when no persona file is configured
DEFAULT_PERSONA_POOL: List[Tuple[str, ...]] = [
    ("I like to read a lot.", "I have a cat named Milo.", "I work as a nurse."),
    ("I love outdoor activities.", "My favorite season is autumn."),
    ("I play the guitar in a band.", "I drink too much coffee."),
    ("I am a retired teacher.", "I enjoy gardening.", "I have three grandchildren."),
    ("I recently moved to a new city.", "I like trying new restaurants."),
    ("I am a salesperson.", "I like helping people find what they need.", "I am friendly and patient."),
]


def parse_persona_line(line: str) -> Tuple[str, ...]:
    return tuple(part.strip() for part in line.split(PERSONA_SEPARATOR.strip()) if part.strip())


def load_personas(path: str | Path) -> List[Tuple[str, ...]]:
    """
    Read a persona pool file.

    Raises:
        DataError: A line has more than five sentences, or the file is empty
    """
    path = Path(path)
    pool: List[Tuple[str, ...]] = []
    for line_number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        sentences = parse_persona_line(line)
        if len(sentences) > 5:
            raise DataError(f"Line {line_number}: a persona has at most 5 sentences", source=str(path))
        pool.append(sentences)
    if not pool:
        raise DataError("Persona file contains no personas", source=str(path))
    logger.info(f"Loaded {len(pool)} personas from {path}")
    return pool


def sample_persona_pair(pool: Sequence[Tuple[str, ...]], seed: int) -> Tuple[Persona, Persona]:
    """Seeded (user, sales) personas, distinct entries when the pool allows it."""
    if not pool:
        raise PreconditionError.empty_argument("pool")
    rng = random.Random(seed)
    if len(pool) >= 2:
        user_index, sales_index = rng.sample(range(len(pool)), 2)
    else:
        user_index = sales_index = 0
    return (
        Persona(sentences=pool[user_index], role=Speaker.USER),
        Persona(sentences=pool[sales_index], role=Speaker.SALES),
    )
