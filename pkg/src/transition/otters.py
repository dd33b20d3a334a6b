"""
OTTers topic-transition data.

Each record holds an utterance on topic A, a bridging utterance and an
utterance on topic B; they map to past, target and future respectively.
The tab-separated file may carry a header naming ``first_turn``,
``intermediate_turn`` and ``second_turn`` (plus optional ``id``); without a
header, rows are read positionally as (A, bridge, B) or (id, A, bridge, B).
"""

import csv
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.models.types import SkipReport, TransitionTriple
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)

_FIELDS = ("first_turn", "intermediate_turn", "second_turn")


def _positional(row: Sequence[str]) -> Dict[str, Optional[str]]:
    if len(row) >= 4:
        identifier, *values = row[:4]
    else:
        identifier, values = None, list(row) + [""] * (3 - len(row))
    return {"id": identifier, **dict(zip(_FIELDS, values))}


def read_otters(path: str | Path) -> List[Dict[str, Optional[str]]]:
    """Rows of an OTTers TSV file as raw (possibly incomplete) records."""
    with open(path, newline="", encoding="utf-8") as handle:
        rows = [row for row in csv.reader(handle, delimiter="\t") if any(cell.strip() for cell in row)]
    if rows and set(_FIELDS) <= {cell.strip() for cell in rows[0]}:
        header = [cell.strip() for cell in rows[0]]
        return [dict(zip(header, row)) for row in rows[1:]]
    return [_positional(row) for row in rows]


def adapt_otters(records: Sequence[Mapping[str, Optional[str]]]) -> Tuple[List[TransitionTriple], SkipReport]:
    """
    Map OTTers records to transition triples.

    Returns:
        Triples in record order, and a report keyed by record id (or row position)
        for each malformed record
    """
    triples: List[TransitionTriple] = []
    skipped: Dict[str, str] = {}
    for position, record in enumerate(records):
        key = str(record.get("id") or f"row {position}")
        values = {name: normalize_whitespace(record.get(name) or "") for name in _FIELDS}
        missing = [name for name, value in values.items() if not value]
        if missing:
            skipped[key] = f"missing {', '.join(missing)}"
            continue
        triples.append(TransitionTriple(
            past=values["first_turn"],
            target=values["intermediate_turn"],
            future=values["second_turn"],
        ))

    report = SkipReport(kept=len(triples), skipped=skipped)
    if skipped:
        logger.warning(f"OTTers adaptation: {report.summary()}")
    return triples, report

