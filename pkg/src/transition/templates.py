"""Template transitions: "Do you want to {intent description}?"."""

from src.exceptions import PreconditionError
from src.models.types import IntentLabel
from src.utils.text import lower_first, normalize_whitespace

TEMPLATE = "Do you want to {description}?"


def template_transition(intent: IntentLabel) -> str:
    """
    Template transition for an intent.

    Uses the longer ontology description when one was loaded, otherwise the
    short description. The description's first letter is lower-cased and a
    trailing period dropped.
    """
    description = normalize_whitespace(intent.ontology_description or intent.description).rstrip(".").rstrip()
    if not description:
        raise PreconditionError(f"Intent '{intent.name}' has an empty description", invalid_fields=["description"])
    return TEMPLATE.format(description=lower_first(description))
