"""
Models package for the dialogue synthesis pipeline.

This package contains:
- enums.py: Enumeration types
- constants.py: Intent ontology, canonical questions, defaults and format literals
- types.py: Immutable pydantic domain types
- record_types.py: TypedDict classes for raw wire and file formats
"""

from .enums import (
    Speaker,
    Phase,
    IntentName,
    Provenance,
    ContinuationMode,
    QALabel,
    BackendKind,
    BackendProvider,
    BackendRole,
    TerminationKind,
    RepetitionRule,
    DiscardReason,
    TransitionDataMix,
    EvalTask,
    Detector,
)

from .types import (
    IntentLabel,
    builtin_intents,
    Turn,
    Dialogue,
    Violation,
    ValidationReport,
    GroupStats,
    CorpusStats,
    DecodingConfig,
    QAAnswer,
    BackendDescriptor,
    Persona,
    SelfChatConfig,
    IntentQuestionSet,
    DetectionResult,
    QAExample,
    TransitionTriple,
    SkipReport,
    SgdTurn,
    SgdDialogue,
    SgdIndex,
    TerminationPolicy,
    TerminationReason,
    Task1Annotation,
    Task2Annotation,
    Task3Annotation,
    Task3Snippet,
    ScoreReport,
    ProvenanceBreakdown,
    ProvenanceComparison,
    RankSummary,
    RankReport,
)

__all__ = [
    # Enums
    "Speaker",
    "Phase",
    "IntentName",
    "Provenance",
    "ContinuationMode",
    "QALabel",
    "BackendKind",
    "BackendProvider",
    "BackendRole",
    "TerminationKind",
    "RepetitionRule",
    "DiscardReason",
    "TransitionDataMix",
    "EvalTask",
    "Detector",

    # Domain types
    "IntentLabel",
    "builtin_intents",
    "Turn",
    "Dialogue",
    "Violation",
    "ValidationReport",
    "GroupStats",
    "CorpusStats",
    "DecodingConfig",
    "QAAnswer",
    "BackendDescriptor",
    "Persona",
    "SelfChatConfig",
    "IntentQuestionSet",
    "DetectionResult",
    "QAExample",
    "TransitionTriple",
    "SkipReport",
    "SgdTurn",
    "SgdDialogue",
    "SgdIndex",
    "TerminationPolicy",
    "TerminationReason",
    "Task1Annotation",
    "Task2Annotation",
    "Task3Annotation",
    "Task3Snippet",
    "ScoreReport",
    "ProvenanceBreakdown",
    "ProvenanceComparison",
    "RankSummary",
    "RankReport",
]
