"""
Command-line surface.

Exit codes: 0 on success, 1 on a usage or config error, 2 on any other
failure (backend, data, I/O).
"""

import argparse
import asyncio
import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from src.backends.factory import build_backend
from src.config.pipeline_config import PipelineConfig, load_config
from src.dialogue import compute_stats, read_corpus, render_stats_table, write_corpus
from src.dialogue.sgd import read_sgd_dialogues, read_sgd_ontology
from src.evaluation import (
    aggregate_ranks,
    aggregate_scores,
    build_task3_snippets,
    compare_provenance,
    export_amt,
    ingest_annotations,
    render_rank_table,
    render_score_summary,
)
from src.exceptions import ConfigError, SalesBotError
from src.intent.catalog import build_question_catalog, load_catalog
from src.intent.tod_qa import build_tod_qa, write_tod_qa
from src.models.constants import DEFAULT_DETECTION_THRESHOLD, DEFAULT_NEGATIVE_RATIO, INTENT_ORDER
from src.models.enums import ContinuationMode, Detector, EvalTask, TransitionDataMix
from src.models.types import BackendDescriptor, IntentLabel, builtin_intents
from src.pipeline import run_pipeline
from src.transition import (
    adapt_otters,
    apply_best_transition,
    build_training_triples,
    mix_triples,
    read_otters,
    restore_template,
    write_transition_data,
)
from src.utils.files import write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

MODES = {
    "merge": ContinuationMode.MERGE_SGD,
    "sim": ContinuationMode.SIMULATION,
    "mixed": ContinuationMode.MIXED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# ============================================================================
# Commands
# ============================================================================

def _with_overrides(pipeline_config: PipelineConfig, mode: Optional[str], seed: Optional[int]) -> PipelineConfig:
    update = {}
    if mode is not None:
        update["continuation"] = pipeline_config.continuation.model_copy(update={"mode": MODES[mode]})
    if seed is not None:
        update["master_seed"] = seed
    return pipeline_config.model_copy(update=update) if update else pipeline_config


def cmd_generate(args: argparse.Namespace) -> int:
    pipeline_config = _with_overrides(load_config(args.config), args.mode, args.seed)
    report = asyncio.run(run_pipeline(pipeline_config, args.n, output_path=args.out, progress=args.progress))
    print(report.model_dump_json(indent=2))
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    stats = compute_stats(read_corpus(args.corpus))
    print(stats.model_dump_json(indent=2))
    print()
    print(render_stats_table(stats))
    return EXIT_OK


def tod_qa_intents(sgd_path: str | Path) -> List[IntentLabel]:
    """Built-in intents (with ontology descriptions when present), then the other schema intents."""
    ontology = read_sgd_ontology(sgd_path)
    intents = [IntentLabel.from_name(intent.name, ontology.get(intent.name)) for intent in builtin_intents()]
    for name, description in ontology.items():
        if name not in INTENT_ORDER and description:
            intents.append(IntentLabel(name=name, description=description))
    return intents


def cmd_build_tod_qa(args: argparse.Namespace) -> int:
    dialogues = read_sgd_dialogues(args.sgd)
    if args.scope == "builtin":
        intents = builtin_intents()
        kept = [d for d in dialogues if set(d.intents) <= set(INTENT_ORDER)]
        if len(kept) < len(dialogues):
            logger.info(f"Dropped {len(dialogues) - len(kept)} dialogues with intents outside the built-in six")
        dialogues = kept
    else:
        intents = tod_qa_intents(args.sgd)

    catalog = build_question_catalog(intents)
    ratio = None if args.no_downsample else args.ratio
    examples = build_tod_qa(dialogues, catalog, negative_ratio=ratio, seed=args.seed)
    count = write_tod_qa(args.out, examples, {"sgd": str(args.sgd), "negative_ratio": ratio, "seed": args.seed})
    print(f"Wrote {count} TOD-QA examples to {args.out}")
    return EXIT_OK


def cmd_build_transition_data(args: argparse.Namespace) -> int:
    mix = TransitionDataMix(args.mix)
    template_triples, otters_triples = [], []
    sources: Dict[str, object] = {"mix": mix.value}

    if mix != TransitionDataMix.OTTERS:
        if not args.corpus:
            raise UsageError(f"--corpus is required for --mix {mix.value}")
        corpus = [restore_template(d) for d in read_corpus(args.corpus)]
        template_triples, report = build_training_triples(corpus)
        sources["corpus"] = {"path": str(args.corpus), "kept": report.kept, "skipped": report.skipped_count}
    if mix != TransitionDataMix.TEMPLATE:
        if not args.otters:
            raise UsageError(f"--otters is required for --mix {mix.value}")
        otters_triples, report = adapt_otters(read_otters(args.otters))
        sources["otters"] = {"path": str(args.otters), "kept": report.kept, "skipped": report.skipped_count}

    count = write_transition_data(args.out, mix_triples(template_triples, otters_triples, mix), sources)
    print(f"Wrote {count} transition examples to {args.out}")
    return EXIT_OK


def _load_detectors(path: str | Path) -> Dict[Detector, object]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        descriptors = {Detector(key): BackendDescriptor.model_validate(value) for key, value in raw.items()}
    except (OSError, ValueError) as e:
        raise ConfigError(f"Invalid detectors file {path}: {e}", key_path="detectors") from e
    return {detector: build_backend(descriptor) for detector, descriptor in descriptors.items()}


def cmd_export_amt(args: argparse.Namespace) -> int:
    task = EvalTask(args.task)
    corpus = read_corpus(args.corpus)
    if task == EvalTask.IMPLICIT_INTENT:
        if not args.detectors:
            raise UsageError("--detectors is required for task 3")
        catalog = load_catalog(args.catalog) if args.catalog else build_question_catalog(builtin_intents())
        items = asyncio.run(build_task3_snippets(corpus, _load_detectors(args.detectors), catalog, args.threshold))
    else:
        items = corpus
    count = export_amt(items, task, args.out)
    print(f"Wrote {count} rows to {args.out}")
    return EXIT_OK


def cmd_aggregate(args: argparse.Namespace) -> int:
    task = EvalTask(args.task)
    annotations = ingest_annotations(args.annotations, task)
    out = Path(args.out) if args.out else Path(args.annotations).with_suffix(".report.json")

    if task == EvalTask.IMPLICIT_INTENT:
        report = aggregate_ranks(annotations, sample=args.sample, per_snippet=args.per_snippet)
        write_json(out, report.model_dump(mode="json"))
        print(render_rank_table(report))
        return EXIT_OK

    report = aggregate_scores(annotations, task)
    payload = {"scores": report.model_dump(mode="json")}
    comparison = None
    if args.corpus:
        comparison = compare_provenance(report, read_corpus(args.corpus))
        payload["provenance"] = comparison.model_dump(mode="json")
    write_json(out, payload)
    print(render_score_summary(report, comparison))
    return EXIT_OK


def cmd_apply_best_transitions(args: argparse.Namespace) -> int:
    report = aggregate_scores(ingest_annotations(args.annotations, EvalTask.TRANSITION), EvalTask.TRANSITION)
    updated = 0
    dialogues = []
    for dialogue in read_corpus(args.corpus):
        best = report.best_candidate.get(dialogue.id)
        if best is not None:
            dialogue = apply_best_transition(dialogue, best)
            updated += 1
        dialogues.append(dialogue)
    write_corpus(args.out, dialogues)
    print(f"Applied {updated} best transitions; wrote {len(dialogues)} dialogues to {args.out}")
    return EXIT_OK


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="salesbot", description="Chit-chat to task-oriented dialogue synthesis")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    generate = commands.add_parser("generate", help="Generate a dialogue corpus")
    generate.add_argument("--config", required=True)
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--mode", choices=sorted(MODES))
    generate.add_argument("--seed", type=int)
    generate.add_argument("--out", help="Corpus path (defaults to io.output_path)")
    generate.add_argument("--progress", action="store_true")
    generate.set_defaults(handler=cmd_generate)

    stats = commands.add_parser("stats", help="Corpus statistics")
    stats.add_argument("--corpus", required=True)
    stats.set_defaults(handler=cmd_stats)

    tod_qa = commands.add_parser("build-tod-qa", help="Yes/no QA training data from SGD")
    tod_qa.add_argument("--sgd", required=True)
    tod_qa.add_argument("--out", required=True)
    tod_qa.add_argument("--ratio", type=float, default=DEFAULT_NEGATIVE_RATIO, help="Kept NO examples per YES")
    tod_qa.add_argument("--no-downsample", action="store_true")
    tod_qa.add_argument("--scope", choices=["all", "builtin"], default="all")
    tod_qa.add_argument("--seed", type=int, default=0)
    tod_qa.set_defaults(handler=cmd_build_tod_qa)

    transition = commands.add_parser("build-transition-data", help="Transition model training data")
    transition.add_argument("--corpus")
    transition.add_argument("--otters")
    transition.add_argument("--out", required=True)
    transition.add_argument("--mix", choices=[mix.value for mix in TransitionDataMix], default=TransitionDataMix.BOTH.value)
    transition.set_defaults(handler=cmd_build_transition_data)

    export = commands.add_parser("export-amt", help="Crowdsourcing task files")
    export.add_argument("--corpus", required=True)
    export.add_argument("--task", type=int, choices=[int(task) for task in EvalTask], required=True)
    export.add_argument("--out", required=True)
    export.add_argument("--detectors", help="JSON mapping Detector1..3 to QA backend descriptors (task 3)")
    export.add_argument("--catalog", help="Question catalog for task 3 (defaults to the built-in questions)")
    export.add_argument("--threshold", type=float, default=DEFAULT_DETECTION_THRESHOLD)
    export.set_defaults(handler=cmd_export_amt)

    aggregate = commands.add_parser("aggregate", help="Aggregate completed annotations")
    aggregate.add_argument("--task", type=int, choices=[int(task) for task in EvalTask], required=True)
    aggregate.add_argument("--annotations", required=True)
    aggregate.add_argument("--corpus", help="Split Task 1/2 scores by provenance")
    aggregate.add_argument("--out", help="JSON report path")
    aggregate.add_argument("--sample", action="store_true", help="Sample standard deviation")
    aggregate.add_argument("--per-snippet", action="store_true", help="Deviation over snippet means")
    aggregate.set_defaults(handler=cmd_aggregate)

    best = commands.add_parser("apply-best-transitions", help="Replace transitions with the crowd's best candidate")
    best.add_argument("--corpus", required=True)
    best.add_argument("--annotations", required=True)
    best.add_argument("--out", required=True)
    best.set_defaults(handler=cmd_apply_best_transitions)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map failures to exit codes."""
    try:
        args = build_parser().parse_args(argv)
        handler: Callable[[argparse.Namespace], int] = args.handler
        return handler(args)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except ConfigError as e:
        logger.error(f"Config error: {e}")
        return EXIT_USAGE
    except (SalesBotError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_RUNTIME
