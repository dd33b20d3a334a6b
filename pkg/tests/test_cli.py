import csv
import json

import pytest

from fakes import MOVIE_PAST, MOVIE_TEMPLATE
from src.cli import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, run
from src.config.pipeline_config import ENV_OVERRIDES
from src.dialogue import read_corpus, write_corpus
from src.models.enums import Phase, Speaker

CANDIDATES = (MOVIE_TEMPLATE, "Any movie plans?", "Film tonight?", "Want a movie?", "Movies?")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for variable in ENV_OVERRIDES:
        monkeypatch.delenv(variable, raising=False)


@pytest.fixture
def corpus_file(tmp_path, make_dialogue):
    dialogue = make_dialogue([
        (Speaker.SALES, "Hello, what is your hobby?", Phase.CHITCHAT),
        (Speaker.USER, MOVIE_PAST, Phase.CHITCHAT),
        (Speaker.SALES, MOVIE_TEMPLATE, Phase.TRANSITION),
        (Speaker.USER, "I'm looking for a movie to watch.", Phase.TOD),
    ], dialogue_id="d-1", candidates=CANDIDATES)
    path = tmp_path / "corpus.jsonl"
    write_corpus(path, [dialogue])
    return path


def write_task2_annotations(path, best_idx):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["dialogue_id", "worker_id", "q1", "q2", "q3", "q4", "best_idx"])
        for worker in ("w1", "w2", "w3"):
            writer.writerow(["d-1", worker, 4, 4, 2, 4, best_idx])
    return path


class TestExitCodes:
    def test_no_arguments(self):
        assert run([]) == EXIT_USAGE

    def test_unknown_command(self):
        assert run(["translate"]) == EXIT_USAGE

    def test_missing_config(self, tmp_path):
        assert run(["generate", "--config", str(tmp_path / "absent.json"), "--n", "1"]) == EXIT_USAGE

    def test_missing_corpus(self, tmp_path):
        assert run(["stats", "--corpus", str(tmp_path / "absent.jsonl")]) == EXIT_RUNTIME

    def test_stats(self, corpus_file, capsys):
        assert run(["stats", "--corpus", str(corpus_file)]) == EXIT_OK
        assert "Total" in capsys.readouterr().out


def test_generate(tmp_path, sgd_dir):
    config_path = tmp_path / "run.json"
    config_path.write_text(json.dumps({"io": {"sgd_path": str(sgd_dir)}, "workers": 2}), encoding="utf-8")
    out = tmp_path / "out" / "dialogues.jsonl"

    assert run(["generate", "--config", str(config_path), "--n", "4", "--seed", "5", "--out", str(out)]) == EXIT_OK
    assert out.exists()
    manifest = json.loads((tmp_path / "out" / "dialogues.jsonl.manifest.json").read_text())
    assert manifest["master_seed"] == 5
    assert manifest["n_dialogues"] == 4
    report = manifest["report"]
    assert report["written"] + sum(report["discarded"].values()) == 4


def test_generate_is_reproducible(tmp_path):
    config_path = tmp_path / "run.json"
    config_path.write_text(json.dumps({"workers": 4}), encoding="utf-8")

    def generate(name, seed):
        out = tmp_path / name
        args = ["generate", "--config", str(config_path), "--n", "50", "--mode", "sim", "--seed", str(seed), "--out", str(out)]
        assert run(args) == EXIT_OK
        return out.read_bytes(), (tmp_path / f"{name}.manifest.json").read_bytes()

    first, first_manifest = generate("a.jsonl", 3)
    second, second_manifest = generate("b.jsonl", 3)
    assert first == second
    assert first_manifest == second_manifest
    assert json.loads(first_manifest)["report"]["written"] > 0

    other, _ = generate("c.jsonl", 4)
    assert other != first


class TestTrainingData:
    def test_tod_qa_scopes(self, tmp_path, sgd_dir):
        everything = tmp_path / "all.jsonl"
        builtin = tmp_path / "builtin.jsonl"
        assert run(["build-tod-qa", "--sgd", str(sgd_dir), "--out", str(everything)]) == EXIT_OK
        assert run(["build-tod-qa", "--sgd", str(sgd_dir), "--out", str(builtin), "--scope", "builtin"]) == EXIT_OK

        questions_all = {json.loads(line)["question"] for line in everything.read_text().splitlines()}
        questions_builtin = {json.loads(line)["question"] for line in builtin.read_text().splitlines()}
        assert "Is the user asking about checking the balance of an account?" in questions_all
        assert not any("balance" in question for question in questions_builtin)
        assert (tmp_path / "all.jsonl.manifest.json").exists()

    def test_transition_data_needs_otters(self, tmp_path, corpus_file):
        assert run(["build-transition-data", "--corpus", str(corpus_file), "--out", str(tmp_path / "t.jsonl")]) == EXIT_USAGE

    def test_transition_data(self, tmp_path, corpus_file, otters_file):
        out = tmp_path / "t.jsonl"
        args = ["build-transition-data", "--corpus", str(corpus_file), "--otters", str(otters_file), "--out", str(out)]
        assert run(args) == EXIT_OK
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(records) == 9
        assert records[0]["target"] == MOVIE_TEMPLATE


class TestEvaluation:
    def test_export_task1(self, tmp_path, corpus_file):
        out = tmp_path / "task1.csv"
        assert run(["export-amt", "--corpus", str(corpus_file), "--task", "1", "--out", str(out)]) == EXIT_OK
        assert (tmp_path / "task1.instructions.txt").exists()

    def test_task3_needs_detectors(self, tmp_path, corpus_file):
        args = ["export-amt", "--corpus", str(corpus_file), "--task", "3", "--out", str(tmp_path / "task3.csv")]
        assert run(args) == EXIT_USAGE

    def test_task3_with_mock_detectors(self, tmp_path, corpus_file):
        detectors = tmp_path / "detectors.json"
        detectors.write_text(json.dumps({
            name: {"kind": "qa", "name": f"mock-{name.lower()}"} for name in ("Detector1", "Detector2", "Detector3")
        }), encoding="utf-8")
        out = tmp_path / "task3.csv"
        args = ["export-amt", "--corpus", str(corpus_file), "--task", "3", "--out", str(out), "--detectors", str(detectors)]
        assert run(args) == EXIT_OK
        with open(out, encoding="utf-8", newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert [row["snippet_id"] for row in rows] == ["d-1-t1"]
        assert rows[0]["detector1"] == "[FindMovies]"

    def test_aggregate_default_report_path(self, tmp_path, corpus_file):
        annotations = write_task2_annotations(tmp_path / "answers.csv", best_idx=2)
        args = ["aggregate", "--task", "2", "--annotations", str(annotations), "--corpus", str(corpus_file)]
        assert run(args) == EXIT_OK
        report = json.loads((tmp_path / "answers.report.json").read_text())
        assert report["scores"]["item_means"]["d-1"]["q1_right_time"] == 4.0
        assert report["scores"]["best_candidate"] == {"d-1": 2}
        assert "provenance" in report

    def test_aggregate_bad_scores(self, tmp_path):
        annotations = write_task2_annotations(tmp_path / "answers.csv", best_idx=9)
        assert run(["aggregate", "--task", "2", "--annotations", str(annotations)]) == EXIT_RUNTIME

    def test_apply_best_transitions(self, tmp_path, corpus_file):
        annotations = write_task2_annotations(tmp_path / "answers.csv", best_idx=3)
        out = tmp_path / "best.jsonl"
        args = ["apply-best-transitions", "--corpus", str(corpus_file), "--annotations", str(annotations), "--out", str(out)]
        assert run(args) == EXIT_OK
        dialogue = read_corpus(out)[0]
        assert dialogue.turns[dialogue.transition_index].text == "Want a movie?"
