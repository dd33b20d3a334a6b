import json

import pytest

from src.config.pipeline_config import PipelineConfig, load_config, parse_config
from src.exceptions import ConfigError
from src.models.enums import BackendProvider, BackendRole, ContinuationMode
from src.pipeline import build_run_manifest


@pytest.fixture
def config_file(tmp_path):
    def _write(content: str):
        path = tmp_path / "run.json"
        path.write_text(content, encoding="utf-8")
        return path
    return _write


class TestDefaults:
    def test_empty_file_gives_full_defaults(self, config_file):
        loaded = load_config(config_file(""), environ={})
        assert loaded.transition.decoding.top_k == 80
        assert loaded.transition.decoding.top_p == 0.95
        assert loaded.continuation.decoding.top_k == 120
        assert loaded.backends.transition.decoding.top_k == 80
        assert loaded.backends.tod_user.decoding.top_k == 120
        assert loaded.backends.chitchat.decoding.top_k == 50
        assert loaded.transition.n_candidates == 5
        assert loaded.detection.threshold == 0.5
        assert loaded.detection.window is None
        assert loaded.selfchat.min_chitchat_turns == 4
        assert loaded.continuation.mode == ContinuationMode.MERGE_SGD
        assert loaded.continuation.policy.max_turns == 30

    def test_every_role_defaults_to_mock(self):
        loaded = parse_config({}, environ={})
        assert loaded.backends.providers() == {BackendProvider.MOCK}
        assert {loaded.backends.for_role(role).name for role in BackendRole} == {
            "mock-chitchat", "mock-qa", "mock-paraphrase", "mock-transition", "mock-tod-user", "mock-tod-sales",
        }

    def test_partial_file_keeps_other_defaults(self, config_file):
        loaded = load_config(config_file(json.dumps({"detection": {"threshold": 0.7}})), environ={})
        assert loaded.detection.threshold == 0.7
        assert loaded.detection.n_paraphrases == 3


class TestErrors:
    def test_type_mismatch_names_key_path(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config({"detection": {"threshold": "high"}}, environ={})
        assert excinfo.value.key_path == "detection.threshold"

    def test_unknown_key(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config({"selfchat": {"max_turns": 3}}, environ={})
        assert excinfo.value.key_path == "selfchat.max_turns"
        assert excinfo.value.field_errors["selfchat.max_turns"] == "unknown key"

    def test_probability_out_of_range(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config({"continuation": {"p_sim": 1.5}}, environ={})
        assert excinfo.value.key_path == "continuation.p_sim"

    def test_candidate_count_fixed_when_generative(self):
        with pytest.raises(ConfigError):
            parse_config({"transition": {"n_candidates": 3}}, environ={})
        loaded = parse_config({"transition": {"n_candidates": 3, "generative": False}}, environ={})
        assert loaded.transition.n_candidates == 3

    def test_remote_backend_needs_endpoint(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config({"backends": {"qa": {"kind": "qa", "name": "qa", "provider": "remote"}}}, environ={})
        assert excinfo.value.key_path.startswith("backends.qa")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "absent.json", environ={})

    def test_malformed_json(self, config_file):
        with pytest.raises(ConfigError):
            load_config(config_file("{"), environ={})

    def test_non_object_root(self, config_file):
        with pytest.raises(ConfigError):
            load_config(config_file("[1, 2]"), environ={})


class TestEnvironmentOverrides:
    def test_output_path_reflected_in_manifest(self, config_file):
        loaded = load_config(config_file("{}"), environ={"SALESBOT_OUTPUT_PATH": "elsewhere/out.jsonl"})
        assert loaded.io.output_path == "elsewhere/out.jsonl"
        manifest = build_run_manifest(loaded, 0, {})
        assert manifest["config"]["io"]["output_path"] == "elsewhere/out.jsonl"

    def test_override_wins_over_file(self, config_file):
        path = config_file(json.dumps({"master_seed": 1, "continuation": {"mode": "MERGE_SGD"}}))
        loaded = load_config(path, environ={"SALESBOT_MASTER_SEED": "42", "SALESBOT_MODE": "SIMULATION"})
        assert loaded.master_seed == 42
        assert loaded.continuation.mode == ContinuationMode.SIMULATION

    def test_empty_variable_is_ignored(self):
        loaded = parse_config({"master_seed": 3}, environ={"SALESBOT_MASTER_SEED": ""})
        assert loaded.master_seed == 3

    def test_invalid_override_is_a_config_error(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config({}, environ={"SALESBOT_MODE": "TELEPATHY"})
        assert excinfo.value.key_path == "continuation.mode"


class TestCheckPaths:
    def test_merge_needs_sgd_path(self):
        with pytest.raises(ConfigError) as excinfo:
            PipelineConfig().check_paths()
        assert excinfo.value.key_path == "io.sgd_path"

    def test_simulation_needs_no_sgd(self):
        parse_config({"continuation": {"mode": "SIMULATION"}}, environ={}).check_paths()

    def test_index_supplied_by_caller(self):
        PipelineConfig().check_paths(require_sgd=False)

    def test_referenced_paths_must_exist(self, tmp_path):
        loaded = parse_config({"io": {"sgd_path": str(tmp_path / "missing")}}, environ={})
        with pytest.raises(ConfigError) as excinfo:
            loaded.check_paths()
        assert excinfo.value.key_path == "io.sgd_path"

    def test_mock_script_must_exist(self, sgd_dir, tmp_path):
        loaded = parse_config({
            "io": {"sgd_path": str(sgd_dir)},
            "backends": {"qa": {"kind": "qa", "name": "qa", "mock_script": str(tmp_path / "rules.json")}},
        }, environ={})
        with pytest.raises(ConfigError) as excinfo:
            loaded.check_paths()
        assert excinfo.value.key_path == "backends.qa.mock_script"
