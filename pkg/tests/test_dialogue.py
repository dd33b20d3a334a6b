import json
import random
import statistics

import pytest

from fakes import MOVIE_FUTURE, MUSIC_REQUEST, random_dialogue
from src.dialogue import compute_stats, deserialize, read_corpus, render_stats_table, serialize, validate, write_corpus
from src.dialogue.sgd import delexicalize_utterance, read_sgd_dialogues, read_sgd_ontology
from src.exceptions import DataError, SchemaError, ValidationError
from src.models.enums import Phase, Provenance, Speaker


class TestValidate:
    def test_valid_dialogue_has_empty_report(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.USER, "I like movies.", Phase.CHITCHAT),
            (Speaker.SALES, "Do you want to find movies to watch?", Phase.TRANSITION),
            (Speaker.USER, "Yes, something funny.", Phase.TOD),
        ])
        report = validate(dialogue)
        assert report.is_valid
        assert report.messages == []

    def test_movies_dialogue_is_valid(self, movies_dialogue):
        assert validate(movies_dialogue).is_valid

    def test_consecutive_user_turns(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.USER, "Hi.", Phase.CHITCHAT),
            (Speaker.USER, "Anyone there?", Phase.CHITCHAT),
        ], intent=None)
        assert "alternation violated at turn 1" in validate(dialogue).messages

    def test_tod_before_transition(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.SALES, "Hi.", Phase.CHITCHAT),
            (Speaker.USER, "Find me a movie.", Phase.TOD),
            (Speaker.SALES, "Do you want to find movies to watch?", Phase.TRANSITION),
        ])
        messages = validate(dialogue).messages
        assert any(message.startswith("phase order violated") for message in messages)

    def test_transition_spoken_by_user(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.SALES, "Hi.", Phase.CHITCHAT),
            (Speaker.USER, "Do you want to find movies?", Phase.TRANSITION),
        ])
        rules = {violation.rule for violation in validate(dialogue).violations}
        assert "transition_speaker" in rules

    def test_intent_and_transition_must_agree(self, make_dialogue):
        no_transition = make_dialogue([(Speaker.SALES, "Hi.", Phase.CHITCHAT)])
        assert "intent set but no transition turn" in validate(no_transition).messages

        no_intent = make_dialogue([
            (Speaker.USER, "Hi.", Phase.CHITCHAT),
            (Speaker.SALES, "Do you want to find movies to watch?", Phase.TRANSITION),
        ], intent=None)
        assert "transition turn present but intent is missing" in validate(no_intent).messages

    def test_multiple_transitions(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.SALES, "Do you want to find movies?", Phase.TRANSITION),
            (Speaker.USER, "Maybe.", Phase.TOD),
            (Speaker.SALES, "Do you want to play songs?", Phase.TRANSITION),
        ])
        rules = [violation.rule for violation in validate(dialogue).violations]
        assert "single_transition" in rules

    def test_candidates_must_hold_transition_text(self, make_dialogue):
        rows = [
            (Speaker.USER, "I like movies.", Phase.CHITCHAT),
            (Speaker.SALES, "Shall I look?", Phase.TRANSITION),
        ]
        good = make_dialogue(rows, candidates=["Shall I look?", "a", "b", "c", "d"])
        assert validate(good).is_valid

        wrong_text = make_dialogue(rows, candidates=["a", "b", "c", "d", "e"])
        assert "transition turn text is not one of transition_candidates" in validate(wrong_text).messages

        wrong_count = make_dialogue(rows, candidates=["Shall I look?", "a"])
        assert not validate(wrong_count).is_valid

    def test_reports_every_violation(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.USER, "Hi.", Phase.TOD),
            (Speaker.USER, "Hello.", Phase.CHITCHAT),
        ])
        rules = {violation.rule for violation in validate(dialogue).violations}
        assert {"alternation", "phase_order", "intent"} <= rules


class TestSerialization:
    def test_round_trip(self, movies_dialogue):
        assert deserialize(serialize(movies_dialogue)) == movies_dialogue

    def test_round_trip_random_dialogues(self):
        rng = random.Random(20)
        for position in range(300):
            dialogue = random_dialogue(rng, f"rnd-{position:04d}")
            assert validate(dialogue).is_valid
            data = serialize(dialogue)
            restored = deserialize(data)
            expected = dialogue
            if dialogue.intent is not None:
                expected = dialogue.model_copy(update={"intent": dialogue.intent.without_ontology()})
            assert restored == expected
            assert serialize(restored) == data

    def test_round_trip_keeps_unknown_meta(self, make_dialogue):
        dialogue = make_dialogue([(Speaker.SALES, "Hi.", Phase.CHITCHAT)], intent=None)
        turns = (dialogue.turns[0].model_copy(update={"meta": {"annotator_note": ["x", 1]}}),)
        dialogue = dialogue.model_copy(update={"turns": turns})
        assert deserialize(serialize(dialogue)).turns[0].meta == {"annotator_note": ["x", 1]}

    def test_missing_turns(self):
        payload = json.dumps({"id": "x", "seed": 1, "provenance": "MERGE_SGD"})
        with pytest.raises(SchemaError) as excinfo:
            deserialize(payload)
        assert "turns: required" in str(excinfo.value)

    def test_speaker_outside_enum(self, movies_dialogue):
        payload = json.loads(serialize(movies_dialogue))
        payload["turns"][0]["speaker"] = "AGENT"
        with pytest.raises(SchemaError) as excinfo:
            deserialize(json.dumps(payload))
        assert "speaker: not in enum" in str(excinfo.value)

    def test_invalid_json(self):
        with pytest.raises(SchemaError):
            deserialize(b"{not json")

    def test_refuses_invalid_dialogue(self, make_dialogue):
        dialogue = make_dialogue([
            (Speaker.USER, "Hi.", Phase.CHITCHAT),
            (Speaker.USER, "Hello?", Phase.CHITCHAT),
        ], intent=None)
        with pytest.raises(ValidationError):
            serialize(dialogue)

    def test_corpus_file(self, tmp_path, linear_dialogues):
        corpus = linear_dialogues([4, 6, 8])
        path = tmp_path / "corpus.jsonl"
        assert write_corpus(path, corpus) == 3
        assert read_corpus(path) == corpus

    def test_corpus_error_carries_line(self, tmp_path, linear_dialogues):
        path = tmp_path / "corpus.jsonl"
        write_corpus(path, linear_dialogues([4]))
        with open(path, "a", encoding="utf-8") as handle:
            handle.write('{"id": "broken"}\n')
        with pytest.raises(SchemaError) as excinfo:
            read_corpus(path)
        assert excinfo.value.line == 2


class TestStats:
    def test_two_findmovies_dialogues(self, linear_dialogues):
        stats = compute_stats(linear_dialogues([10, 20]))
        movies = stats.per_intent["FindMovies"]
        assert movies.count == 2
        assert movies.average_length == 15
        assert movies.min_length == 10
        assert movies.max_length == 20
        assert stats.total.count == 2

    def test_empty_corpus(self):
        stats = compute_stats([])
        assert stats.total.count == 0
        assert stats.total.average_length is None
        assert all(group.count == 0 for group in stats.per_intent.values())
        assert all(group.average_length is None for group in stats.per_provenance.values())

    def test_grouped_by_provenance(self, linear_dialogues):
        corpus = linear_dialogues([4, 6], provenance=Provenance.MERGE_SGD, prefix="m")
        corpus += linear_dialogues([10], intent="PlaySong", provenance=Provenance.SIMULATION, prefix="s")
        stats = compute_stats(corpus)
        assert stats.per_provenance["MERGE_SGD"].count == 2
        assert stats.per_provenance["SIMULATION"].average_length == 10
        assert stats.per_intent["PlaySong"].count == 1
        assert stats.total.average_length == pytest.approx(20 / 3)
        assert stats.per_intent["FindMovies"].average_chitchat_length == 2

    def test_matches_recount_on_random_corpus(self):
        rng = random.Random(7)
        corpus = [random_dialogue(rng, f"rnd-{position:04d}") for position in range(1000)]
        stats = compute_stats(corpus)

        def check(group, dialogues):
            assert group.count == len(dialogues)
            lengths = [len(d.turns) for d in dialogues]
            chitchat = [sum(1 for t in d.turns if t.phase == Phase.CHITCHAT) for d in dialogues]
            assert group.average_length == pytest.approx(statistics.fmean(lengths))
            assert group.min_length == min(lengths)
            assert group.max_length == max(lengths)
            assert group.average_chitchat_length == pytest.approx(statistics.fmean(chitchat))

        check(stats.total, corpus)
        for provenance in Provenance:
            check(stats.per_provenance[provenance.value], [d for d in corpus if d.provenance == provenance])
        for name, group in stats.per_intent.items():
            members = [d for d in corpus if d.intent is not None and d.intent.name == name]
            if members:
                check(group, members)
            else:
                assert group.count == 0
        assert sum(group.count for group in stats.per_intent.values()) == sum(1 for d in corpus if d.intent)

    def test_concatenated_corpus_combines_halves(self):
        rng = random.Random(11)
        first = [random_dialogue(rng, f"a-{position:04d}") for position in range(400)]
        second = [random_dialogue(rng, f"b-{position:04d}") for position in range(600)]
        left, right, both = compute_stats(first), compute_stats(second), compute_stats(first + second)

        def combined(a, b, field):
            if a.count == 0 or b.count == 0:
                return getattr(a if a.count else b, field)
            return (getattr(a, field) * a.count + getattr(b, field) * b.count) / (a.count + b.count)

        groups = [(left.total, right.total, both.total)]
        groups += [(left.per_provenance[k], right.per_provenance[k], both.per_provenance[k]) for k in both.per_provenance]
        groups += [(left.per_intent[k], right.per_intent[k], both.per_intent[k]) for k in both.per_intent]
        for a, b, merged in groups:
            assert merged.count == a.count + b.count
            if merged.count == 0:
                continue
            assert merged.average_length == pytest.approx(combined(a, b, "average_length"))
            assert merged.average_chitchat_length == pytest.approx(combined(a, b, "average_chitchat_length"))
            assert merged.min_length == min(v for v in (a.min_length, b.min_length) if v is not None)
            assert merged.max_length == max(v for v in (a.max_length, b.max_length) if v is not None)

    def test_rows_follow_table_order(self, linear_dialogues):
        stats = compute_stats(linear_dialogues([4]))
        assert list(stats.per_intent)[:6] == [
            "FindMovies", "GetTimesForMovie", "FindAttractions", "LookupMusic", "PlaySong", "LookupSong",
        ]

    def test_render_table(self, linear_dialogues):
        table = render_stats_table(compute_stats(linear_dialogues([10, 20])))
        lines = table.splitlines()
        assert lines[0].split() == ["Intent", "#Dialogues", "Avg", "Length"]
        movies = next(line for line in lines if line.startswith("FindMovies"))
        assert movies.split() == ["FindMovies", "2", "15"]
        assert "Merge SGD" in table
        assert lines[-1].split() == ["Total", "2", "15"]


class TestSgdReader:
    def test_reads_every_dialogue(self, sgd_dir):
        dialogues = read_sgd_dialogues(sgd_dir)
        assert [d.dialogue_id for d in dialogues] == ["1_00001", "1_00002", "1_00003", "1_00004"]

    def test_system_maps_to_sales(self, sgd_dir):
        movies = read_sgd_dialogues(sgd_dir)[1]
        assert movies.turns[0].speaker == Speaker.SALES
        assert movies.turns[1].text == MOVIE_FUTURE
        assert movies.turns[1].active_intents == ("FindMovies",)
        assert movies.intents == ["FindMovies"]

    def test_music_dialogue(self, sgd_dir):
        music = read_sgd_dialogues(sgd_dir)[0]
        assert music.turns[0].text == MUSIC_REQUEST
        assert music.turns[1].active_intents == ()

    def test_delexicalizes_slot_spans(self, sgd_dir):
        assert read_sgd_dialogues(sgd_dir)[2].turns[0].text == "Play [song_name] by [artist]"
        assert read_sgd_dialogues(sgd_dir, delexicalize=False)[2].turns[0].text == "Play Hello by Adele"

    def test_delexicalize_ignores_bad_spans(self):
        turn = {
            "speaker": "USER",
            "utterance": "Play Hello",
            "frames": [{"slots": [{"slot": "song_name", "start": 5, "exclusive_end": 99}]}],
        }
        assert delexicalize_utterance(turn) == "Play Hello"

    def test_ontology(self, sgd_dir):
        assert read_sgd_ontology(sgd_dir) == {
            "FindMovies": "Find movies by genre and optionally director",
            "CheckBalance": "Check the balance of an account",
        }

    def test_missing_path(self, tmp_path):
        with pytest.raises(DataError):
            read_sgd_dialogues(tmp_path / "nowhere")

    def test_malformed_turn_reports_position(self, tmp_path):
        path = tmp_path / "dialogues_001.json"
        path.write_text(json.dumps([{"dialogue_id": "x", "turns": [{"speaker": "ROBOT", "utterance": "hi"}]}]))
        with pytest.raises(DataError) as excinfo:
            read_sgd_dialogues(path)
        assert excinfo.value.dialogue_id == "x"
        assert excinfo.value.turn_index == 0
