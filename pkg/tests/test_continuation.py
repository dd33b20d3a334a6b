import random

import pytest

from fakes import (
    MOVIE_FUTURE,
    MUSIC_REQUEST,
    ConstantChat,
    CountingChat,
    FailingChat,
    transition_context,
    turn,
)
from src.continuation import (
    index_sgd,
    load_sgd_index,
    merge_continuation,
    provisional_user_turn,
    should_terminate,
    simulate_continuation,
    slot_tokens_well_formed,
)
from src.dialogue import validate
from src.exceptions import DataError, EmptyBucketError, PartialResultError, PreconditionError
from src.models.constants import META_PROVISIONAL, META_SGD_DIALOGUE, META_TERMINATION
from src.models.enums import Phase, Provenance, Speaker, TerminationKind
from src.models.types import Dialogue, IntentLabel, SgdDialogue, SgdIndex, SgdTurn, TerminationPolicy


class LinesChat:
    """Says its lines in order."""

    def __init__(self, lines, name="lines-chat"):
        self.name = name
        self.lines = list(lines)

    async def chat_reply(self, context, persona, config) -> str:
        return self.lines.pop(0)


class RandomChat:
    """Mixes stock lines (which may repeat or end the talk) with fresh ones."""

    STOCK = ["Sure.", "Okay.", "Which one?", "Sounds good.", "Done.<END>", "Thanks, bye!", "Anything else?"]

    def __init__(self, rng, name="random-chat"):
        self.name = name
        self.rng = rng
        self.fresh = 0

    async def chat_reply(self, context, persona, config) -> str:
        if self.rng.random() < 0.3:
            return self.rng.choice(self.STOCK)
        self.fresh += 1
        return f"Fresh line {self.fresh}."


def sgd(dialogue_id, *intents, text="Find something."):
    return SgdDialogue(dialogue_id=dialogue_id, turns=(
        SgdTurn(speaker=Speaker.USER, text=text, active_intents=tuple(intents)),
        SgdTurn(speaker=Speaker.SALES, text="Done."),
    ))


def tod(*texts):
    speakers = [Speaker.USER, Speaker.SALES]
    return [turn(speakers[position % 2], text, Phase.TOD) for position, text in enumerate(texts)]


# ============================================================================
# Index and Merge SGD
# ============================================================================

class TestIndex:
    def test_bucket_sizes(self):
        index = index_sgd([sgd("a", "FindMovies"), sgd("b", "FindMovies"), sgd("c", "PlaySong")])
        assert index.size("FindMovies") == 2
        assert index.size("PlaySong") == 1
        assert index.size("LookupSong") == 0

    def test_dialogue_with_two_intents_in_both_buckets(self):
        index = index_sgd([sgd("a", "FindMovies", "GetTimesForMovie")])
        assert index.buckets["FindMovies"][0].dialogue_id == "a"
        assert index.buckets["GetTimesForMovie"][0].dialogue_id == "a"

    def test_out_of_scope_intents_not_indexed(self):
        assert index_sgd([sgd("a", "CheckBalance"), sgd("b")]).buckets == {}

    def test_malformed_slot_tokens_left_out(self):
        index = index_sgd([sgd("a", "PlaySong", text="Play [song_name by [artist]")])
        assert index.size("PlaySong") == 0

    @pytest.mark.parametrize("text, expected", [
        ("Play [song_name] by [artist]", True),
        ("No slots here.", True),
        ("Play [song_name by x", False),
        ("Broken] bracket", False),
        ("[Upper] case", False),
    ])
    def test_slot_tokens(self, text, expected):
        assert slot_tokens_well_formed(text) is expected

    def test_load_from_directory(self, sgd_dir):
        index = load_sgd_index(sgd_dir)
        assert {name: index.size(name) for name in index.buckets} == {"LookupMusic": 1, "FindMovies": 1, "PlaySong": 1}
        assert index.buckets["PlaySong"][0].turns[0].text == "Play [song_name] by [artist]"


class TestMerge:
    def test_music_example(self, sgd_dir):
        turns = merge_continuation(IntentLabel.from_name("LookupMusic"), load_sgd_index(sgd_dir), seed=0)
        assert turns[0].speaker == Speaker.USER
        assert turns[0].text == MUSIC_REQUEST
        assert turns[0].meta == {META_SGD_DIALOGUE: "1_00001"}
        assert len(turns) == 6
        assert all(turn_.phase == Phase.TOD for turn_ in turns)
        assert all(turn_.meta == {} for turn_ in turns[1:])

    def test_leading_system_turns_dropped(self, sgd_dir):
        turns = merge_continuation(IntentLabel.from_name("FindMovies"), load_sgd_index(sgd_dir), seed=3)
        assert turns[0].text == MOVIE_FUTURE
        assert [turn_.speaker for turn_ in turns] == [Speaker.USER, Speaker.SALES, Speaker.USER]

    def test_seeded_sampling(self):
        index = index_sgd([sgd(f"d{position}", "FindMovies") for position in range(20)])
        intent = IntentLabel.from_name("FindMovies")
        picks = [merge_continuation(intent, index, seed)[0].meta[META_SGD_DIALOGUE] for seed in range(10)]
        assert picks == [merge_continuation(intent, index, seed)[0].meta[META_SGD_DIALOGUE] for seed in range(10)]
        assert len(set(picks)) > 1

    def test_empty_bucket(self, sgd_dir):
        with pytest.raises(EmptyBucketError) as excinfo:
            merge_continuation(IntentLabel.from_name("FindAttractions"), load_sgd_index(sgd_dir), seed=0)
        assert "FindAttractions" in str(excinfo.value)

    def test_dialogue_without_user_turn(self):
        lone = SgdDialogue(dialogue_id="x-1", turns=(SgdTurn(speaker=Speaker.SALES, text="Welcome."),))
        index = SgdIndex(buckets={"FindMovies": (lone,)})
        with pytest.raises(DataError) as excinfo:
            merge_continuation(IntentLabel.from_name("FindMovies"), index, seed=0)
        assert excinfo.value.dialogue_id == "x-1"
        assert "x-1" in str(excinfo.value)


# ============================================================================
# Termination
# ============================================================================

class TestTermination:
    def test_keyword(self):
        reason = should_terminate(tod("Play music.", "Enjoy your music. Have a wonderful day. Bye!"), TerminationPolicy())
        assert reason.kind == TerminationKind.KEYWORD
        assert reason.detail == "bye"
        assert reason.turn_index == 1

    def test_goodbye_is_its_own_keyword(self):
        reason = should_terminate(tod("Goodbye!"), TerminationPolicy())
        assert reason.kind == TerminationKind.KEYWORD
        assert reason.detail == "goodbye"

    def test_keyword_must_be_whole_word(self):
        assert should_terminate(tod("I like byes and bypasses."), TerminationPolicy()) is None

    def test_keyword_beats_end_token(self):
        assert should_terminate(tod("Bye <END>"), TerminationPolicy()).kind == TerminationKind.KEYWORD

    def test_end_token_beats_repetition(self):
        reason = should_terminate(tod("Done.<END>", "Okay.", "Done.<END>"), TerminationPolicy())
        assert reason.kind == TerminationKind.END_TOKEN
        assert reason.turn_index == 2

    def test_repetition_beats_max_turns(self):
        texts = [f"line {position}" for position in range(30)]
        reason = should_terminate(tod(*texts[:29], texts[27]), TerminationPolicy())
        assert reason.kind == TerminationKind.REPETITION
        assert reason.detail == "repeats turn 27"
        assert reason.turn_index == 29

    def test_end_token(self):
        reason = should_terminate(tod("That is all.<END>"), TerminationPolicy())
        assert reason.kind == TerminationKind.END_TOKEN
        assert reason.detail == "<END>"

    def test_repetition_same_speaker(self):
        reason = should_terminate(tod("Sure thing.", "Okay.", "  sure   THING."), TerminationPolicy())
        assert reason.kind == TerminationKind.REPETITION
        assert reason.detail == "repeats turn 0"

    def test_repetition_needs_same_speaker(self):
        assert should_terminate(tod("Sure thing.", "Sure thing."), TerminationPolicy()) is None

    def test_max_turns_counts_tod_turns(self):
        texts = [f"line {position}" for position in range(30)]
        assert should_terminate(tod(*texts[:29]), TerminationPolicy()) is None
        reason = should_terminate(tod(*texts), TerminationPolicy())
        assert reason.kind == TerminationKind.MAX_TURNS
        assert reason.turn_index == 29

        with_chitchat = [turn(Speaker.SALES, "hi"), turn(Speaker.USER, "hello"), *tod(*texts[:29])]
        assert should_terminate(with_chitchat, TerminationPolicy()) is None

    def test_empty(self):
        assert should_terminate([], TerminationPolicy()) is None


# ============================================================================
# Simulation
# ============================================================================

class TestSimulation:
    @pytest.mark.asyncio
    async def test_stops_on_sales_goodbye(self):
        user = LinesChat(["Find me a movie.", "Something funny."])
        sales = LinesChat(["Any genre?", "Here you go. Bye!"])
        turns = await simulate_continuation(transition_context(), user, sales)
        assert [turn_.speaker for turn_ in turns] == [Speaker.USER, Speaker.SALES] * 2
        assert all(turn_.phase == Phase.TOD for turn_ in turns)
        assert turns[-1].meta[META_TERMINATION] == {"kind": "KEYWORD", "turn_index": 3, "detail": "bye"}

    @pytest.mark.asyncio
    async def test_stops_on_end_token(self):
        user = LinesChat(["Find me a movie.", "Thanks."])
        sales = LinesChat(["Any genre?", "Here it is.<END>"])
        turns = await simulate_continuation(transition_context(), user, sales)
        assert len(turns) == 4
        assert turns[-1].meta[META_TERMINATION] == {"kind": "END_TOKEN", "turn_index": 3, "detail": "<END>"}

    @pytest.mark.asyncio
    async def test_always_stops_within_cap(self):
        rng = random.Random(5)
        for _ in range(300):
            cap = rng.randint(2, 40)
            chat = RandomChat(rng)
            turns = await simulate_continuation(transition_context(), chat, chat, TerminationPolicy(max_turns=cap))
            assert 1 <= len(turns) <= cap
            assert all(META_TERMINATION not in turn_.meta for turn_ in turns[:-1])
            assert TerminationKind(turns[-1].meta[META_TERMINATION]["kind"]) in TerminationKind

    @pytest.mark.asyncio
    async def test_constant_backend_stops_on_repetition(self):
        turns = await simulate_continuation(transition_context(), ConstantChat("Same."), ConstantChat("Same."))
        assert len(turns) == 3
        assert turns[-1].meta[META_TERMINATION]["kind"] == "REPETITION"

    @pytest.mark.asyncio
    async def test_turn_cap(self):
        turns = await simulate_continuation(
            transition_context(), CountingChat(), CountingChat(), TerminationPolicy(max_turns=2),
        )
        assert len(turns) == 2
        assert turns[-1].meta[META_TERMINATION]["kind"] == "MAX_TURNS"

    @pytest.mark.asyncio
    async def test_default_cap(self):
        turns = await simulate_continuation(transition_context(), CountingChat(), CountingChat())
        assert len(turns) == 30

    @pytest.mark.asyncio
    async def test_context_must_end_with_transition(self):
        with pytest.raises(PreconditionError):
            await simulate_continuation(transition_context()[:2], CountingChat(), CountingChat())
        with pytest.raises(PreconditionError):
            await simulate_continuation([], CountingChat(), CountingChat())

    @pytest.mark.asyncio
    async def test_failure_keeps_partial_turns(self):
        backend = FailingChat(fail_after=1)
        with pytest.raises(PartialResultError) as excinfo:
            await simulate_continuation(transition_context(), backend, backend)
        assert [turn_.text for turn_ in excinfo.value.partial] == ["line 1"]

    @pytest.mark.asyncio
    async def test_provisional_turn_kept_as_prefix(self):
        context = transition_context()
        first = await provisional_user_turn(context, ConstantChat("I want a movie."))
        assert first.meta == {META_PROVISIONAL: True}
        assert first.phase == Phase.TOD

        turns = await simulate_continuation(context, CountingChat(), LinesChat(["Bye."]), prefix=[first])
        assert turns[0] == first
        assert turns[1].speaker == Speaker.SALES
        assert len(turns) == 2

    @pytest.mark.asyncio
    async def test_result_is_a_valid_dialogue(self):
        context = transition_context()
        turns = await simulate_continuation(context, CountingChat(), CountingChat(), TerminationPolicy(max_turns=7))
        dialogue = Dialogue(
            id="sim",
            seed=0,
            provenance=Provenance.SIMULATION,
            intent=IntentLabel.from_name("FindMovies"),
            turns=(*context, *turns),
        )
        assert validate(dialogue).is_valid
