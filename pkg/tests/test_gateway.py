"""Gateway behavior: retries, budgets, mock determinism, live request shape."""

import json

import httpx
import pytest

from chromachain.artifacts import canonical_json
from chromachain.errors import (
    BackendTimeout,
    BackendUnreachable,
    BudgetExceeded,
    SchemaViolation,
    UnknownStage,
    UnparseableAfterRetries,
)
from chromachain.gateway import (
    BackendConfig,
    LiveBackend,
    MockBackend,
    complete_structured,
    parse_stage_output,
)
from chromachain.knowledge import STAGE_IDEA
from chromachain.mock_backend import mock_generate
from chromachain.prompts import RenderedPrompt


def stage1_prompt(intent="warm and cozy"):
    return RenderedPrompt(stage=STAGE_IDEA, text=f"Input: {intent}\nOutput:",
                          token_estimate=10, bindings={"intent": intent})


VALID_STAGE1 = json.dumps([
    {"themes": ["A", "B", "C", "D", "E"], "mood": {"tones": 2, "distance": 0, "heaviness": 1}}
])


class FlakyBackend:
    """Fails to produce structured output k times, then succeeds."""

    def __init__(self, failures: int):
        self.failures = failures
        self.calls = 0
        self.prompts: list[str] = []

    def complete(self, prompt, prompt_text, cfg):
        self.calls += 1
        self.prompts.append(prompt_text)
        if self.calls <= self.failures:
            return "sorry, here is prose instead of data"
        return VALID_STAGE1


class TestConfig:
    def test_defaults(self):
        cfg = BackendConfig()
        assert cfg.temperature == 0.7
        assert cfg.max_tokens == 4096
        assert cfg.max_retries == 3
        assert cfg.model == "gpt-3.5-turbo"

    def test_temperature_range(self):
        with pytest.raises(SchemaViolation):
            BackendConfig(temperature=2.5)

    def test_negative_retries(self):
        with pytest.raises(SchemaViolation):
            BackendConfig(max_retries=-1)


class TestRetries:
    @pytest.mark.parametrize("failures", [0, 1, 2, 3])
    def test_attempts_is_failures_plus_one(self, failures):
        backend = FlakyBackend(failures)
        result = complete_structured(stage1_prompt(), STAGE_IDEA,
                                     BackendConfig(max_retries=3), backend)
        assert result.attempts == failures + 1
        assert backend.calls == failures + 1

    def test_always_failing_hits_bound(self):
        backend = FlakyBackend(10)
        with pytest.raises(UnparseableAfterRetries) as err:
            complete_structured(stage1_prompt(), STAGE_IDEA,
                                BackendConfig(max_retries=2), backend)
        assert err.value.attempts == 3
        assert len(err.value.raw_outputs) == 3

    def test_corrective_note_appended_on_retry(self):
        backend = FlakyBackend(1)
        complete_structured(stage1_prompt(), STAGE_IDEA, BackendConfig(max_retries=3), backend)
        assert "could not be used because" in backend.prompts[1]
        assert backend.prompts[0] == stage1_prompt().text

    def test_budget_checked_before_calling(self):
        backend = FlakyBackend(0)
        big = RenderedPrompt(stage=STAGE_IDEA, text="x", token_estimate=5000,
                             bindings={"intent": "x"})
        with pytest.raises(BudgetExceeded):
            complete_structured(big, STAGE_IDEA, BackendConfig(), backend)
        assert backend.calls == 0


class TestParsing:
    def test_json_embedded_in_prose(self):
        text = f"Here you go:\n{VALID_STAGE1}\nhope that helps"
        parsed = parse_stage_output(STAGE_IDEA, text)
        assert parsed[0].themes == ("A", "B", "C", "D", "E")

    def test_unknown_stage(self):
        with pytest.raises(UnknownStage):
            parse_stage_output("stage-9", VALID_STAGE1)


class TestMockBackend:
    def test_deterministic_over_many_runs(self):
        outputs = {
            canonical_json(mock_generate(STAGE_IDEA, "warm and cozy", 7))
            for _ in range(100)
        }
        assert len(outputs) == 1

    def test_backend_matches_mock_generate(self):
        backend = MockBackend()
        raw = backend.complete(stage1_prompt("modern and simple"), "ignored",
                               BackendConfig(seed=3))
        assert raw == canonical_json(mock_generate(STAGE_IDEA, "modern and simple", 3))

    def test_paper_pinned_energetic_payload(self):
        result = complete_structured(stage1_prompt("energetic and dynamic"), STAGE_IDEA,
                                     BackendConfig(), MockBackend())
        first = result.parsed_payload[0]
        for theme in ("Tropical Punch", "Vibrant", "Art Deco"):
            assert theme in first.themes
        assert (first.mood.tones, first.mood.distance, first.mood.heaviness) == (1, 2, 1)


class TestLiveBackend:
    def _transport(self, handler):
        return httpx.MockTransport(handler)

    def test_request_shape_and_parse(self, monkeypatch):
        monkeypatch.setenv("CHROMACHAIN_API_KEY", "sk-test")
        seen = {}

        def handler(request):
            seen["url"] = str(request.url)
            seen["auth"] = request.headers.get("authorization")
            seen["body"] = json.loads(request.content)
            return httpx.Response(200, json={
                "choices": [{"message": {"role": "assistant", "content": VALID_STAGE1}}]
            })

        backend = LiveBackend(transport=self._transport(handler))
        cfg = BackendConfig(kind="live", temperature=0.7, max_tokens=4096)
        raw = backend.complete(stage1_prompt(), "the prompt text", cfg)
        assert json.loads(raw) == json.loads(VALID_STAGE1)
        assert seen["auth"] == "Bearer sk-test"
        assert seen["body"]["model"] == "gpt-3.5-turbo"
        assert seen["body"]["temperature"] == 0.7
        assert seen["body"]["max_tokens"] == 4096
        assert seen["body"]["messages"] == [{"role": "user", "content": "the prompt text"}]

    def test_http_error_is_unreachable(self):
        def handler(request):
            return httpx.Response(500, text="boom")

        backend = LiveBackend(transport=self._transport(handler))
        with pytest.raises(BackendUnreachable):
            backend.complete(stage1_prompt(), "x", BackendConfig(kind="live"))

    def test_timeout_maps_to_backend_timeout(self):
        def handler(request):
            raise httpx.ConnectTimeout("slow")

        backend = LiveBackend(transport=self._transport(handler))
        with pytest.raises(BackendTimeout):
            backend.complete(stage1_prompt(), "x", BackendConfig(kind="live"))
