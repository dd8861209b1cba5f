"""Uniform chat-completion interface: live HTTP backend, in-process mock,
structured-output parsing and bounded corrective retries."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass

import httpx

from . import artifacts, scene as scene_mod
from .errors import (
    BackendTimeout,
    BackendUnreachable,
    BudgetExceeded,
    SchemaViolation,
    UnknownStage,
    UnparseableAfterRetries,
)
from .knowledge import STAGE_COLORING, STAGE_IDEA, STAGE_WORD_COLOR
from .mock_backend import mock_generate_text
from .prompts import RenderedPrompt

API_KEY_ENV = "CHROMACHAIN_API_KEY"
DEFAULT_ENDPOINT = "https://api.openai.com/v1/chat/completions"
DEFAULT_MODEL = "gpt-3.5-turbo"

STAGE_SLOTS = {STAGE_IDEA: "intent", STAGE_WORD_COLOR: "concepts", STAGE_COLORING: "request"}


@dataclass(frozen=True)
class BackendConfig:
    kind: str = "mock"
    endpoint: str = DEFAULT_ENDPOINT
    model: str = DEFAULT_MODEL
    temperature: float = 0.7
    max_tokens: int = 4096
    max_retries: int = 3
    timeout: float = 30.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("mock", "live"):
            raise SchemaViolation(f"backend kind {self.kind!r} must be mock or live")
        if not 0.0 <= self.temperature <= 2.0:
            raise SchemaViolation(f"temperature {self.temperature} outside [0, 2]")
        if self.max_retries < 0:
            raise SchemaViolation(f"max_retries {self.max_retries} must be >= 0")


@dataclass(frozen=True)
class CompletionResult:
    raw_text: str
    parsed_payload: object
    attempts: int
    latency_s: float


class _ParseFailure(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _extract_json(text: str):
    """First JSON value in the completion; models often wrap it in prose."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    decoder = json.JSONDecoder()
    for i, ch in enumerate(text):
        if ch in "[{":
            try:
                value, _ = decoder.raw_decode(text[i:])
                return value
            except json.JSONDecodeError:
                continue
    raise _ParseFailure("no JSON value found in the output")


def parse_stage_output(stage: str, raw_text: str):
    """Parse raw model text into the stage's typed artifact(s)."""
    data = _extract_json(raw_text)
    try:
        if stage == STAGE_IDEA:
            if not isinstance(data, list) or not data:
                raise SchemaViolation("expected a non-empty array of concept candidates")
            return [artifacts.concepts_from_payload(c) for c in data]
        if stage == STAGE_WORD_COLOR:
            if not isinstance(data, list) or not data:
                raise SchemaViolation("expected a non-empty array of scheme candidates")
            return [artifacts.scheme_from_payload(s) for s in data]
        if stage == STAGE_COLORING:
            return scene_mod.assignment_from_payload(data)
    except SchemaViolation as exc:
        raise _ParseFailure(exc.message) from exc
    except Exception as exc:  # malformed notation etc. inside payloads
        raise _ParseFailure(str(exc)) from exc
    raise UnknownStage(f"no output schema for stage {stage!r}")


class MockBackend:
    """Pure in-process backend; emits the structured text the parser expects."""

    kind = "mock"

    def complete(self, prompt: RenderedPrompt, prompt_text: str, cfg: BackendConfig) -> str:
        slot = STAGE_SLOTS.get(prompt.stage)
        if slot is None:
            raise UnknownStage(f"no input slot for stage {prompt.stage!r}")
        payload = prompt.bindings.get(slot)
        return mock_generate_text(prompt.stage, payload, cfg.seed)


class LiveBackend:
    """Chat-completion call over HTTPS; the API key comes from the
    CHROMACHAIN_API_KEY environment variable."""

    kind = "live"

    def __init__(self, transport: httpx.BaseTransport | None = None):
        self._transport = transport

    def complete(self, prompt: RenderedPrompt, prompt_text: str, cfg: BackendConfig) -> str:
        headers = {"Content-Type": "application/json"}
        api_key = os.environ.get(API_KEY_ENV)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        body = {
            "model": cfg.model,
            "temperature": cfg.temperature,
            "max_tokens": cfg.max_tokens,
            "messages": [{"role": "user", "content": prompt_text}],
        }
        try:
            with httpx.Client(transport=self._transport, timeout=cfg.timeout) as client:
                response = client.post(cfg.endpoint, json=body, headers=headers)
        except httpx.TimeoutException as exc:
            raise BackendTimeout(f"backend timed out after {cfg.timeout}s") from exc
        except httpx.HTTPError as exc:
            raise BackendUnreachable(f"backend unreachable: {exc}") from exc
        if response.status_code != 200:
            raise BackendUnreachable(
                f"backend returned HTTP {response.status_code}: {response.text[:200]}"
            )
        data = response.json()
        try:
            return data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise BackendUnreachable("backend response missing choices[0].message.content") from exc


def backend_for(cfg: BackendConfig):
    return MockBackend() if cfg.kind == "mock" else LiveBackend()


def complete_structured(
    prompt: RenderedPrompt,
    stage: str,
    cfg: BackendConfig,
    backend=None,
) -> CompletionResult:
    """Run the completion and parse it under the stage schema, retrying with
    a corrective instruction up to cfg.max_retries times.

    attempts <= max_retries + 1 always; total parse failure raises
    UnparseableAfterRetries carrying every raw attempt.
    """
    if prompt.token_estimate > cfg.max_tokens:
        raise BudgetExceeded(
            f"prompt estimates {prompt.token_estimate} tokens, cap is {cfg.max_tokens}"
        )
    backend = backend or backend_for(cfg)
    prompt_text = prompt.text
    raw_attempts: list[str] = []
    started = time.monotonic()
    attempts = 0
    last_reason = ""
    while attempts <= cfg.max_retries:
        attempts += 1
        raw = backend.complete(prompt, prompt_text, cfg)
        raw_attempts.append(raw)
        try:
            parsed = parse_stage_output(stage, raw)
        except _ParseFailure as failure:
            last_reason = failure.reason
            prompt_text = (
                f"{prompt.text}\n\nYour previous output could not be used because: "
                f"{failure.reason}. Respond with only the structured format shown in the examples."
            )
            continue
        return CompletionResult(
            raw_text=raw,
            parsed_payload=parsed,
            attempts=attempts,
            latency_s=time.monotonic() - started,
        )
    raise UnparseableAfterRetries(
        f"output unparseable after {attempts} attempts: {last_reason}",
        attempts=attempts,
        raw_outputs=raw_attempts,
    )
