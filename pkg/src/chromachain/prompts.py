"""Four-section prompt rendering, deterministic for golden testing.

Section order is fixed: Background & Task, Domain Knowledge, Examples,
Request (prefix + verbatim input payload). Few-shot payloads are
serialized with the same codecs the output parser consumes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .artifacts import canonical_json
from .errors import MissingBinding, SchemaViolation, TokenBudgetExceeded
from .knowledge import STAGE_COLORING, STAGES, FewShotBank, KnowledgeBase

DEFAULT_TEMPLATE_DIR = Path(__file__).parent / "data" / "templates"
DEFAULT_TOKEN_BUDGET = 4096

SECTION_BACKGROUND = "## Background & Task"
SECTION_KNOWLEDGE = "## Domain Knowledge"
SECTION_EXAMPLES = "## Examples"
SECTION_REQUEST = "## Request"
EMPTY_EXAMPLES_MARKER = "(no examples for this stage)"


@dataclass(frozen=True)
class PromptTemplate:
    stage: str
    background_task: str
    knowledge_block_ids: tuple[str, ...]
    prefix: str
    input_slot: str

    def __post_init__(self):
        if self.stage not in STAGES:
            raise SchemaViolation(f"unknown template stage {self.stage!r}")
        if not self.background_task.strip():
            raise SchemaViolation(f"template {self.stage}: empty background/task section")


@dataclass(frozen=True)
class RenderedPrompt:
    stage: str
    text: str
    token_estimate: int
    # structured input payload kept as metadata so the in-process mock
    # backend can operate on typed payloads instead of re-parsing text
    bindings: dict = field(default_factory=dict, compare=False)


def estimate_tokens(text: str) -> int:
    """Deterministic upper-bound estimate: ceil(utf-8 bytes / 3)."""
    return math.ceil(len(text.encode("utf-8")) / 3)


def _payload_text(value) -> str:
    if isinstance(value, str):
        return value
    return canonical_json(value)


def render_prompt(
    template: PromptTemplate,
    bindings: dict,
    knowledge: KnowledgeBase,
    scene_id: str | None = None,
    token_budget: int = DEFAULT_TOKEN_BUDGET,
) -> RenderedPrompt:
    """Render the four sections for a stage; byte-stable for fixed inputs.

    Raises MissingBinding when the template's input slot is absent and
    TokenBudgetExceeded (with the measured estimate) when over budget.
    """
    if template.input_slot not in bindings:
        raise MissingBinding(
            f"stage {template.stage}: binding {template.input_slot!r} is required"
        )

    bank: FewShotBank = knowledge.banks[template.stage]
    if template.stage == STAGE_COLORING and scene_id is not None:
        bank = bank.for_scene(scene_id)

    lines: list[str] = [SECTION_BACKGROUND, template.background_task.strip(), ""]
    lines.append(SECTION_KNOWLEDGE)
    for block_id in template.knowledge_block_ids:
        block = knowledge.block(block_id)
        lines.append(f"- {block.body.strip()}")
    lines.append("")
    lines.append(SECTION_EXAMPLES)
    if bank.examples:
        for i, ex in enumerate(bank.examples, start=1):
            lines.append(f"Example {i}")
            lines.append(f"Input: {_payload_text(ex.input_payload)}")
            lines.append(f"Output: {_payload_text(ex.output_payload)}")
    else:
        lines.append(EMPTY_EXAMPLES_MARKER)
    lines.append("")
    lines.append(SECTION_REQUEST)
    lines.append(template.prefix.strip())
    lines.append(f"Input: {_payload_text(bindings[template.input_slot])}")
    lines.append("Output:")

    text = "\n".join(lines)
    estimate = estimate_tokens(text)
    if estimate > token_budget:
        raise TokenBudgetExceeded(
            f"stage {template.stage}: prompt estimates {estimate} tokens, budget {token_budget}",
            estimate=estimate, budget=token_budget,
        )
    return RenderedPrompt(stage=template.stage, text=text, token_estimate=estimate,
                          bindings=dict(bindings))


def template_from_payload(data: dict) -> PromptTemplate:
    if not isinstance(data, dict):
        raise SchemaViolation("template file must hold an object")
    for fld in ("stage", "background_task", "knowledge_block_ids", "prefix", "input_slot"):
        if fld not in data:
            raise SchemaViolation(f"template missing field {fld!r}")
    return PromptTemplate(
        stage=str(data["stage"]),
        background_task=str(data["background_task"]),
        knowledge_block_ids=tuple(str(b) for b in data["knowledge_block_ids"]),
        prefix=str(data["prefix"]),
        input_slot=str(data["input_slot"]),
    )


def load_templates(knowledge: KnowledgeBase,
                   directory: str | Path | None = None) -> dict[str, PromptTemplate]:
    """Load one template per stage and check knowledge-block coverage:
    a stage template must reference exactly the blocks registered for its
    stage, so every rendered prompt carries all of them."""
    base = Path(directory) if directory is not None else DEFAULT_TEMPLATE_DIR
    templates: dict[str, PromptTemplate] = {}
    for stage in STAGES:
        path = base / f"{stage}.json"
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise SchemaViolation(f"template file {path} does not exist")
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"template file {path}: invalid JSON ({exc})") from exc
        template = template_from_payload(data)
        if template.stage != stage:
            raise SchemaViolation(f"template file {path} declares stage {template.stage!r}")
        registered = {b.id for b in knowledge.blocks_for(stage)}
        listed = set(template.knowledge_block_ids)
        if listed != registered:
            raise SchemaViolation(
                f"template {stage}: knowledge blocks {sorted(listed)} do not cover "
                f"registered blocks {sorted(registered)}"
            )
        templates[stage] = template
    return templates
