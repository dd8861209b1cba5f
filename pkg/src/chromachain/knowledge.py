"""Knowledge configuration: numeric composition rules, prompt-injectable
domain text blocks, and per-stage few-shot example banks.

Everything loads from one JSON file so designers can retune rules and
extend the example banks without touching code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import artifacts, scene as scene_mod
from .errors import ChromaChainError, ExampleParseFailure, SchemaViolation

STAGE_IDEA = "idea-prompting"
STAGE_WORD_COLOR = "word-color"
STAGE_COLORING = "coloring"
STAGES = (STAGE_IDEA, STAGE_WORD_COLOR, STAGE_COLORING)

DEFAULT_KNOWLEDGE_PATH = Path(__file__).parent / "data" / "knowledge.json"


@dataclass(frozen=True)
class ContrastRule:
    """Adjacent elements must differ in hue OR blackness by at least this much."""

    hue_delta: float = 30.0
    blackness_delta: int = 20


@dataclass(frozen=True)
class CompositionRules:
    dominant_window: tuple[float, float] = (0.60, 0.70)
    secondary_window: tuple[float, float] = (0.20, 0.30)
    accent_window: tuple[float, float] = (0.05, 0.10)
    window_slack: float = 0.05
    max_dominant_hue_shift: float = 15.0
    max_hue_families: int = 3
    dominant_max_blackness: int = 40
    dominant_max_chromaticness: int = 50
    min_adjacent_contrast: ContrastRule = field(default_factory=ContrastRule)

    def __post_init__(self):
        windows = {
            "dominant_window": self.dominant_window,
            "secondary_window": self.secondary_window,
            "accent_window": self.accent_window,
        }
        for name, (lo, hi) in windows.items():
            if not (0.0 <= lo <= hi <= 1.0):
                raise SchemaViolation(f"{name} [{lo}, {hi}] is not a subinterval of [0, 1]")
        if not (self.dominant_window[0] > self.secondary_window[0] > self.accent_window[0]):
            raise SchemaViolation(
                "windows must be ordered dominant > secondary > accent by lower bound"
            )
        if self.window_slack < 0:
            raise SchemaViolation(f"window_slack {self.window_slack} must be >= 0")

    def window(self, role: str) -> tuple[float, float]:
        return {
            "dominant": self.dominant_window,
            "secondary": self.secondary_window,
            "accent": self.accent_window,
        }[role]

    def slack_window(self, role: str) -> tuple[float, float]:
        lo, hi = self.window(role)
        return max(0.0, lo - self.window_slack), min(1.0, hi + self.window_slack)


@dataclass(frozen=True)
class KnowledgeBlock:
    id: str
    body: str
    applies_to: tuple[str, ...]

    def __post_init__(self):
        if not self.id:
            raise SchemaViolation("knowledge block id must be non-empty")
        if not self.body.strip():
            raise SchemaViolation(f"knowledge block {self.id!r} has an empty body")
        for stage in self.applies_to:
            if stage not in STAGES:
                raise SchemaViolation(f"knowledge block {self.id!r}: unknown stage {stage!r}")


@dataclass(frozen=True)
class FewShotExample:
    input_payload: object
    output_payload: object


@dataclass(frozen=True)
class FewShotBank:
    stage: str
    examples: tuple[FewShotExample, ...]

    def __post_init__(self):
        if self.stage not in STAGES:
            raise SchemaViolation(f"unknown few-shot stage {self.stage!r}")

    def for_scene(self, scene_id: str) -> "FewShotBank":
        """Coloring examples are grouped per scene; other stages pass through."""
        if self.stage != STAGE_COLORING:
            return self
        selected = tuple(
            ex for ex in self.examples
            if isinstance(ex.input_payload, dict) and ex.input_payload.get("scene") == scene_id
        )
        return FewShotBank(stage=self.stage, examples=selected)


@dataclass(frozen=True)
class KnowledgeBase:
    rules: CompositionRules
    blocks: tuple[KnowledgeBlock, ...]
    banks: dict[str, FewShotBank]
    rgb_anchors: dict[str, tuple[int, int, int]] | None = None

    def blocks_for(self, stage: str) -> tuple[KnowledgeBlock, ...]:
        return tuple(b for b in self.blocks if stage in b.applies_to)

    def block(self, block_id: str) -> KnowledgeBlock:
        for b in self.blocks:
            if b.id == block_id:
                return b
        raise SchemaViolation(f"unknown knowledge block {block_id!r}")


def _parse_window(name: str, raw, default: tuple[float, float]) -> tuple[float, float]:
    if raw is None:
        return default
    if not isinstance(raw, list) or len(raw) != 2:
        raise SchemaViolation(f"rules.{name} must be a [lo, hi] pair")
    return float(raw[0]), float(raw[1])


def rules_from_payload(data: dict | None) -> CompositionRules:
    """Build rules from the config section, defaulting absent fields."""
    data = data or {}
    if not isinstance(data, dict):
        raise SchemaViolation("rules section must be an object")
    defaults = CompositionRules()
    contrast_raw = data.get("min_adjacent_contrast")
    if contrast_raw is None:
        contrast = defaults.min_adjacent_contrast
    elif isinstance(contrast_raw, dict):
        contrast = ContrastRule(
            hue_delta=float(contrast_raw.get("hue_delta", defaults.min_adjacent_contrast.hue_delta)),
            blackness_delta=int(contrast_raw.get("blackness_delta",
                                                 defaults.min_adjacent_contrast.blackness_delta)),
        )
    else:
        raise SchemaViolation("rules.min_adjacent_contrast must be an object with hue_delta/blackness_delta")
    return CompositionRules(
        dominant_window=_parse_window("dominant_window", data.get("dominant_window"),
                                      defaults.dominant_window),
        secondary_window=_parse_window("secondary_window", data.get("secondary_window"),
                                       defaults.secondary_window),
        accent_window=_parse_window("accent_window", data.get("accent_window"),
                                    defaults.accent_window),
        window_slack=float(data.get("window_slack", defaults.window_slack)),
        max_dominant_hue_shift=float(data.get("max_dominant_hue_shift",
                                              defaults.max_dominant_hue_shift)),
        max_hue_families=int(data.get("max_hue_families", defaults.max_hue_families)),
        dominant_max_blackness=int(data.get("dominant_max_blackness",
                                            defaults.dominant_max_blackness)),
        dominant_max_chromaticness=int(data.get("dominant_max_chromaticness",
                                                defaults.dominant_max_chromaticness)),
        min_adjacent_contrast=contrast,
    )


def rules_to_payload(rules: CompositionRules) -> dict:
    return {
        "dominant_window": list(rules.dominant_window),
        "secondary_window": list(rules.secondary_window),
        "accent_window": list(rules.accent_window),
        "window_slack": rules.window_slack,
        "max_dominant_hue_shift": rules.max_dominant_hue_shift,
        "max_hue_families": rules.max_hue_families,
        "dominant_max_blackness": rules.dominant_max_blackness,
        "dominant_max_chromaticness": rules.dominant_max_chromaticness,
        "min_adjacent_contrast": {
            "hue_delta": rules.min_adjacent_contrast.hue_delta,
            "blackness_delta": rules.min_adjacent_contrast.blackness_delta,
        },
    }


def _check_example(stage: str, index: int, ex: FewShotExample) -> None:
    """Each example must parse under its stage's structured formats."""
    where = f"few_shot.{stage}[{index}]"
    try:
        if stage == STAGE_IDEA:
            if not isinstance(ex.input_payload, str) or not ex.input_payload.strip():
                raise SchemaViolation("input must be a non-empty intent string")
            if not isinstance(ex.output_payload, list) or not ex.output_payload:
                raise SchemaViolation("output must be a non-empty candidate list")
            for cand in ex.output_payload:
                artifacts.concepts_from_payload(cand)
        elif stage == STAGE_WORD_COLOR:
            artifacts.concepts_from_payload(ex.input_payload)
            if not isinstance(ex.output_payload, list) or not ex.output_payload:
                raise SchemaViolation("output must be a non-empty candidate list")
            for cand in ex.output_payload:
                artifacts.scheme_from_payload(cand)
        elif stage == STAGE_COLORING:
            if not isinstance(ex.input_payload, dict) or "scene" not in ex.input_payload:
                raise SchemaViolation("input must name a scene")
            artifacts.scheme_from_payload(ex.input_payload.get("scheme", {}))
            scene_mod.assignment_from_payload(ex.output_payload)
    except ChromaChainError as exc:
        raise ExampleParseFailure(f"{where}: {exc.message}") from exc


def _check_bank_counts(stage: str, bank: FewShotBank) -> None:
    """Populated banks hold 3..5 examples (per scene for the coloring
    stage); a bank may also be empty, which renders as an explicit marker."""
    if stage == STAGE_COLORING:
        groups: dict[str, int] = {}
        for ex in bank.examples:
            groups[ex.input_payload["scene"]] = groups.get(ex.input_payload["scene"], 0) + 1
        for scene_id, count in sorted(groups.items()):
            if not 3 <= count <= 5:
                raise SchemaViolation(
                    f"few_shot.{stage}: scene {scene_id!r} has {count} examples, expected 3..5"
                )
    elif bank.examples and not 3 <= len(bank.examples) <= 5:
        raise SchemaViolation(
            f"few_shot.{stage}: {len(bank.examples)} examples, expected 3..5"
        )


def knowledge_from_payload(data: dict) -> KnowledgeBase:
    if not isinstance(data, dict):
        raise SchemaViolation("knowledge config must be an object")
    rules = rules_from_payload(data.get("rules"))

    blocks = []
    seen_ids = set()
    for raw in data.get("knowledge_blocks", []):
        if not isinstance(raw, dict):
            raise SchemaViolation("knowledge_blocks entries must be objects")
        block = KnowledgeBlock(
            id=str(raw.get("id", "")),
            body=str(raw.get("body", "")),
            applies_to=tuple(raw.get("applies_to", [])),
        )
        if block.id in seen_ids:
            raise SchemaViolation(f"duplicate knowledge block id {block.id!r}")
        seen_ids.add(block.id)
        blocks.append(block)

    few_shot = data.get("few_shot", {})
    if not isinstance(few_shot, dict):
        raise SchemaViolation("few_shot section must be an object")
    banks: dict[str, FewShotBank] = {}
    for stage in STAGES:
        raw_examples = few_shot.get(stage, [])
        if not isinstance(raw_examples, list):
            raise SchemaViolation(f"few_shot.{stage} must be a list")
        examples = []
        for i, raw in enumerate(raw_examples):
            if not isinstance(raw, dict) or "input" not in raw or "output" not in raw:
                raise ExampleParseFailure(f"few_shot.{stage}[{i}]: needs input and output fields")
            ex = FewShotExample(input_payload=raw["input"], output_payload=raw["output"])
            _check_example(stage, i, ex)
            examples.append(ex)
        bank = FewShotBank(stage=stage, examples=tuple(examples))
        _check_bank_counts(stage, bank)
        banks[stage] = bank

    anchors = None
    if "rgb_anchors" in data:
        raw_anchors = data["rgb_anchors"]
        if not isinstance(raw_anchors, dict) or set(raw_anchors) != {"Y", "R", "B", "G"}:
            raise SchemaViolation("rgb_anchors must map exactly Y, R, B, G")
        anchors = {k: tuple(int(v) for v in raw_anchors[k]) for k in ("Y", "R", "B", "G")}

    return KnowledgeBase(rules=rules, blocks=tuple(blocks), banks=banks, rgb_anchors=anchors)


def knowledge_to_payload(kb: KnowledgeBase) -> dict:
    payload: dict = {
        "rules": rules_to_payload(kb.rules),
        "knowledge_blocks": [
            {"id": b.id, "body": b.body, "applies_to": list(b.applies_to)}
            for b in kb.blocks
        ],
        "few_shot": {
            stage: [
                {"input": ex.input_payload, "output": ex.output_payload}
                for ex in kb.banks[stage].examples
            ]
            for stage in STAGES
        },
    }
    if kb.rgb_anchors is not None:
        payload["rgb_anchors"] = {k: list(v) for k, v in kb.rgb_anchors.items()}
    return payload


def load_knowledge(path: str | Path | None = None) -> KnowledgeBase:
    """Load the knowledge config, applying defaults for absent rule fields."""
    target = Path(path) if path is not None else DEFAULT_KNOWLEDGE_PATH
    try:
        data = json.loads(target.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise SchemaViolation(f"knowledge config {target} does not exist")
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"knowledge config {target}: invalid JSON ({exc})") from exc
    return knowledge_from_payload(data)
