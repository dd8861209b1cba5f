"""Knowledge config: defaults, schema guards, round-trip, example banks."""

import json

import pytest

from chromachain.artifacts import concepts_from_payload, scheme_from_payload
from chromachain.errors import ExampleParseFailure, SchemaViolation
from chromachain.knowledge import (
    STAGES,
    CompositionRules,
    knowledge_from_payload,
    knowledge_to_payload,
    load_knowledge,
)
from chromachain.scene import assignment_from_payload
from chromachain.validation import validate_assignment, validate_scheme


def test_bundled_defaults(kb):
    assert kb.rules.dominant_window == (0.60, 0.70)
    assert kb.rules.secondary_window == (0.20, 0.30)
    assert kb.rules.accent_window == (0.05, 0.10)
    assert kb.rules.max_dominant_hue_shift == 15
    assert kb.rules.window_slack == 0.05


def test_omitted_fields_take_defaults(tmp_path):
    path = tmp_path / "partial.json"
    payload = knowledge_to_payload(load_knowledge())
    del payload["rules"]["max_dominant_hue_shift"]
    del payload["rules"]["window_slack"]
    path.write_text(json.dumps(payload), encoding="utf-8")
    kb = load_knowledge(path)
    assert kb.rules.max_dominant_hue_shift == 15
    assert kb.rules.window_slack == 0.05


def test_window_ordering_enforced():
    with pytest.raises(SchemaViolation):
        CompositionRules(accent_window=(0.30, 0.40))


def test_windows_must_be_subintervals():
    with pytest.raises(SchemaViolation):
        CompositionRules(dominant_window=(0.60, 1.20))


def test_negative_slack_rejected():
    with pytest.raises(SchemaViolation):
        CompositionRules(window_slack=-0.01)


def test_round_trip_idempotent(kb, tmp_path):
    payload = knowledge_to_payload(kb)
    path = tmp_path / "kb.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    reloaded = load_knowledge(path)
    assert knowledge_to_payload(reloaded) == payload


def test_bank_counts(kb, scenes):
    assert len(kb.banks["idea-prompting"].examples) == 5
    assert len(kb.banks["word-color"].examples) == 5
    for scene_id in scenes:
        assert len(kb.banks["coloring"].for_scene(scene_id).examples) == 3


def test_duplicate_block_id_rejected(kb):
    payload = knowledge_to_payload(kb)
    payload["knowledge_blocks"].append(dict(payload["knowledge_blocks"][0]))
    with pytest.raises(SchemaViolation):
        knowledge_from_payload(payload)


def test_example_parse_failure_names_example(kb):
    payload = knowledge_to_payload(kb)
    payload["few_shot"]["word-color"][2]["output"] = [{"dominant": {"color": "zzz"}}]
    with pytest.raises(ExampleParseFailure) as err:
        knowledge_from_payload(payload)
    assert "word-color[2]" in str(err.value)


def test_bad_bank_count_rejected(kb):
    payload = knowledge_to_payload(kb)
    payload["few_shot"]["idea-prompting"] = payload["few_shot"]["idea-prompting"][:2]
    with pytest.raises(SchemaViolation):
        knowledge_from_payload(payload)


def test_every_bundled_example_passes_validators(kb, scenes, rules):
    """Bundled few-shot banks must be violation-free under the validators."""
    for ex in kb.banks["idea-prompting"].examples:
        for candidate in ex.output_payload:
            concepts_from_payload(candidate)  # raises on structural problems
    for ex in kb.banks["word-color"].examples:
        concepts = concepts_from_payload(ex.input_payload)
        for candidate in ex.output_payload:
            scheme = scheme_from_payload(candidate)
            report = validate_scheme(scheme, concepts, rules)
            assert not report.violations, report.explain()
    for ex in kb.banks["coloring"].examples:
        scene = scenes[ex.input_payload["scene"]]
        scheme = scheme_from_payload(ex.input_payload["scheme"])
        assignment = assignment_from_payload(ex.output_payload)
        report = validate_assignment(assignment, scene, scheme, rules)
        assert not report.violations, report.explain()


def test_blocks_for_stage(kb):
    for stage in STAGES:
        blocks = kb.blocks_for(stage)
        assert blocks, f"stage {stage} has no knowledge blocks"
        for block in blocks:
            assert stage in block.applies_to
