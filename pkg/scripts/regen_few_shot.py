#!/usr/bin/env python3
"""Regenerate the coloring few-shot bank in data/knowledge.json.

Produces three worked examples per bundled scene (one per representative
style family) via the deterministic mock, then verifies each against the
validators before writing. Run after editing scenes or palettes.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chromachain.artifacts import concepts_from_payload, scheme_from_payload
from chromachain.knowledge import DEFAULT_KNOWLEDGE_PATH, CompositionRules
from chromachain.mock_backend import mock_generate
from chromachain.scene import assignment_from_payload, load_scene_registry
from chromachain.validation import validate_assignment, validate_scheme

STYLES = ["Warm and Cozy", "Cool and Natural", "Energetic and Dynamic"]


def main() -> int:
    rules = CompositionRules()
    scenes = load_scene_registry()
    examples = []
    for scene_id in sorted(scenes):
        scene = scenes[scene_id]
        for style in STYLES:
            concepts_payload = mock_generate("idea-prompting", style, 0)[0]
            concepts = concepts_from_payload(concepts_payload, source_intent=style)
            scheme_payload = mock_generate(
                "word-color", {"concepts": concepts_payload, "locks": {}}, 0)[0]
            scheme = scheme_from_payload(scheme_payload)
            scheme_report = validate_scheme(scheme, concepts, rules)
            assert not scheme_report.violations, scheme_report.explain()
            assignment_payload = mock_generate(
                "coloring", {"scene": scene_id, "scheme": scheme_payload, "pins": {}}, 0)
            assignment = assignment_from_payload(assignment_payload)
            report = validate_assignment(assignment, scene, scheme, rules)
            assert not report.violations, f"{scene_id}/{style}: {report.explain()}"
            examples.append({
                "input": {"scene": scene_id, "scheme": scheme_payload},
                "output": assignment_payload,
            })
    data = json.loads(DEFAULT_KNOWLEDGE_PATH.read_text(encoding="utf-8"))
    data["few_shot"]["coloring"] = examples
    DEFAULT_KNOWLEDGE_PATH.write_text(
        json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(examples)} coloring examples to {DEFAULT_KNOWLEDGE_PATH}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
