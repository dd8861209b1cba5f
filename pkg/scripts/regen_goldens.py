#!/usr/bin/env python3
"""Refreeze the golden prompt fixtures under tests/golden/.

Run after intentionally changing prompt wording, templates or knowledge
blocks, then review the diff: golden churn is the point of these files.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chromachain.knowledge import load_knowledge
from chromachain.prompts import load_templates, render_prompt

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "tests" / "golden"


def main() -> int:
    kb = load_knowledge()
    templates = load_templates(kb)
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    rendered = render_prompt(templates["idea-prompting"],
                             {"intent": "energetic and dynamic"}, kb)
    target = GOLDEN_DIR / "stage1_prompt.txt"
    target.write_text(rendered.text, encoding="utf-8")
    print(f"wrote {target} ({len(rendered.text)} bytes)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
