#!/usr/bin/env python3
"""Run the full style x scene matrix against the mock backend and write one
artifact bundle per cell. Handy for eyeballing palette coverage after
editing the lexicon or the scenes.

Usage: python scripts/generate_matrix.py [OUTDIR] [--seed N]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chromachain.gateway import BackendConfig
from chromachain.pipeline import Pipeline

STYLES = [
    "Modern and Simple",
    "Classical and Elegant",
    "Cool and Natural",
    "Warm and Cozy",
    "Energetic and Dynamic",
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="matrix_out")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    out = Path(args.outdir)
    pipeline = Pipeline(cfg=BackendConfig(kind="mock", seed=args.seed))
    failures = 0
    for style in STYLES:
        for scene_id in sorted(pipeline.scenes):
            session = pipeline.new_session(seed=args.seed)
            pipeline.stage1_concepts(session, style)
            pipeline.stage2_schemes(session)
            pipeline.choose_scheme(session, 0)
            pipeline.stage3_assign(session, scene_id)
            bundle = pipeline.export_bundle(session)
            cell = out / f"{style.lower().replace(' ', '_')}__{scene_id}"
            cell.mkdir(parents=True, exist_ok=True)
            (cell / "bundle.json").write_text(
                json.dumps(bundle, sort_keys=True, indent=2) + "\n", encoding="utf-8")
            verdict = bundle["assignment_report"]["verdict"]
            if verdict != "pass":
                failures += 1
            print(f"{style:24s} {scene_id:12s} {verdict}")
    print(f"\n{len(STYLES) * len(pipeline.scenes)} cells, {failures} failing")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
