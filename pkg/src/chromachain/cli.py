"""Batch CLI: headless generation, standalone validation, and serving.

Exit codes: 0 success / validators pass, 1 validation failure,
2 usage errors and unknown resources.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import artifacts, scene as scene_mod, validation
from .errors import ChromaChainError, NoValidAssignment, NoValidCandidate
from .gateway import BackendConfig
from .knowledge import load_knowledge
from .ncs import parse_ncs
from .pipeline import Pipeline
from .scene import load_scene_registry

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

ARTIFACT_FILES = ("concepts.json", "scheme.json", "assignment.json", "stats.json",
                  "validation.json")


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n",
                    encoding="utf-8")


def _build_pipeline(args) -> Pipeline:
    kb = load_knowledge(args.rules) if getattr(args, "rules", None) else load_knowledge()
    cfg = BackendConfig(
        kind=args.backend,
        seed=args.seed,
        max_retries=args.max_retries,
    )
    return Pipeline(knowledge=kb, cfg=cfg)


def cmd_generate(args) -> int:
    out_dir = Path(args.out)
    pipeline = _build_pipeline(args)
    if args.scene not in pipeline.scenes:
        _print_error("UNKNOWN_SCENE", f"no bundled scene {args.scene!r}")
        return EXIT_USAGE
    out_dir.mkdir(parents=True, exist_ok=True)
    session = pipeline.new_session(seed=args.seed)
    try:
        pipeline.stage1_concepts(session, args.style)
        pipeline.stage2_schemes(session)
        pipeline.choose_scheme(session, 0)
        pipeline.stage3_assign(session, args.scene)
    except (NoValidCandidate, NoValidAssignment) as exc:
        reports = [r.to_payload() for r in exc.reports]
        _write_json(out_dir / "validation.json",
                    {"passed": False, "error": exc.code, "reports": reports})
        _print_error(exc.code, exc.message)
        return EXIT_VALIDATION

    bundle = pipeline.export_bundle(session)
    _write_json(out_dir / "concepts.json", bundle["concepts"])
    _write_json(out_dir / "scheme.json", bundle["scheme"])
    _write_json(out_dir / "assignment.json", bundle["assignment"])
    _write_json(out_dir / "stats.json", bundle["stats"])
    scheme_report = session.scheme_report.to_payload() if session.scheme_report else {
        "verdict": "pass", "violations": []}
    assignment_report = session.assignment_report.to_payload()
    passed = scheme_report["verdict"] == "pass" and assignment_report["verdict"] == "pass"
    _write_json(out_dir / "validation.json", {
        "passed": passed,
        "scheme_report": scheme_report,
        "assignment_report": assignment_report,
    })
    if args.explain:
        print(session.assignment_report.explain())
    print(f"wrote {len(ARTIFACT_FILES)} artifacts to {out_dir}")
    return EXIT_OK if passed else EXIT_VALIDATION


def _scheme_from_file(data: dict) -> tuple:
    scheme = artifacts.scheme_from_payload(data)
    concepts_raw = data.get("concepts")
    if concepts_raw is not None:
        concepts = artifacts.concepts_from_payload(concepts_raw)
    else:
        # without stated intent the tone check has nothing to compare against
        from .ncs import classify_mood
        concepts = artifacts.DesignConcepts(
            themes=("unspecified",), mood=classify_mood(scheme))
    return scheme, concepts


def _placeholder_scheme(assignment) -> artifacts.ColorScheme:
    colors = {}
    for role in artifacts.ROLES:
        for eid in sorted(assignment.entries):
            r, c = assignment.entries[eid]
            if r == role:
                colors[role] = c
                break
        else:
            colors[role] = parse_ncs("0500-N")
    return artifacts.ColorScheme(**colors)


def cmd_validate(args) -> int:
    path = Path(args.file)
    if not path.exists():
        _print_error("SCHEMA_VIOLATION", f"file {path} does not exist")
        return EXIT_USAGE
    data = json.loads(path.read_text(encoding="utf-8"))
    kb = load_knowledge(args.rules) if args.rules else load_knowledge()
    if "assignments" in data:
        if not args.scene:
            print("usage error: validating an assignment needs --scene", file=sys.stderr)
            return EXIT_USAGE
        scenes = load_scene_registry()
        if args.scene not in scenes:
            _print_error("UNKNOWN_SCENE", f"no bundled scene {args.scene!r}")
            return EXIT_USAGE
        assignment = scene_mod.assignment_from_payload(data)
        scheme = (_scheme_from_file(data["scheme"])[0] if "scheme" in data
                  else _placeholder_scheme(assignment))
        report = validation.validate_assignment(assignment, scenes[args.scene], scheme, kb.rules)
    elif "dominant" in data:
        scheme, concepts = _scheme_from_file(data)
        report = validation.validate_scheme(scheme, concepts, kb.rules)
    else:
        _print_error("SCHEMA_VIOLATION",
                     "file is neither a scheme (dominant/...) nor an assignment (assignments)")
        return EXIT_USAGE
    if args.explain or report.violations:
        print(report.explain())
    else:
        print(report.verdict)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = args.bind.partition(":")
    app = create_app(
        knowledge_path=args.rules,
        backend_kind=args.backend,
        seed=args.seed,
    )
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8173))
    return EXIT_OK


def _print_error(code: str, message: str) -> None:
    print(json.dumps({"error": {"code": code, "message": message}}), file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromachain",
        description="Interior color-design ideation: staged generation and rule validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="run the full mock/live pipeline for one style+scene")
    gen.add_argument("--style", required=True, help="design intent, e.g. 'Warm and Cozy'")
    gen.add_argument("--scene", required=True, help="bundled scene id")
    gen.add_argument("--backend", choices=("mock", "live"), default="mock")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output directory for artifact files")
    gen.add_argument("--rules", help="knowledge config overriding the bundled one")
    gen.add_argument("--max-retries", type=int, default=3)
    gen.add_argument("--explain", action="store_true")
    gen.set_defaults(func=cmd_generate)

    val = sub.add_parser("validate", help="validate a scheme or assignment file")
    val.add_argument("file", help="scheme or assignment JSON file")
    val.add_argument("--scene", help="scene id (required for assignments)")
    val.add_argument("--rules", help="knowledge config overriding the bundled one")
    val.add_argument("--explain", action="store_true")
    val.set_defaults(func=cmd_validate)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--bind", default="127.0.0.1:8173")
    srv.add_argument("--backend", choices=("mock", "live"), default="mock")
    srv.add_argument("--seed", type=int, default=0)
    srv.add_argument("--rules", help="knowledge config overriding the bundled one")
    srv.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits with 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ChromaChainError as exc:
        _print_error(exc.code, exc.message)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
