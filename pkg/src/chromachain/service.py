"""HTTP+JSON surface over the pipeline.

The service adds transport and session lookup only; every number shown in
a client (hex previews included) originates here, never from client-side
color math. Requests touching one session are serialized by a per-session
lock.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import artifacts, pipeline as pipeline_mod, scene as scene_mod
from .errors import ChromaChainError, UnknownSession
from .gateway import BackendConfig
from .knowledge import load_knowledge
from .ncs import ncs_to_hex, parse_ncs
from .pipeline import Pipeline, Session, session_from_payload, session_to_payload
from .scene import load_scene_registry

_STATUS_BY_CODE = {
    "MALFORMED_NOTATION": 422,
    "INVALID_SUM": 422,
    "INCONSISTENT_NEUTRAL": 422,
    "NON_ADJACENT_HUE_PAIR": 422,
    "NEUTRAL_HAS_NO_ANGLE": 422,
    "SCHEMA_VIOLATION": 422,
    "EXAMPLE_PARSE_FAILURE": 422,
    "AREA_SUM_MISMATCH": 422,
    "DANGLING_ADJACENCY": 422,
    "VERSION_MISMATCH": 422,
    "TOKEN_BUDGET_EXCEEDED": 502,
    "MISSING_BINDING": 422,
    "BACKEND_UNREACHABLE": 502,
    "BACKEND_TIMEOUT": 504,
    "UNPARSEABLE_AFTER_RETRIES": 502,
    "BUDGET_EXCEEDED": 502,
    "UNKNOWN_STAGE": 422,
    "EMPTY_INTENT": 422,
    "UNKNOWN_THEME": 404,
    "DEGREE_OUT_OF_RANGE": 422,
    "CHAIN_INTEGRITY": 409,
    "LOCK_CONFLICT": 409,
    "NO_VALID_CANDIDATE": 502,
    "NO_VALID_ASSIGNMENT": 502,
    "VALIDATION_REJECTED": 422,
    "UNKNOWN_ELEMENT": 404,
    "UNCOVERED_ELEMENT": 422,
    "UNKNOWN_SCENE": 404,
    "UNKNOWN_SESSION": 404,
}


class CreateSessionBody(BaseModel):
    seed: int | None = None


class IntentBody(BaseModel):
    text: str


class ConceptsPatch(BaseModel):
    add_themes: list[str] = []
    remove_themes: list[str] = []
    tones: int | None = None
    distance: int | None = None
    heaviness: int | None = None


class SchemePatch(BaseModel):
    choose: int | None = None
    edits: dict[str, str] | None = None
    lock: list[str] = []
    unlock: list[str] = []
    instruction: str | None = None


class AssignBody(BaseModel):
    scene_id: str


class RefineBody(BaseModel):
    instruction: str | None = None
    element_id: str | None = None
    color: str | None = None


class _SessionStore:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def add(self, session: Session) -> None:
        with self._guard:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    def get(self, session_id: str) -> tuple[Session, threading.Lock]:
        with self._guard:
            if session_id not in self._sessions:
                raise UnknownSession(f"no session {session_id!r}")
            return self._sessions[session_id], self._locks[session_id]


def _with_hex(notation: str, anchors) -> dict:
    return {"ncs": notation, "hex": ncs_to_hex(parse_ncs(notation), anchors)}


def _decorate_scheme(payload: dict, anchors) -> dict:
    out: dict = {"reasoning": payload.get("reasoning", "")}
    for role in artifacts.ROLES:
        entry = payload[role]
        out[role] = {
            "color": _with_hex(entry["color"], anchors),
            "variations": [_with_hex(v, anchors) for v in entry.get("variations", [])],
        }
    return out


def _decorate_assignment(payload: dict, anchors) -> dict:
    return {
        "assignments": {
            eid: {"role": entry["role"], "color": _with_hex(entry["color"], anchors)}
            for eid, entry in payload["assignments"].items()
        },
        "reasoning": payload.get("reasoning", ""),
    }


def create_app(
    knowledge_path: str | Path | None = None,
    scene_dir: str | Path | None = None,
    template_dir: str | Path | None = None,
    backend_kind: str = "mock",
    seed: int = 0,
    pipeline: Pipeline | None = None,
) -> FastAPI:
    if pipeline is None:
        kb = load_knowledge(knowledge_path)
        pipeline = Pipeline(
            knowledge=kb,
            scenes=load_scene_registry(scene_dir),
            cfg=BackendConfig(kind=backend_kind, seed=seed),
            template_dir=template_dir,
        )
    anchors = pipeline.knowledge.rgb_anchors
    app = FastAPI(title="chromachain", version="0.1.0")
    store = _SessionStore()
    app.state.pipeline = pipeline
    app.state.store = store

    @app.exception_handler(ChromaChainError)
    async def _domain_error(request: Request, exc: ChromaChainError):
        details = dict(exc.details)
        report = getattr(exc, "report", None)
        if report is not None:
            details["report"] = report.to_payload()
        reports = getattr(exc, "reports", None)
        if reports:
            details["reports"] = [r.to_payload() for r in reports]
        return JSONResponse(
            status_code=_STATUS_BY_CODE.get(exc.code, 500),
            content={"error": {"code": exc.code, "message": exc.message, "details": details}},
        )

    def _session_view(session: Session) -> dict:
        return {
            "id": session.id,
            "seed": session.seed,
            "intent_history": list(session.intent_history),
            "scene_id": session.scene_id,
            "locks": dict(sorted(session.locks.items())),
            "pins": dict(sorted(session.pins.items())),
            "stale": sorted(session.stale),
            "has_concepts": session.concepts is not None,
            "has_schemes": bool(session.scheme_candidates),
            "chosen_scheme": session.chosen_scheme,
            "has_assignment": session.assignment is not None,
        }

    def _concepts_view(session: Session) -> dict:
        return {
            "concepts": pipeline_mod._concepts_session_payload(session.concepts),
            "candidates": [
                pipeline_mod._concepts_session_payload(c) for c in session.concepts_candidates
            ],
            "stale": sorted(session.stale),
        }

    def _scheme_view(session: Session) -> dict:
        return {
            "chosen_index": session.chosen_scheme,
            "scheme": (_decorate_scheme(artifacts.scheme_to_payload(session.current_scheme), anchors)
                       if session.current_scheme else None),
            "candidates": [
                _decorate_scheme(artifacts.scheme_to_payload(c), anchors)
                for c in session.scheme_candidates
            ],
            "locks": dict(sorted(session.locks.items())),
            "stale": sorted(session.stale),
            "report": session.scheme_report.to_payload() if session.scheme_report else None,
        }

    def _assignment_view(session: Session) -> dict:
        return {
            "scene_id": session.scene_id,
            "assignment": (_decorate_assignment(
                scene_mod.assignment_to_payload(session.assignment), anchors)
                if session.assignment else None),
            "report": (session.assignment_report.to_payload()
                       if session.assignment_report else None),
            "stale": sorted(session.stale),
        }

    @app.post("/sessions")
    def create_session(body: CreateSessionBody | None = None):
        session = pipeline.new_session(seed=body.seed if body else None)
        store.add(session)
        return _session_view(session)

    @app.post("/sessions/import")
    def import_session(payload: dict = Body(...)):
        session = session_from_payload(payload)
        store.add(session)
        return _session_view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session, _ = store.get(session_id)
        return _session_view(session)

    @app.get("/sessions/{session_id}/session-file")
    def session_file(session_id: str):
        session, _ = store.get(session_id)
        return session_to_payload(session)

    @app.post("/sessions/{session_id}/intent")
    def post_intent(session_id: str, body: IntentBody):
        session, lock = store.get(session_id)
        with lock:
            pipeline.stage1_concepts(session, body.text)
            return _concepts_view(session)

    @app.get("/sessions/{session_id}/concepts")
    def get_concepts(session_id: str):
        session, _ = store.get(session_id)
        return _concepts_view(session)

    @app.patch("/sessions/{session_id}/concepts")
    def patch_concepts(session_id: str, body: ConceptsPatch):
        session, lock = store.get(session_id)
        with lock:
            pipeline.customize_concepts(
                session,
                add_themes=tuple(body.add_themes),
                remove_themes=tuple(body.remove_themes),
                tones=body.tones, distance=body.distance, heaviness=body.heaviness,
            )
            return _concepts_view(session)

    @app.post("/sessions/{session_id}/schemes")
    def post_schemes(session_id: str):
        session, lock = store.get(session_id)
        with lock:
            pipeline.stage2_schemes(session)
            return _scheme_view(session)

    @app.get("/sessions/{session_id}/scheme")
    def get_scheme(session_id: str):
        session, _ = store.get(session_id)
        return _scheme_view(session)

    @app.patch("/sessions/{session_id}/scheme")
    def patch_scheme(session_id: str, body: SchemePatch):
        session, lock = store.get(session_id)
        with lock:
            if body.choose is not None:
                pipeline.choose_scheme(session, body.choose)
            if body.edits or body.lock or body.unlock or body.instruction is not None:
                pipeline.customize_scheme(
                    session,
                    edits=body.edits,
                    lock=tuple(body.lock),
                    unlock=tuple(body.unlock),
                    instruction=body.instruction,
                )
            return _scheme_view(session)

    @app.post("/sessions/{session_id}/assignment")
    def post_assignment(session_id: str, body: AssignBody):
        session, lock = store.get(session_id)
        with lock:
            pipeline.stage3_assign(session, body.scene_id)
            return _assignment_view(session)

    @app.get("/sessions/{session_id}/assignment")
    def get_assignment(session_id: str):
        session, _ = store.get(session_id)
        return _assignment_view(session)

    @app.post("/sessions/{session_id}/refinement")
    def post_refinement(session_id: str, body: RefineBody):
        session, lock = store.get(session_id)
        with lock:
            pipeline.refine_result(
                session,
                instruction=body.instruction,
                element_id=body.element_id,
                color=body.color,
            )
            return _assignment_view(session)

    @app.get("/sessions/{session_id}/stats")
    def get_stats(session_id: str):
        session, _ = store.get(session_id)
        return scene_mod.stats_to_payload(pipeline.stats(session))

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str):
        session, _ = store.get(session_id)
        return pipeline.export_bundle(session)

    @app.get("/scenes")
    def list_scenes():
        return [
            {
                "id": s.id,
                "name": s.name,
                "element_count": len(s.elements),
                "colorable_count": len(s.colorable_elements),
            }
            for s in sorted(pipeline.scenes.values(), key=lambda s: s.id)
        ]

    @app.get("/scenes/{scene_id}")
    def get_scene(scene_id: str):
        spec = pipeline.scene(scene_id)
        payload = scene_mod.scene_to_payload(spec)
        for element in payload["elements"]:
            if "fixed_color" in element:
                element["fixed_color"] = _with_hex(element["fixed_color"], anchors)
        return payload

    return app
