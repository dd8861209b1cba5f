"""Stage orchestration: sessions, customization, locks, refinement,
persistence and event-log replay.

Each stage's output is the next stage's input; upstream edits mark
downstream artifacts stale and stale artifacts block the chain until
re-run. The event log records user inputs only, so replaying it against
the deterministic mock reproduces every artifact byte for byte.
"""

from __future__ import annotations

import dataclasses
import json
import uuid
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import artifacts, knowledge as knowledge_mod, prompts, scene as scene_mod, validation
from .artifacts import ColorScheme, DesignConcepts, ROLES, derive_variations
from .errors import (
    ChainIntegrityError,
    DegreeOutOfRange,
    EmptyIntent,
    LockConflict,
    NoValidAssignment,
    NoValidCandidate,
    SchemaViolation,
    UnknownElement,
    UnknownScene,
    UnknownTheme,
    ValidationRejected,
    VersionMismatch,
)
from .gateway import BackendConfig, complete_structured
from .knowledge import STAGE_COLORING, STAGE_IDEA, STAGE_WORD_COLOR, KnowledgeBase
from .ncs import format_ncs, parse_ncs
from .scene import ColorAssignment, SceneSpec
from .validation import ValidationReport

SESSION_SCHEMA_VERSION = 1

STALE_SCHEMES = "schemes"
STALE_ASSIGNMENT = "assignment"


@dataclass(frozen=True)
class SessionEvent:
    seq: int
    op: str
    payload: dict


@dataclass
class Session:
    id: str
    seed: int
    intent_history: list[str] = field(default_factory=list)
    concepts_candidates: list[DesignConcepts] = field(default_factory=list)
    concepts: DesignConcepts | None = None
    scheme_candidates: list[ColorScheme] = field(default_factory=list)
    chosen_scheme: int | None = None
    assignment: ColorAssignment | None = None
    scene_id: str | None = None
    locks: dict[str, str] = field(default_factory=dict)   # role -> frozen notation
    pins: dict[str, str] = field(default_factory=dict)    # element id -> notation
    stale: set[str] = field(default_factory=set)
    events: list[SessionEvent] = field(default_factory=list)
    scheme_report: ValidationReport | None = None
    assignment_report: ValidationReport | None = None

    @property
    def current_scheme(self) -> ColorScheme | None:
        if self.chosen_scheme is None:
            return None
        return self.scheme_candidates[self.chosen_scheme]

    def record(self, op: str, payload: dict) -> None:
        self.events.append(SessionEvent(seq=len(self.events), op=op, payload=payload))


class Pipeline:
    """Binds knowledge, templates, scenes and a backend into the staged flow."""

    def __init__(
        self,
        knowledge: KnowledgeBase | None = None,
        scenes: dict[str, SceneSpec] | None = None,
        cfg: BackendConfig | None = None,
        backend=None,
        template_dir: str | Path | None = None,
    ):
        self.knowledge = knowledge or knowledge_mod.load_knowledge()
        self.templates = prompts.load_templates(self.knowledge, template_dir)
        self.scenes = scenes if scenes is not None else scene_mod.load_scene_registry()
        self.cfg = cfg or BackendConfig()
        self.backend = backend

    # -- session lifecycle ---------------------------------------------------

    def new_session(self, seed: int | None = None, session_id: str | None = None) -> Session:
        return Session(id=session_id or uuid.uuid4().hex, seed=self.cfg.seed if seed is None else seed)

    def _session_cfg(self, session: Session) -> BackendConfig:
        return replace(self.cfg, seed=session.seed)

    def scene(self, scene_id: str) -> SceneSpec:
        if scene_id not in self.scenes:
            raise UnknownScene(f"no bundled scene {scene_id!r}")
        return self.scenes[scene_id]

    # -- stage 1 ----------------------------------------------------------------

    def stage1_concepts(self, session: Session, intent: str) -> list[DesignConcepts]:
        if not intent or not intent.strip():
            raise EmptyIntent("intent text must be non-empty")
        intent = intent.strip()
        rendered = prompts.render_prompt(
            self.templates[STAGE_IDEA], {"intent": intent}, self.knowledge,
            token_budget=self.cfg.max_tokens,
        )
        result = complete_structured(rendered, STAGE_IDEA, self._session_cfg(session), self.backend)
        candidates = [dataclasses.replace(c, source_intent=intent) for c in result.parsed_payload]
        session.intent_history.append(intent)
        session.concepts_candidates = candidates
        session.concepts = candidates[0]
        self._mark_stale(session)
        session.record("intent", {"text": intent})
        return candidates

    def customize_concepts(
        self,
        session: Session,
        add_themes: tuple[str, ...] = (),
        remove_themes: tuple[str, ...] = (),
        tones: int | None = None,
        distance: int | None = None,
        heaviness: int | None = None,
    ) -> DesignConcepts:
        if session.concepts is None:
            raise ChainIntegrityError("no concepts to customize; run the intent stage first")
        for name, degree in (("tones", tones), ("distance", distance), ("heaviness", heaviness)):
            if degree is not None and degree not in (0, 1, 2):
                raise DegreeOutOfRange(f"{name} degree {degree} not in {{0, 1, 2}}")
        themes = list(session.concepts.themes)
        for theme in remove_themes:
            if theme not in themes:
                raise UnknownTheme(f"cannot remove unknown theme {theme!r}")
            themes.remove(theme)
        for theme in add_themes:
            if theme not in themes:
                themes.append(theme)
        mood = session.concepts.mood
        new_mood = dataclasses.replace(
            mood,
            tones=mood.tones if tones is None else tones,
            distance=mood.distance if distance is None else distance,
            heaviness=mood.heaviness if heaviness is None else heaviness,
        )
        session.concepts = DesignConcepts(
            themes=tuple(themes), mood=new_mood, source_intent=session.concepts.source_intent
        )
        self._mark_stale(session)
        session.record("customize_concepts", {
            "add_themes": list(add_themes),
            "remove_themes": list(remove_themes),
            "tones": tones, "distance": distance, "heaviness": heaviness,
        })
        return session.concepts

    def _mark_stale(self, session: Session) -> None:
        if session.scheme_candidates:
            session.stale.add(STALE_SCHEMES)
        if session.assignment is not None:
            session.stale.add(STALE_ASSIGNMENT)

    # -- stage 2 ----------------------------------------------------------------

    def _locked_colors(self, session: Session) -> dict[str, str]:
        return dict(session.locks)

    def stage2_schemes(self, session: Session) -> list[ColorScheme]:
        if session.concepts is None:
            raise ChainIntegrityError("no concepts yet; run the intent stage first")
        concepts_payload = artifacts.concepts_to_payload(session.concepts)
        locks = self._locked_colors(session)
        reports: list[ValidationReport] = []
        feedback: str | None = None
        for _ in range(self.cfg.max_retries + 1):
            payload: dict = (
                dict(concepts_payload) if not locks and feedback is None
                else {"concepts": concepts_payload, "locks": locks}
            )
            if feedback is not None:
                payload = {"concepts": concepts_payload, "locks": locks, "feedback": feedback}
            rendered = prompts.render_prompt(
                self.templates[STAGE_WORD_COLOR], {"concepts": payload}, self.knowledge,
                token_budget=self.cfg.max_tokens,
            )
            result = complete_structured(rendered, STAGE_WORD_COLOR,
                                         self._session_cfg(session), self.backend)
            candidates: list[ColorScheme] = list(result.parsed_payload)
            batch_reports = [
                validation.validate_scheme(c, session.concepts, self.knowledge.rules)
                for c in candidates
            ]
            passing = [c for c, r in zip(candidates, batch_reports) if r.passed]
            reports.extend(batch_reports)
            if passing:
                self._assert_locks_held(session, passing)
                session.scheme_candidates = passing
                session.chosen_scheme = None
                session.stale.discard(STALE_SCHEMES)
                if session.assignment is not None:
                    session.stale.add(STALE_ASSIGNMENT)
                session.scheme_report = None
                session.record("generate_schemes", {})
                return passing
            feedback = "; ".join(
                v.message for r in batch_reports for v in r.errors
            ) or "no candidate parsed"
        raise NoValidCandidate(
            f"no scheme candidate passed validation after {self.cfg.max_retries + 1} attempts",
            reports=reports,
        )

    def _assert_locks_held(self, session: Session, candidates: list[ColorScheme]) -> None:
        for role, notation in session.locks.items():
            for candidate in candidates:
                if format_ncs(candidate.role_color(role)) != notation:
                    raise LockConflict(
                        f"regeneration altered locked {role} color {notation}"
                    )

    def choose_scheme(self, session: Session, index: int) -> ColorScheme:
        self._require_fresh_schemes(session)
        if not 0 <= index < len(session.scheme_candidates):
            raise SchemaViolation(f"scheme index {index} out of range")
        session.chosen_scheme = index
        if session.assignment is not None:
            session.stale.add(STALE_ASSIGNMENT)
        session.record("choose_scheme", {"index": index})
        return session.scheme_candidates[index]

    def _require_fresh_schemes(self, session: Session) -> None:
        if not session.scheme_candidates:
            raise ChainIntegrityError("no scheme candidates; run the scheme stage first")
        if STALE_SCHEMES in session.stale:
            raise ChainIntegrityError("scheme candidates are stale; re-run the scheme stage")

    def _require_chosen_scheme(self, session: Session) -> ColorScheme:
        self._require_fresh_schemes(session)
        if session.chosen_scheme is None:
            raise ChainIntegrityError("no scheme chosen yet")
        return session.scheme_candidates[session.chosen_scheme]

    def customize_scheme(
        self,
        session: Session,
        edits: dict[str, str] | None = None,
        lock: tuple[str, ...] = (),
        unlock: tuple[str, ...] = (),
        instruction: str | None = None,
    ) -> ColorScheme:
        current = self._require_chosen_scheme(session)
        for role in tuple(lock) + tuple(unlock):
            if role not in ROLES:
                raise SchemaViolation(f"unknown role {role!r}")
        for role in unlock:
            session.locks.pop(role, None)
        for role in lock:
            session.locks[role] = format_ncs(current.role_color(role))

        updated = current
        if edits:
            for role, notation in edits.items():
                if role not in ROLES:
                    raise SchemaViolation(f"unknown role {role!r}")
                if role in session.locks:
                    raise LockConflict(f"{role} is locked; unlock it before editing")
                color = parse_ncs(notation)
                updated = updated.with_role_color(role, color, derive_variations(color))

        if instruction is not None:
            if all(role in session.locks for role in ROLES):
                raise LockConflict("every role is locked; the instruction cannot change anything")
            mentioned = [role for role in ROLES if role in instruction.lower()]
            conflicted = [role for role in mentioned if role in session.locks]
            if conflicted:
                raise LockConflict(
                    f"instruction targets locked role(s): {', '.join(conflicted)}"
                )
            payload = {
                "concepts": artifacts.concepts_to_payload(session.concepts),
                "instruction": instruction,
                "current_scheme": artifacts.scheme_to_payload(updated),
                "locks": self._locked_colors(session),
            }
            rendered = prompts.render_prompt(
                self.templates[STAGE_WORD_COLOR], {"concepts": payload}, self.knowledge,
                token_budget=self.cfg.max_tokens,
            )
            result = complete_structured(rendered, STAGE_WORD_COLOR,
                                         self._session_cfg(session), self.backend)
            updated = result.parsed_payload[0]

        for role, notation in session.locks.items():
            if format_ncs(updated.role_color(role)) != notation:
                raise LockConflict(f"edit would change locked {role} color {notation}")

        report = validation.validate_scheme(updated, session.concepts, self.knowledge.rules,
                                            previous=current)
        if not report.passed:
            raise ValidationRejected("scheme edit rejected by validators", report=report)
        session.scheme_candidates[session.chosen_scheme] = updated
        session.scheme_report = report
        if session.assignment is not None:
            session.stale.add(STALE_ASSIGNMENT)
        session.record("customize_scheme", {
            "edits": dict(edits or {}),
            "lock": list(lock), "unlock": list(unlock),
            "instruction": instruction,
        })
        return updated

    # -- stage 3 ----------------------------------------------------------------

    def stage3_assign(self, session: Session, scene_id: str) -> ColorAssignment:
        scheme = self._require_chosen_scheme(session)
        scene = self.scene(scene_id)
        scheme_payload = artifacts.scheme_to_payload(scheme)
        pins = {
            eid: notation for eid, notation in session.pins.items()
            if any(e.id == eid for e in scene.colorable_elements)
        }
        reports: list[ValidationReport] = []
        feedback: str | None = None
        for _ in range(self.cfg.max_retries + 1):
            request = {
                "scene": scene.id,
                "scene_description": scene_mod.describe_scene(scene),
                "scheme": scheme_payload,
                "pins": pins,
            }
            if feedback is not None:
                request["feedback"] = feedback
            rendered = prompts.render_prompt(
                self.templates[STAGE_COLORING], {"request": request}, self.knowledge,
                scene_id=scene.id, token_budget=self.cfg.max_tokens,
            )
            result = complete_structured(rendered, STAGE_COLORING,
                                         self._session_cfg(session), self.backend)
            assignment: ColorAssignment = result.parsed_payload
            for eid, notation in pins.items():
                if format_ncs(assignment.color_of(eid)) != notation:
                    assignment = assignment.with_color(eid, parse_ncs(notation))
            report = validation.validate_assignment(assignment, scene, scheme,
                                                    self.knowledge.rules)
            reports.append(report)
            if report.passed:
                session.assignment = assignment
                session.scene_id = scene.id
                session.assignment_report = report
                session.stale.discard(STALE_ASSIGNMENT)
                session.record("assign", {"scene": scene.id})
                return assignment
            feedback = "; ".join(v.message for v in report.errors)
        raise NoValidAssignment(
            f"no valid assignment after {self.cfg.max_retries + 1} attempts",
            reports=reports,
        )

    def _require_fresh_assignment(self, session: Session) -> ColorAssignment:
        if session.assignment is None:
            raise ChainIntegrityError("no assignment yet; run the coloring stage first")
        if STALE_ASSIGNMENT in session.stale:
            raise ChainIntegrityError("assignment is stale; re-run the coloring stage")
        return session.assignment

    def refine_result(
        self,
        session: Session,
        instruction: str | None = None,
        element_id: str | None = None,
        color: str | None = None,
    ) -> ColorAssignment:
        current = self._require_fresh_assignment(session)
        scheme = self._require_chosen_scheme(session)
        scene = self.scene(session.scene_id)
        if element_id is not None:
            if element_id not in {e.id for e in scene.colorable_elements}:
                raise UnknownElement(f"scene {scene.id!r} has no colorable element {element_id!r}")
            if color is None:
                raise SchemaViolation("element override needs a color")
            parsed = parse_ncs(color)
            updated = current.with_color(element_id, parsed)
            report = validation.validate_assignment(updated, scene, scheme, self.knowledge.rules)
            if not report.passed:
                raise ValidationRejected("element recolor rejected by validators", report=report)
            session.assignment = updated
            session.assignment_report = report
            session.pins[element_id] = format_ncs(parsed)  # survive later regenerations
            session.record("refine", {"element_id": element_id, "color": format_ncs(parsed)})
            return updated
        if instruction is None or not instruction.strip():
            raise EmptyIntent("refinement needs an instruction or an element override")
        instruction = instruction.strip()
        request = {
            "scene": scene.id,
            "scheme": artifacts.scheme_to_payload(scheme),
            "instruction": instruction,
            "current_assignment": scene_mod.assignment_to_payload(current),
            "pins": dict(session.pins),
        }
        rendered = prompts.render_prompt(
            self.templates[STAGE_COLORING], {"request": request}, self.knowledge,
            scene_id=scene.id, token_budget=self.cfg.max_tokens,
        )
        result = complete_structured(rendered, STAGE_COLORING,
                                     self._session_cfg(session), self.backend)
        updated = result.parsed_payload
        for eid, notation in session.pins.items():
            if eid in updated.entries and format_ncs(updated.color_of(eid)) != notation:
                updated = updated.with_color(eid, parse_ncs(notation))
        report = validation.validate_assignment(updated, scene, scheme, self.knowledge.rules)
        if not report.passed:
            raise ValidationRejected("refinement rejected by validators", report=report)
        session.assignment = updated
        session.assignment_report = report
        session.intent_history.append(instruction)
        session.record("refine", {"instruction": instruction})
        return updated

    # -- derived artifacts ---------------------------------------------------------

    def stats(self, session: Session):
        assignment = self._require_fresh_assignment(session)
        return scene_mod.compute_stats(assignment, self.scene(session.scene_id))

    def export_bundle(self, session: Session) -> dict:
        """Self-contained result bundle; contains no ids or wall-clock data,
        so identical runs export identical bytes."""
        assignment = self._require_fresh_assignment(session)
        scheme = self._require_chosen_scheme(session)
        stats = self.stats(session)
        return {
            "intent": session.intent_history[0] if session.intent_history else "",
            "concepts": _concepts_session_payload(session.concepts),
            "scheme": artifacts.scheme_to_payload(scheme),
            "assignment": scene_mod.assignment_to_payload(assignment),
            "stats": scene_mod.stats_to_payload(stats),
            "scene": session.scene_id,
            "locks": dict(sorted(session.locks.items())),
            "pins": dict(sorted(session.pins.items())),
            "scheme_report": session.scheme_report.to_payload() if session.scheme_report else None,
            "assignment_report": (session.assignment_report.to_payload()
                                  if session.assignment_report else None),
        }


# --- persistence ------------------------------------------------------------------

def _concepts_session_payload(c: DesignConcepts | None) -> dict | None:
    if c is None:
        return None
    payload = artifacts.concepts_to_payload(c)
    payload["source_intent"] = c.source_intent
    return payload


def _concepts_from_session_payload(data: dict | None) -> DesignConcepts | None:
    if data is None:
        return None
    return artifacts.concepts_from_payload(data, source_intent=str(data.get("source_intent", "")))


def session_to_payload(session: Session) -> dict:
    return {
        "schema_version": SESSION_SCHEMA_VERSION,
        "id": session.id,
        "seed": session.seed,
        "intent_history": list(session.intent_history),
        "concepts_candidates": [_concepts_session_payload(c) for c in session.concepts_candidates],
        "concepts": _concepts_session_payload(session.concepts),
        "scheme_candidates": [artifacts.scheme_to_payload(s) for s in session.scheme_candidates],
        "chosen_scheme": session.chosen_scheme,
        "assignment": (scene_mod.assignment_to_payload(session.assignment)
                       if session.assignment else None),
        "scene_id": session.scene_id,
        "locks": dict(sorted(session.locks.items())),
        "pins": dict(sorted(session.pins.items())),
        "stale": sorted(session.stale),
        "events": [{"seq": e.seq, "op": e.op, "payload": e.payload} for e in session.events],
    }


def session_from_payload(data: dict) -> Session:
    if not isinstance(data, dict) or "schema_version" not in data:
        raise SchemaViolation("session file needs a schema_version field")
    version = data["schema_version"]
    if version != SESSION_SCHEMA_VERSION:
        raise VersionMismatch(
            f"session file has schema_version {version}, this build supports "
            f"{SESSION_SCHEMA_VERSION}"
        )
    session = Session(id=str(data["id"]), seed=int(data["seed"]))
    session.intent_history = [str(t) for t in data.get("intent_history", [])]
    session.concepts_candidates = [
        _concepts_from_session_payload(c) for c in data.get("concepts_candidates", [])
    ]
    session.concepts = _concepts_from_session_payload(data.get("concepts"))
    session.scheme_candidates = [
        artifacts.scheme_from_payload(s) for s in data.get("scheme_candidates", [])
    ]
    session.chosen_scheme = data.get("chosen_scheme")
    raw_assignment = data.get("assignment")
    session.assignment = (scene_mod.assignment_from_payload(raw_assignment)
                          if raw_assignment else None)
    session.scene_id = data.get("scene_id")
    session.locks = {str(k): str(v) for k, v in data.get("locks", {}).items()}
    session.pins = {str(k): str(v) for k, v in data.get("pins", {}).items()}
    session.stale = set(data.get("stale", []))
    session.events = [
        SessionEvent(seq=int(e["seq"]), op=str(e["op"]), payload=e.get("payload", {}))
        for e in data.get("events", [])
    ]
    return session


def save_session(session: Session, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(session_to_payload(session), sort_keys=True, indent=2, ensure_ascii=False),
        encoding="utf-8",
    )


def load_session(path: str | Path) -> Session:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"session file {path}: invalid JSON ({exc})") from exc
    return session_from_payload(data)


def replay_session(pipeline: Pipeline, events: list[SessionEvent], seed: int) -> Session:
    """Re-drive the public operations from a recorded event log. With the
    mock backend the resulting artifacts match the originals byte for byte."""
    session = pipeline.new_session(seed=seed)
    for event in sorted(events, key=lambda e: e.seq):
        payload = event.payload
        if event.op == "intent":
            pipeline.stage1_concepts(session, payload["text"])
        elif event.op == "customize_concepts":
            pipeline.customize_concepts(
                session,
                add_themes=tuple(payload.get("add_themes", [])),
                remove_themes=tuple(payload.get("remove_themes", [])),
                tones=payload.get("tones"),
                distance=payload.get("distance"),
                heaviness=payload.get("heaviness"),
            )
        elif event.op == "generate_schemes":
            pipeline.stage2_schemes(session)
        elif event.op == "choose_scheme":
            pipeline.choose_scheme(session, payload["index"])
        elif event.op == "customize_scheme":
            pipeline.customize_scheme(
                session,
                edits=payload.get("edits") or None,
                lock=tuple(payload.get("lock", [])),
                unlock=tuple(payload.get("unlock", [])),
                instruction=payload.get("instruction"),
            )
        elif event.op == "assign":
            pipeline.stage3_assign(session, payload["scene"])
        elif event.op == "refine":
            if "element_id" in payload:
                pipeline.refine_result(session, element_id=payload["element_id"],
                                       color=payload["color"])
            else:
                pipeline.refine_result(session, instruction=payload["instruction"])
        else:
            raise SchemaViolation(f"unknown event op {event.op!r}")
    return session
