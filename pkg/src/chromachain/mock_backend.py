"""Deterministic rule-based stand-in for the live model.

The mock turns stage payloads into structured outputs through a keyword
lexicon and fixed palette tables (data/lexicon.json), so the whole
pipeline runs offline and byte-identically for a fixed (payload, seed).
Composition ratios follow the bundled default rules.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from pathlib import Path

from .artifacts import ROLES, canonical_json, derive_variations
from .errors import UnknownScene, UnknownStage
from .knowledge import STAGE_COLORING, STAGE_IDEA, STAGE_WORD_COLOR, CompositionRules
from .ncs import NcsColor, format_ncs, parse_ncs
from .scene import SceneSpec, load_scene_registry

LEXICON_PATH = Path(__file__).parent / "data" / "lexicon.json"

_WORD_RE = re.compile(r"[a-z]+")


@lru_cache(maxsize=1)
def load_lexicon() -> dict:
    return json.loads(LEXICON_PATH.read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def _scenes() -> dict[str, SceneSpec]:
    return load_scene_registry()


def _matched_entries(intent: str, lexicon: dict) -> list[dict]:
    words = set(_WORD_RE.findall(intent.lower()))
    return [e for e in lexicon["entries"] if words.intersection(e["keywords"])]


def _merge_concepts(intent: str, lexicon: dict) -> tuple[list[str], dict, str]:
    """Themes, mood and palette hint for an intent; multiple keyword hits
    merge deterministically in lexicon order."""
    matched = _matched_entries(intent, lexicon)
    if not matched:
        matched = [lexicon["default"]]
    themes: list[str] = []
    for entry in matched:
        for theme in entry["themes"]:
            if theme not in themes:
                themes.append(theme)
    themes = themes[:5]
    while len(themes) < 5:
        for theme in lexicon["default"]["themes"]:
            if theme not in themes:
                themes.append(theme)
                break
    mood = {
        attr: int((sum(e["mood"][attr] for e in matched) / len(matched)) + 0.5)
        for attr in ("tones", "distance", "heaviness")
    }
    return themes, mood, matched[0]["palette"]


def _palette_for_concepts(concepts: dict, lexicon: dict) -> str:
    themes = set(concepts.get("themes", []))
    for entry in lexicon["entries"]:
        if themes.intersection(entry["themes"]):
            return entry["palette"]
    tones = concepts.get("mood", {}).get("tones", 1)
    return {2: "warm", 0: "cool"}.get(tones, "neutral")


def _scheme_payload(colors: dict[str, NcsColor], reasoning: str) -> dict:
    payload: dict = {}
    for role in ROLES:
        payload[role] = {
            "color": format_ncs(colors[role]),
            "variations": [format_ncs(v) for v in derive_variations(colors[role])],
        }
    payload["reasoning"] = reasoning
    return payload


# --- stage 1 ------------------------------------------------------------------

def _mock_idea(payload, seed: int) -> list[dict]:
    intent = payload if isinstance(payload, str) else payload.get("intent", "")
    lexicon = load_lexicon()
    themes, mood, _ = _merge_concepts(intent, lexicon)
    candidates = []
    for k in range(3):
        rotated = themes[k:] + themes[:k]
        candidates.append({"themes": rotated, "mood": dict(mood)})
    return candidates


# --- stage 2 ------------------------------------------------------------------

def _apply_scheme_instruction(current: dict, instruction: str, locks: dict) -> dict:
    text = instruction.lower()
    if any(w in text for w in ("brighter", "lighter")):
        delta = -15
    elif "darker" in text:
        delta = +15
    else:
        return current  # unrecognized instructions leave the scheme untouched
    out: dict = {"reasoning": current.get("reasoning", "")}
    for role in ROLES:
        entry = current[role]
        if role in locks:
            out[role] = {"color": entry["color"], "variations": list(entry.get("variations", []))}
            continue

        def shift(notation: str) -> str:
            color = parse_ncs(notation)
            b = min(max(0, color.blackness + delta), 100 - color.chromaticness)
            return format_ncs(color.replace(blackness=b))

        out[role] = {
            "color": shift(entry["color"]),
            "variations": [shift(v) for v in entry.get("variations", [])],
        }
    return out


def _mock_word_color(payload: dict, seed: int) -> list[dict]:
    lexicon = load_lexicon()
    locks = payload.get("locks", {})
    if "instruction" in payload and "current_scheme" in payload:
        return [_apply_scheme_instruction(payload["current_scheme"],
                                          payload["instruction"], locks)]
    concepts = payload.get("concepts", payload)
    palette_name = _palette_for_concepts(concepts, lexicon)
    rows = lexicon["palettes"][palette_name]
    base_reason = lexicon["scheme_reasons"][palette_name]
    themes = concepts.get("themes", [])
    theme_note = f" Fits themes: {', '.join(themes[:3])}." if themes else ""
    candidates = []
    for k in range(4):
        row = rows[(seed + k) % len(rows)]
        colors = {role: parse_ncs(row[role]) for role in ROLES}
        for role, notation in locks.items():
            colors[role] = parse_ncs(notation)
        reasoning = f"{base_reason}{theme_note} (option {k + 1})"
        candidates.append(_scheme_payload(colors, reasoning))
    return candidates


# --- stage 3 ------------------------------------------------------------------

def greedy_roles(scene: SceneSpec, rules: CompositionRules) -> dict[str, str]:
    """Sort colorable elements by area descending (id breaks ties), fill the
    dominant window first, then secondary, then accent; leftovers go to the
    first role with headroom, dominant first."""
    order = sorted(scene.colorable_elements, key=lambda e: (-e.area_fraction, e.id))
    sums = {role: 0.0 for role in ROLES}
    roles: dict[str, str] = {}
    for e in order:
        placed = False
        for role in ROLES:
            lo, hi = rules.window(role)
            if sums[role] < lo - 1e-9 and sums[role] + e.area_fraction <= hi + 1e-9:
                roles[e.id], placed = role, True
                sums[role] += e.area_fraction
                break
        if not placed:
            for role in ROLES:
                hi = rules.window(role)[1]
                if sums[role] + e.area_fraction <= hi + 1e-9:
                    roles[e.id], placed = role, True
                    sums[role] += e.area_fraction
                    break
        if not placed:
            role = max(ROLES, key=lambda r: rules.slack_window(r)[1] - sums[r])
            roles[e.id] = role
            sums[role] += e.area_fraction
    return roles


def _assignment_reason(scheme: dict, scene: SceneSpec) -> str:
    return (
        f"Large structural surfaces of the {scene.name.lower()} carry the dominant "
        f"{scheme['dominant']['color']}, mid-sized furnishings take the secondary "
        f"{scheme['secondary']['color']}, and small decorative pieces receive the "
        f"accent {scheme['accent']['color']} so the composition ratios hold."
    )


def _mock_coloring_generate(payload: dict, seed: int) -> dict:
    scene = _require_scene(payload)
    scheme = payload["scheme"]
    pins = payload.get("pins", {})
    rules = CompositionRules()
    roles = greedy_roles(scene, rules)
    swatch_cycle = {
        role: [scheme[role]["color"]] + list(scheme[role].get("variations", []))
        for role in ROLES
    }
    order = sorted(scene.colorable_elements, key=lambda e: (-e.area_fraction, e.id))
    counters = {role: 0 for role in ROLES}
    assignments: dict[str, dict] = {}
    for e in order:
        role = roles[e.id]
        swatches = swatch_cycle[role]
        color = swatches[(counters[role] + seed) % len(swatches)]
        counters[role] += 1
        if e.id in pins:
            color = format_ncs(parse_ncs(pins[e.id]))
        assignments[e.id] = {"role": role, "color": color}
    return {
        "assignments": {eid: assignments[eid] for eid in sorted(assignments)},
        "reasoning": _assignment_reason(scheme, scene),
    }


def _require_scene(payload: dict) -> SceneSpec:
    scene_id = payload.get("scene")
    registry = _scenes()
    if scene_id not in registry:
        raise UnknownScene(f"mock backend knows no scene {scene_id!r}")
    return registry[scene_id]


def _mock_coloring_refine(payload: dict, seed: int) -> dict:
    scene = _require_scene(payload)
    scheme = payload["scheme"]
    pins = payload.get("pins", {})
    instruction = payload["instruction"].lower()
    current = payload["current_assignment"]["assignments"]
    reasoning = payload["current_assignment"].get("reasoning", "")

    def shifted(notation: str, delta: int) -> str:
        color = parse_ncs(notation)
        b = min(max(0, color.blackness + delta), 100 - color.chromaticness)
        return format_ncs(color.replace(blackness=b))

    out: dict[str, dict] = {}
    for eid, entry in current.items():
        role, color = entry["role"], entry["color"]
        if eid in pins:
            color = format_ncs(parse_ncs(pins[eid]))
        elif "furniture" in instruction and "dark" in instruction:
            if not scene.element(eid).is_structural:
                color = shifted(color, -15)
        elif any(w in instruction for w in ("messy", "chaotic", "tidy")):
            color = scheme[role]["color"]
        elif any(w in instruction for w in ("brighter", "lighter")):
            color = shifted(color, -15)
        elif "darker" in instruction:
            color = shifted(color, +15)
        out[eid] = {"role": role, "color": color}
    return {"assignments": {eid: out[eid] for eid in sorted(out)}, "reasoning": reasoning}


def _mock_coloring(payload: dict, seed: int) -> dict:
    if "instruction" in payload and "current_assignment" in payload:
        return _mock_coloring_refine(payload, seed)
    return _mock_coloring_generate(payload, seed)


def mock_generate(stage: str, payload, seed: int):
    """Structured output for a stage payload; identical bytes for identical
    (stage, payload, seed)."""
    if stage == STAGE_IDEA:
        return _mock_idea(payload, seed)
    if stage == STAGE_WORD_COLOR:
        return _mock_word_color(payload, seed)
    if stage == STAGE_COLORING:
        return _mock_coloring(payload, seed)
    raise UnknownStage(f"mock backend knows no stage {stage!r}")


def mock_generate_text(stage: str, payload, seed: int) -> str:
    """The raw-text form a real backend would return."""
    return canonical_json(mock_generate(stage, payload, seed))
