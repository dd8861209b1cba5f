"""Cross-stage artifacts and their wire payload codecs.

Stage outputs travel as JSON: stage 1 emits a list of concept candidates,
stage 2 a list of scheme candidates, stage 3 a single element assignment.
The same codecs serialize few-shot examples into prompts and parse model
output back, so render and parse stay symmetric by construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import SchemaViolation
from .ncs import ColorMood, NcsColor, format_ncs, parse_ncs

ROLES = ("dominant", "secondary", "accent")


@dataclass(frozen=True)
class DesignConcepts:
    """Stage-1 artifact: theme tags plus a quantified color mood."""

    themes: tuple[str, ...]
    mood: ColorMood
    source_intent: str = ""

    def __post_init__(self):
        if not 1 <= len(self.themes) <= 8:
            raise SchemaViolation(f"theme count {len(self.themes)} outside [1, 8]")
        if any(not t.strip() for t in self.themes):
            raise SchemaViolation("themes must be non-empty")


@dataclass(frozen=True)
class ColorScheme:
    """Stage-2 artifact: three role colors, per-role variation swatches
    (same hue, varied blackness/chromaticness) and reasoning text."""

    dominant: NcsColor
    secondary: NcsColor
    accent: NcsColor
    variations: dict[str, tuple[NcsColor, ...]] = field(default_factory=dict)
    reasoning: str = ""

    def __post_init__(self):
        unknown = set(self.variations) - set(ROLES)
        if unknown:
            raise SchemaViolation(f"variations for unknown role {sorted(unknown)[0]!r}")
        normalized = {role: tuple(self.variations.get(role, ())) for role in ROLES}
        for role, swatches in normalized.items():
            if len(swatches) > 3:
                raise SchemaViolation(f"role {role!r} carries {len(swatches)} variations, max 3")
        object.__setattr__(self, "variations", normalized)

    def role_color(self, role: str) -> NcsColor:
        if role not in ROLES:
            raise SchemaViolation(f"unknown role {role!r}")
        return getattr(self, role)

    def role_variations(self, role: str) -> tuple[NcsColor, ...]:
        return tuple(self.variations.get(role, ()))

    def all_colors(self) -> list[tuple[str, NcsColor]]:
        """Role colors followed by variations, in fixed role order."""
        out = [(role, self.role_color(role)) for role in ROLES]
        for role in ROLES:
            out.extend((role, v) for v in self.role_variations(role))
        return out

    def with_role_color(self, role: str, color: NcsColor,
                        variations: tuple[NcsColor, ...] | None = None) -> "ColorScheme":
        if role not in ROLES:
            raise SchemaViolation(f"unknown role {role!r}")
        new_vars = dict(self.variations)
        if variations is not None:
            new_vars[role] = tuple(variations)
        kwargs = {r: self.role_color(r) for r in ROLES}
        kwargs[role] = color
        return ColorScheme(reasoning=self.reasoning, variations=new_vars, **kwargs)


# --- payload codecs ---------------------------------------------------------

def mood_to_payload(m: ColorMood) -> dict:
    return {"tones": m.tones, "distance": m.distance, "heaviness": m.heaviness}


def mood_from_payload(data: dict) -> ColorMood:
    if not isinstance(data, dict):
        raise SchemaViolation(f"mood payload must be an object, got {type(data).__name__}")
    try:
        return ColorMood(tones=int(data["tones"]), distance=int(data["distance"]),
                         heaviness=int(data["heaviness"]))
    except KeyError as exc:
        raise SchemaViolation(f"mood payload missing field {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise SchemaViolation(f"mood payload invalid: {exc}") from exc


def concepts_to_payload(c: DesignConcepts) -> dict:
    return {"themes": list(c.themes), "mood": mood_to_payload(c.mood)}


def concepts_from_payload(data: dict, source_intent: str = "") -> DesignConcepts:
    if not isinstance(data, dict):
        raise SchemaViolation("concepts payload must be an object")
    themes = data.get("themes")
    if not isinstance(themes, list) or not all(isinstance(t, str) for t in themes):
        raise SchemaViolation("concepts payload needs a list of string themes")
    return DesignConcepts(themes=tuple(themes),
                          mood=mood_from_payload(data.get("mood", {})),
                          source_intent=source_intent)


def scheme_to_payload(s: ColorScheme) -> dict:
    payload: dict = {}
    for role in ROLES:
        payload[role] = {
            "color": format_ncs(s.role_color(role)),
            "variations": [format_ncs(v) for v in s.role_variations(role)],
        }
    payload["reasoning"] = s.reasoning
    return payload


def scheme_from_payload(data: dict) -> ColorScheme:
    if not isinstance(data, dict):
        raise SchemaViolation("scheme payload must be an object")
    colors: dict[str, NcsColor] = {}
    variations: dict[str, tuple[NcsColor, ...]] = {}
    for role in ROLES:
        entry = data.get(role)
        if not isinstance(entry, dict) or "color" not in entry:
            raise SchemaViolation(f"scheme payload missing role {role!r}")
        colors[role] = parse_ncs(entry["color"])
        raw = entry.get("variations", [])
        if not isinstance(raw, list):
            raise SchemaViolation(f"variations for {role!r} must be a list")
        if len(raw) > 3:
            raise SchemaViolation(f"role {role!r} carries {len(raw)} variations, max 3")
        variations[role] = tuple(parse_ncs(v) for v in raw)
    return ColorScheme(dominant=colors["dominant"], secondary=colors["secondary"],
                       accent=colors["accent"], variations=variations,
                       reasoning=str(data.get("reasoning", "")))


def derive_variations(color: NcsColor) -> tuple[NcsColor, ...]:
    """Up to two companion swatches: same hue, +-10 steps of blackness or
    chromaticness, blackness kept >= 5 so later brightening always bites."""
    out: list[NcsColor] = []
    if color.hue.is_neutral:
        for delta in (10, 20):
            b = color.blackness + delta
            if b <= 100:
                out.append(NcsColor(b, 0, color.hue))
        return tuple(out)
    if color.blackness + 10 + color.chromaticness <= 100:
        b = color.blackness + 10
    else:
        b = max(5, color.blackness - 10)
    if b != color.blackness:
        out.append(color.replace(blackness=b))
    if color.blackness + color.chromaticness + 10 <= 100:
        c = color.chromaticness + 10
    else:
        c = max(5, color.chromaticness - 10)
    if c != color.chromaticness:
        out.append(color.replace(chromaticness=c))
    return tuple(out)


def canonical_json(payload) -> str:
    """Stable serialization used for digests and byte-compared artifacts."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def pretty_json(payload) -> str:
    """Human-facing serialization used inside prompts; still deterministic."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
