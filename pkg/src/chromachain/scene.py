"""Declarative interior scenes, their prompt narration, and chart stats."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    AreaSumMismatch,
    DanglingAdjacency,
    SchemaViolation,
    UncoveredElement,
    UnknownElement,
)
from .ncs import NcsColor, format_ncs, hue_angle, parse_ncs

SIZE_CLASSES = ("large", "medium", "small")

# Labels treated as room structure rather than furniture, used by the
# refinement rules ("all the furniture is dark ...").
STRUCTURAL_LABELS = frozenset({"wall", "ceiling", "floor", "window", "door"})


def size_class_for(area_fraction: float) -> str:
    """Banded size class: large >= 0.15, small <= 0.05, else medium."""
    if area_fraction >= 0.15:
        return "large"
    if area_fraction <= 0.05:
        return "small"
    return "medium"


@dataclass(frozen=True)
class SceneElement:
    id: str
    label: str
    area_fraction: float
    size_class: str
    colorable: bool = True
    fixed_color: NcsColor | None = None

    def __post_init__(self):
        if not 0 < self.area_fraction <= 1:
            raise SchemaViolation(f"element {self.id!r}: area_fraction {self.area_fraction} outside (0, 1]")
        if self.size_class not in SIZE_CLASSES:
            raise SchemaViolation(f"element {self.id!r}: unknown size class {self.size_class!r}")
        if self.size_class != size_class_for(self.area_fraction):
            raise SchemaViolation(
                f"element {self.id!r}: size class {self.size_class!r} inconsistent with "
                f"area fraction {self.area_fraction}"
            )
        if self.colorable and self.fixed_color is not None:
            raise SchemaViolation(f"element {self.id!r}: colorable elements cannot carry a fixed color")

    @property
    def is_structural(self) -> bool:
        return self.label in STRUCTURAL_LABELS


@dataclass(frozen=True)
class SceneSpec:
    id: str
    name: str
    elements: tuple[SceneElement, ...]
    adjacency: frozenset[tuple[str, str]]
    description_sentences: tuple[str, ...]

    def __post_init__(self):
        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise SchemaViolation(f"scene {self.id!r}: duplicate element ids")
        known = set(ids)
        for a, b in self.adjacency:
            if a not in known or b not in known:
                raise DanglingAdjacency(f"scene {self.id!r}: adjacency ({a}, {b}) references unknown id")
        total = sum(e.area_fraction for e in self.elements if e.colorable)
        if abs(total - 1.0) > 0.01:
            raise AreaSumMismatch(f"scene {self.id!r}: colorable area fractions sum to {total:.4f}")

    @property
    def colorable_elements(self) -> tuple[SceneElement, ...]:
        return tuple(e for e in self.elements if e.colorable)

    def element(self, element_id: str) -> SceneElement:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise UnknownElement(f"scene {self.id!r} has no element {element_id!r}")

    def adjacent_pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.adjacency))


@dataclass(frozen=True)
class ColorAssignment:
    """Element id -> (role, color) over exactly the colorable elements."""

    entries: dict[str, tuple[str, NcsColor]]
    reasoning: str = ""

    def role_of(self, element_id: str) -> str:
        return self.entries[element_id][0]

    def color_of(self, element_id: str) -> NcsColor:
        return self.entries[element_id][1]

    def check_coverage(self, scene: SceneSpec) -> None:
        colorable = {e.id for e in scene.colorable_elements}
        extra = set(self.entries) - colorable
        if extra:
            raise UnknownElement(f"assignment covers unknown or non-colorable element {sorted(extra)[0]!r}")
        missing = colorable - set(self.entries)
        if missing:
            raise UncoveredElement(f"assignment misses colorable element {sorted(missing)[0]!r}")

    def with_color(self, element_id: str, color: NcsColor) -> "ColorAssignment":
        if element_id not in self.entries:
            raise UnknownElement(f"no entry for element {element_id!r}")
        entries = dict(self.entries)
        entries[element_id] = (entries[element_id][0], color)
        return ColorAssignment(entries=entries, reasoning=self.reasoning)


@dataclass(frozen=True)
class SchemeStats:
    """Area-weighted hue histogram (10-degree bins) plus per-element
    chromaticness/blackness scatter points; neutral mass kept separate."""

    hue_bins: tuple[float, ...]  # 36 bins, [0,10), [10,20), ...
    neutral_mass: float
    scatter: tuple[tuple[str, int, int], ...]  # (element id, chromaticness, blackness)


# --- file loading -----------------------------------------------------------

def _element_from_payload(data: dict) -> SceneElement:
    if not isinstance(data, dict):
        raise SchemaViolation("scene element must be an object")
    for fld in ("id", "label", "area_fraction"):
        if fld not in data:
            raise SchemaViolation(f"scene element missing field {fld!r}")
    fraction = float(data["area_fraction"])
    size_class = data.get("size_class") or size_class_for(fraction)
    fixed = data.get("fixed_color")
    return SceneElement(
        id=str(data["id"]),
        label=str(data["label"]),
        area_fraction=fraction,
        size_class=size_class,
        colorable=bool(data.get("colorable", True)),
        fixed_color=parse_ncs(fixed) if fixed else None,
    )


def scene_from_payload(data: dict) -> SceneSpec:
    if not isinstance(data, dict):
        raise SchemaViolation("scene payload must be an object")
    for fld in ("id", "name", "elements"):
        if fld not in data:
            raise SchemaViolation(f"scene payload missing field {fld!r}")
    elements = tuple(_element_from_payload(e) for e in data["elements"])
    # symmetrize and dedupe adjacency
    pairs = set()
    for pair in data.get("adjacency", []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaViolation(f"adjacency entry {pair!r} must be a 2-element list")
        a, b = str(pair[0]), str(pair[1])
        if a == b:
            raise SchemaViolation(f"adjacency entry pairs {a!r} with itself")
        pairs.add((min(a, b), max(a, b)))
    return SceneSpec(
        id=str(data["id"]),
        name=str(data["name"]),
        elements=elements,
        adjacency=frozenset(pairs),
        description_sentences=tuple(str(s) for s in data.get("description_sentences", [])),
    )


def scene_to_payload(s: SceneSpec) -> dict:
    return {
        "id": s.id,
        "name": s.name,
        "elements": [
            {
                "id": e.id,
                "label": e.label,
                "area_fraction": e.area_fraction,
                "size_class": e.size_class,
                "colorable": e.colorable,
                **({"fixed_color": format_ncs(e.fixed_color)} if e.fixed_color else {}),
            }
            for e in s.elements
        ],
        "adjacency": [list(p) for p in s.adjacent_pairs()],
        "description_sentences": list(s.description_sentences),
    }


def load_scene(path: str | Path) -> SceneSpec:
    """Load and fully validate one scene file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"scene file {path}: invalid JSON ({exc})") from exc
    return scene_from_payload(data)


DEFAULT_SCENE_DIR = Path(__file__).parent / "data" / "scenes"


def load_scene_registry(directory: str | Path | None = None) -> dict[str, SceneSpec]:
    """All scenes in a directory, keyed by id. Defaults to the bundled three."""
    base = Path(directory) if directory is not None else DEFAULT_SCENE_DIR
    registry: dict[str, SceneSpec] = {}
    for path in sorted(base.glob("*.json")):
        spec = load_scene(path)
        if spec.id in registry:
            raise SchemaViolation(f"duplicate scene id {spec.id!r} in {base}")
        registry[spec.id] = spec
    return registry


# --- narration ---------------------------------------------------------------

def describe_scene(s: SceneSpec) -> str:
    """Deterministic stage-3 narration: authored layout sentences followed
    by generated per-element size sentences."""
    parts = list(s.description_sentences)
    for e in s.elements:
        size_note = f"The {e.label} ({e.id}) is a {e.size_class} element"
        if e.colorable:
            size_note += " to be colored."
        else:
            size_note += f" with a fixed material color of {format_ncs(e.fixed_color)}."
        parts.append(size_note)
    return " ".join(parts)


# --- statistics ---------------------------------------------------------------

def compute_stats(a: ColorAssignment, s: SceneSpec) -> SchemeStats:
    """Area-weighted hue histogram and scatter for the result view charts."""
    a.check_coverage(s)
    bins = [0.0] * 36
    neutral_mass = 0.0
    scatter = []
    for e in s.colorable_elements:
        color = a.color_of(e.id)
        if color.hue.is_neutral:
            neutral_mass += e.area_fraction
        else:
            bins[int(hue_angle(color.hue) // 10) % 36] += e.area_fraction
        scatter.append((e.id, color.chromaticness, color.blackness))
    return SchemeStats(hue_bins=tuple(bins), neutral_mass=neutral_mass, scatter=tuple(scatter))


def stats_to_payload(stats: SchemeStats) -> dict:
    return {
        "hue_bins": list(stats.hue_bins),
        "bin_width_degrees": 10,
        "neutral_mass": stats.neutral_mass,
        "scatter": [
            {"element_id": el, "chromaticness": c, "blackness": b}
            for el, c, b in stats.scatter
        ],
    }


# --- assignment codec ----------------------------------------------------------

def assignment_to_payload(a: ColorAssignment) -> dict:
    return {
        "assignments": {
            element_id: {"role": role, "color": format_ncs(color)}
            for element_id, (role, color) in sorted(a.entries.items())
        },
        "reasoning": a.reasoning,
    }


def assignment_from_payload(data: dict) -> ColorAssignment:
    from .artifacts import ROLES  # local import to keep module deps one-way

    if not isinstance(data, dict) or not isinstance(data.get("assignments"), dict):
        raise SchemaViolation("assignment payload needs an 'assignments' object")
    entries: dict[str, tuple[str, NcsColor]] = {}
    for element_id, entry in data["assignments"].items():
        if not isinstance(entry, dict) or "role" not in entry or "color" not in entry:
            raise SchemaViolation(f"assignment entry {element_id!r} needs role and color")
        role = str(entry["role"])
        if role not in ROLES:
            raise SchemaViolation(f"assignment entry {element_id!r}: unknown role {role!r}")
        entries[str(element_id)] = (role, parse_ncs(entry["color"]))
    return ColorAssignment(entries=entries, reasoning=str(data.get("reasoning", "")))
