"""Machine-checkable design rules for schemes and element assignments.

Each check appends a coded violation to an ordered report instead of
throwing, so callers can show designers everything that is wrong at once.
Rule codes are a fixed, append-only enum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artifacts import ColorScheme, DesignConcepts, ROLES
from .knowledge import CompositionRules
from .ncs import NcsColor, classify_mood, format_ncs, hue_distance, hue_family, TONES_LABELS
from .scene import ColorAssignment, SceneSpec

# window-boundary comparisons; area fractions are decimal floats
_EPS = 1e-9

CODE_DOMINANT_TOO_DARK = "DOMINANT_TOO_DARK"
CODE_DOMINANT_TOO_SATURATED = "DOMINANT_TOO_SATURATED"
CODE_TONE_MISMATCH = "TONE_MISMATCH"
CODE_EXCESS_DIVERSITY = "EXCESS_DIVERSITY"
CODE_HUE_SHIFT_EXCEEDED = "HUE_SHIFT_EXCEEDED"
CODE_RATIO_WINDOW_MISS = "RATIO_WINDOW_MISS"
CODE_ADJACENT_LOW_CONTRAST = "ADJACENT_LOW_CONTRAST"
CODE_ROLE_AREA_INVERSION = "ROLE_AREA_INVERSION"

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"


@dataclass(frozen=True)
class Violation:
    rule_code: str
    severity: str
    message: str
    subject: str  # offending role or element id


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def verdict(self) -> str:
        return "fail" if self.errors else "pass"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def errors(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.severity == SEVERITY_ERROR)

    @property
    def warnings(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.severity == SEVERITY_WARNING)

    def error_codes(self) -> set[str]:
        return {v.rule_code for v in self.errors}

    def codes(self) -> set[str]:
        return {v.rule_code for v in self.violations}

    def to_payload(self) -> dict:
        return {
            "verdict": self.verdict,
            "violations": [
                {
                    "rule_code": v.rule_code,
                    "severity": v.severity,
                    "message": v.message,
                    "subject": v.subject,
                }
                for v in self.violations
            ],
        }

    def explain(self) -> str:
        if not self.violations:
            return "pass: no violations"
        lines = [f"{self.verdict}: {len(self.violations)} violation(s)"]
        for v in self.violations:
            lines.append(f"  [{v.severity}] {v.rule_code} ({v.subject}): {v.message}")
        return "\n".join(lines)


def _hue_delta_for_contrast(a: NcsColor, b: NcsColor) -> float:
    """Hue difference used by the contrast rule. A neutral against a
    chromatic color counts as maximal hue difference; two neutrals as none."""
    if a.hue.is_neutral and b.hue.is_neutral:
        return 0.0
    if a.hue.is_neutral or b.hue.is_neutral:
        return 180.0
    return hue_distance(a.hue, b.hue)


def contrast_ok(a: NcsColor, b: NcsColor, rules: CompositionRules) -> bool:
    contrast = rules.min_adjacent_contrast
    return (
        _hue_delta_for_contrast(a, b) >= contrast.hue_delta
        or abs(a.blackness - b.blackness) >= contrast.blackness_delta
    )


def _family_count(scheme: ColorScheme) -> int:
    """Distinct hue-circle quadrants over role colors and every variation
    swatch; neutral swatches carry no family."""
    families = set()
    for _, color in scheme.all_colors():
        fam = hue_family(color.hue)
        if fam is not None:
            families.add(fam)
    return len(families)


def validate_scheme(
    scheme: ColorScheme,
    concepts: DesignConcepts,
    rules: CompositionRules,
    previous: ColorScheme | None = None,
) -> ValidationReport:
    """Scheme-level checks: dominant restraint, tone agreement, hue
    diversity, and hue-shift limits for dominant variations (and for a
    replacement dominant when ``previous`` is supplied)."""
    violations: list[Violation] = []
    dominant = scheme.dominant

    if dominant.blackness > rules.dominant_max_blackness:
        violations.append(Violation(
            CODE_DOMINANT_TOO_DARK, SEVERITY_ERROR,
            f"dominant blackness {dominant.blackness} exceeds {rules.dominant_max_blackness}",
            "dominant"))
    if dominant.chromaticness > rules.dominant_max_chromaticness:
        violations.append(Violation(
            CODE_DOMINANT_TOO_SATURATED, SEVERITY_ERROR,
            f"dominant chromaticness {dominant.chromaticness} exceeds "
            f"{rules.dominant_max_chromaticness}",
            "dominant"))

    classified = classify_mood(scheme)
    if classified.tones != concepts.mood.tones:
        severity = SEVERITY_WARNING if concepts.mood.tones == 1 else SEVERITY_ERROR
        violations.append(Violation(
            CODE_TONE_MISMATCH, severity,
            f"scheme reads as {TONES_LABELS[classified.tones]} but "
            f"{TONES_LABELS[concepts.mood.tones]} tones were requested",
            "dominant"))

    families = _family_count(scheme)
    if families > rules.max_hue_families:
        violations.append(Violation(
            CODE_EXCESS_DIVERSITY, SEVERITY_ERROR,
            f"scheme spans {families} hue families, more than {rules.max_hue_families}",
            "scheme"))

    for i, variation in enumerate(scheme.role_variations("dominant")):
        if variation.hue != dominant.hue:
            violations.append(Violation(
                CODE_HUE_SHIFT_EXCEEDED, SEVERITY_ERROR,
                f"dominant variation {format_ncs(variation)} changes hue from "
                f"{dominant.hue} (variations may only vary blackness/chromaticness)",
                f"dominant/variation[{i}]"))
    if previous is not None:
        prev_dom = previous.dominant
        if prev_dom.hue.is_neutral != dominant.hue.is_neutral:
            shift = 0.0 if prev_dom.hue.is_neutral and dominant.hue.is_neutral else 180.0
        elif prev_dom.hue.is_neutral:
            shift = 0.0
        else:
            shift = hue_distance(prev_dom.hue, dominant.hue)
        if shift > rules.max_dominant_hue_shift + _EPS:
            violations.append(Violation(
                CODE_HUE_SHIFT_EXCEEDED, SEVERITY_ERROR,
                f"replacement dominant shifts hue by {shift:.1f} degrees, "
                f"limit is {rules.max_dominant_hue_shift}",
                "dominant"))

    return ValidationReport(violations=tuple(violations))


def _within(value: float, window: tuple[float, float]) -> bool:
    return window[0] - _EPS <= value <= window[1] + _EPS


def validate_assignment(
    assignment: ColorAssignment,
    scene: SceneSpec,
    scheme: ColorScheme,
    rules: CompositionRules,
) -> ValidationReport:
    """Assignment-level checks: role-area windows (with slack), accent/
    dominant area inversion, and adjacency contrast between elements
    holding different roles.

    Raises UncoveredElement / UnknownElement for coverage defects; rule
    outcomes are reported, never thrown.
    """
    assignment.check_coverage(scene)
    violations: list[Violation] = []
    colorable = scene.colorable_elements

    # windows relax to warnings when the scene cannot populate every role
    relax = len(colorable) < len(ROLES)
    role_sums = {role: 0.0 for role in ROLES}
    for e in colorable:
        role_sums[assignment.role_of(e.id)] += e.area_fraction
    for role in ROLES:
        window = rules.slack_window(role)
        if not _within(role_sums[role], window):
            severity = SEVERITY_WARNING if relax else SEVERITY_ERROR
            violations.append(Violation(
                CODE_RATIO_WINDOW_MISS, severity,
                f"{role} role covers {role_sums[role]:.2f} of the scene, outside "
                f"[{window[0]:.2f}, {window[1]:.2f}]",
                role))

    accent_elements = [e for e in colorable if assignment.role_of(e.id) == "accent"]
    dominant_elements = [e for e in colorable if assignment.role_of(e.id) == "dominant"]
    for acc in accent_elements:
        for dom in dominant_elements:
            if acc.area_fraction - dom.area_fraction > 0.15 + _EPS:
                violations.append(Violation(
                    CODE_ROLE_AREA_INVERSION, SEVERITY_ERROR,
                    f"accent element {acc.id!r} ({acc.area_fraction:.2f}) dwarfs dominant "
                    f"element {dom.id!r} ({dom.area_fraction:.2f}); large surfaces must not "
                    f"carry the accent color",
                    acc.id))
                break  # one report per offending accent element

    by_id = {e.id: e for e in scene.elements}
    for a_id, b_id in scene.adjacent_pairs():
        ea, eb = by_id[a_id], by_id[b_id]
        if not (ea.colorable and eb.colorable):
            continue
        if assignment.role_of(a_id) == assignment.role_of(b_id):
            continue  # same-role adjacency is intentional continuity
        ca, cb = assignment.color_of(a_id), assignment.color_of(b_id)
        if not contrast_ok(ca, cb, rules):
            violations.append(Violation(
                CODE_ADJACENT_LOW_CONTRAST, SEVERITY_ERROR,
                f"adjacent elements {a_id!r} ({format_ncs(ca)}) and {b_id!r} "
                f"({format_ncs(cb)}) hold different roles but are hard to tell apart",
                f"{a_id}+{b_id}"))

    return ValidationReport(violations=tuple(violations))
