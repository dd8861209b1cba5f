"""Natural color system core: notation, hue geometry, display RGB, mood.

Colors are described by blackness, chromaticness and a hue located between
the four chromatic elementary hues Y, R, B, G arranged on a circle in that
cycle order. Whiteness is the remainder ``100 - blackness - chromaticness``.
Text notation is ``SSCC-H``: two-digit blackness, two-digit chromaticness,
then the hue code (``N`` for the neutral axis, ``Y``, or ``Y90R`` meaning
90 percent of the way from Y to R).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import (
    InconsistentNeutral,
    InvalidSum,
    MalformedNotation,
    NeutralHasNoAngle,
    NonAdjacentHuePair,
)

if TYPE_CHECKING:  # pragma: no cover
    from .artifacts import ColorScheme

ELEMENTARY_HUES = ("Y", "R", "B", "G")
NEXT_HUE = {"Y": "R", "R": "B", "B": "G", "G": "Y"}
HUE_ANGLES = {"Y": 0.0, "R": 90.0, "B": 180.0, "G": 270.0}

_NOTATION_RE = re.compile(r"^(\d{2})(\d{2})-(N|[YRBG](?:\d{2}[YRBG])?)$")

# Display approximation anchors (sRGB, 0..255). Deliberate constants, not
# colorimetric ground truth; override via the ``anchors`` argument.
DEFAULT_ANCHORS = {
    "Y": (255, 212, 0),
    "R": (198, 0, 58),
    "B": (0, 134, 191),
    "G": (0, 154, 107),
}
_WHITE = (255, 255, 255)
_BLACK = (0, 0, 0)


@dataclass(frozen=True)
class NcsHue:
    """Hue position: neutral axis, or ``pct`` percent from ``start`` toward
    the next elementary hue in the Y->R->B->G cycle. ``pct=0`` is the pure
    elementary hue."""

    start: str | None = None
    pct: int = 0

    def __post_init__(self):
        if self.start is None:
            if self.pct != 0:
                raise InconsistentNeutral("neutral hue cannot carry a percentage")
            return
        if self.start not in ELEMENTARY_HUES:
            raise MalformedNotation(f"unknown elementary hue {self.start!r}")
        if not 0 <= self.pct < 100:
            raise MalformedNotation(f"hue percentage {self.pct} outside [0, 100)")

    @property
    def is_neutral(self) -> bool:
        return self.start is None

    def __str__(self) -> str:
        if self.start is None:
            return "N"
        if self.pct == 0:
            return self.start
        return f"{self.start}{self.pct:02d}{NEXT_HUE[self.start]}"


NEUTRAL = NcsHue()


@dataclass(frozen=True)
class NcsColor:
    """One color with integer blackness/chromaticness in [0, 100]."""

    blackness: int
    chromaticness: int
    hue: NcsHue

    def __post_init__(self):
        if not (0 <= self.blackness <= 100 and 0 <= self.chromaticness <= 100):
            raise InvalidSum(
                f"blackness {self.blackness} / chromaticness {self.chromaticness} outside [0, 100]"
            )
        if self.blackness + self.chromaticness > 100:
            raise InvalidSum(
                f"blackness {self.blackness} + chromaticness {self.chromaticness} exceeds 100"
            )
        if (self.chromaticness == 0) != self.hue.is_neutral:
            raise InconsistentNeutral(
                f"chromaticness {self.chromaticness} inconsistent with hue {self.hue}"
            )

    @property
    def whiteness(self) -> int:
        return 100 - self.blackness - self.chromaticness

    @property
    def notation(self) -> str:
        return format_ncs(self)

    def replace(self, blackness: int | None = None, chromaticness: int | None = None) -> "NcsColor":
        """Copy with blackness/chromaticness swapped out, hue preserved.

        Dropping chromaticness to 0 flips the hue to neutral (forced by the
        type invariant); going from 0 upward is rejected because there is no
        hue to restore.
        """
        b = self.blackness if blackness is None else blackness
        c = self.chromaticness if chromaticness is None else chromaticness
        if c == 0:
            return NcsColor(b, 0, NEUTRAL)
        if self.hue.is_neutral:
            raise InconsistentNeutral("cannot add chromaticness to a neutral color")
        return NcsColor(b, c, self.hue)


@dataclass(frozen=True)
class Rgb:
    """Display-referred approximation only."""

    r: int
    g: int
    b: int

    def __post_init__(self):
        for channel in (self.r, self.g, self.b):
            if not 0 <= channel <= 255:
                raise ValueError(f"channel {channel} outside [0, 255]")

    @property
    def hex(self) -> str:
        return f"#{self.r:02X}{self.g:02X}{self.b:02X}"


TONES_LABELS = ("cool", "neutral", "warm")
DISTANCE_LABELS = ("close", "medium", "far")
HEAVINESS_LABELS = ("light", "medium", "dark")


@dataclass(frozen=True)
class ColorMood:
    """Three quantified psychological attributes, each a 3-degree scale:
    tones 0=cool/1=neutral/2=warm, distance 0=close/1=medium/2=far,
    heaviness 0=light/1=medium/2=dark."""

    tones: int
    distance: int
    heaviness: int

    def __post_init__(self):
        for name, degree in (("tones", self.tones), ("distance", self.distance),
                             ("heaviness", self.heaviness)):
            if degree not in (0, 1, 2):
                raise ValueError(f"{name} degree {degree} not in {{0, 1, 2}}")

    def describe(self) -> str:
        return (f"{TONES_LABELS[self.tones]} tones, "
                f"{DISTANCE_LABELS[self.distance]} distance, "
                f"{HEAVINESS_LABELS[self.heaviness]} heaviness")


def parse_ncs(notation: str) -> NcsColor:
    """Parse canonical ``SSCC-H`` notation into an :class:`NcsColor`.

    Raises MalformedNotation, InvalidSum, InconsistentNeutral or
    NonAdjacentHuePair, checked in that order.
    """
    text = notation.strip()
    m = _NOTATION_RE.match(text)
    if not m:
        raise MalformedNotation(f"notation {notation!r} does not match SSCC-H grammar")
    blackness, chromaticness = int(m.group(1)), int(m.group(2))
    hue_code = m.group(3)
    if blackness + chromaticness > 100:
        raise InvalidSum(f"{notation!r}: blackness + chromaticness = {blackness + chromaticness}")
    if hue_code == "N":
        if chromaticness > 0:
            raise InconsistentNeutral(f"{notation!r}: chromatic color with neutral hue")
        return NcsColor(blackness, 0, NEUTRAL)
    if chromaticness == 0:
        raise InconsistentNeutral(f"{notation!r}: zero chromaticness with chromatic hue")
    if len(hue_code) == 1:
        return NcsColor(blackness, chromaticness, NcsHue(hue_code, 0))
    start, pct, end = hue_code[0], int(hue_code[1:3]), hue_code[3]
    if end != NEXT_HUE[start]:
        raise NonAdjacentHuePair(
            f"{notation!r}: {start} is not followed by {end} on the Y-R-B-G cycle"
        )
    return NcsColor(blackness, chromaticness, NcsHue(start, pct))


def format_ncs(c: NcsColor) -> str:
    """Canonical text form; the inverse of :func:`parse_ncs`.

    Component values of 100 cannot be expressed in the two-digit grammar
    and raise ValueError (only pure black / full chroma are affected).
    """
    if c.blackness > 99 or c.chromaticness > 99:
        raise ValueError(f"component value 100 has no two-digit notation: {c}")
    return f"{c.blackness:02d}{c.chromaticness:02d}-{c.hue}"


def hue_angle(h: NcsHue) -> float:
    """Angle on the hue circle: Y=0, R=90, B=180, G=270, 0.9 deg per percent."""
    if h.is_neutral:
        raise NeutralHasNoAngle("the neutral axis has no hue angle")
    return HUE_ANGLES[h.start] + h.pct * 0.9


def hue_distance(a: NcsHue, b: NcsHue) -> float:
    """Minimal circular difference between two chromatic hues, in [0, 180]."""
    d = abs(hue_angle(a) - hue_angle(b)) % 360.0
    return min(d, 360.0 - d)


def hue_family(h: NcsHue) -> str | None:
    """Quadrant of the hue circle containing the hue: Y=[0,90), R=[90,180),
    B=[180,270), G=[270,360). None for neutral."""
    if h.is_neutral:
        return None
    return ELEMENTARY_HUES[int(hue_angle(h) // 90) % 4]


def _srgb_to_linear(u8: int) -> float:
    s = u8 / 255.0
    return s / 12.92 if s <= 0.04045 else ((s + 0.055) / 1.055) ** 2.4


def _linear_to_srgb(lin: float) -> float:
    lin = min(max(lin, 0.0), 1.0)
    s = 12.92 * lin if lin <= 0.0031308 else 1.055 * lin ** (1 / 2.4) - 0.055
    return s * 255.0


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def ncs_to_rgb(c: NcsColor, anchors: dict[str, tuple[int, int, int]] | None = None) -> Rgb:
    """Deterministic display approximation.

    The full-chroma color F is a piecewise-linear blend of the two adjacent
    anchor colors at the hue angle, interpolated in linear light and encoded
    back to sRGB; the result is the display-space weighted mix
    (chromaticness * F + whiteness * WHITE + blackness * BLACK) / 100,
    rounded half-up per channel.
    """
    table = anchors or DEFAULT_ANCHORS
    if c.hue.is_neutral:
        full = (0.0, 0.0, 0.0)  # weighted by chromaticness = 0 below
    else:
        angle = hue_angle(c.hue)
        seg = int(angle // 90) % 4
        lo, hi = ELEMENTARY_HUES[seg], NEXT_HUE[ELEMENTARY_HUES[seg]]
        t = (angle - 90.0 * seg) / 90.0
        lo_lin = tuple(_srgb_to_linear(v) for v in table[lo])
        hi_lin = tuple(_srgb_to_linear(v) for v in table[hi])
        full = tuple(_linear_to_srgb(a + (b - a) * t) for a, b in zip(lo_lin, hi_lin))
    mixed = tuple(
        (c.chromaticness * f + c.whiteness * w) / 100.0
        for f, w in zip(full, _WHITE)
    )
    return Rgb(*(_round_half_up(v) for v in mixed))


def ncs_to_hex(c: NcsColor, anchors: dict[str, tuple[int, int, int]] | None = None) -> str:
    return ncs_to_rgb(c, anchors).hex


def classify_mood(scheme: "ColorScheme") -> ColorMood:
    """Classify a scheme's mood from its dominant color.

    Cutoffs (blackness 20/50, chromaticness 10/30/40) are decided defaults;
    the warm half of the circle is (315, 360] u [0, 135), the cool half
    (135, 315), and the axis itself counts as neutral.
    """
    d = scheme.dominant
    if d.hue.is_neutral or d.chromaticness <= 10:
        tones = 1
    else:
        angle = hue_angle(d.hue)
        if angle < 135.0 or angle > 315.0:
            tones = 2
        elif 135.0 < angle < 315.0:
            tones = 0
        else:
            tones = 1
    if d.blackness <= 20:
        heaviness = 0
    elif d.blackness >= 50:
        heaviness = 2
    else:
        heaviness = 1
    if tones == 0 or (d.blackness <= 20 and d.chromaticness <= 30):
        distance = 2
    elif tones == 2 and d.chromaticness >= 40:
        distance = 0
    else:
        distance = 1
    return ColorMood(tones=tones, distance=distance, heaviness=heaviness)
