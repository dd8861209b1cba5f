"""Color-core tests: notation, hue geometry, display RGB, mood rules."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromachain.errors import (
    InconsistentNeutral,
    InvalidSum,
    MalformedNotation,
    NeutralHasNoAngle,
    NonAdjacentHuePair,
)
from chromachain.ncs import (
    DEFAULT_ANCHORS,
    ELEMENTARY_HUES,
    NEUTRAL,
    NEXT_HUE,
    ColorMood,
    NcsColor,
    NcsHue,
    classify_mood,
    format_ncs,
    hue_angle,
    hue_distance,
    hue_family,
    ncs_to_rgb,
    parse_ncs,
)


def chromatic(start, pct):
    return NcsHue(start, pct)


@st.composite
def notatable_colors(draw):
    """Valid colors expressible in the two-digit grammar."""
    blackness = draw(st.integers(0, 99))
    chroma = draw(st.integers(0, min(99, 100 - blackness)))
    if chroma == 0:
        return NcsColor(blackness, 0, NEUTRAL)
    start = draw(st.sampled_from(ELEMENTARY_HUES))
    pct = draw(st.integers(0, 99))
    return NcsColor(blackness, chroma, chromatic(start, pct))


class TestParse:
    def test_basic(self):
        c = parse_ncs("1050-Y90R")
        assert (c.blackness, c.chromaticness) == (10, 50)
        assert c.hue == chromatic("Y", 90)
        assert c.whiteness == 40

    def test_pure_white(self):
        assert parse_ncs("0000-N") == NcsColor(0, 0, NEUTRAL)

    def test_sum_boundary_is_legal(self):
        c = parse_ncs("7030-B")
        assert (c.blackness, c.chromaticness) == (70, 30)

    def test_invalid_sum(self):
        with pytest.raises(InvalidSum):
            parse_ncs("7040-B")

    def test_sum_checked_before_adjacency(self):
        # 60 + 50 > 100, so this fails on the sum even though G20Y is a legal hue
        with pytest.raises(InvalidSum):
            parse_ncs("6050-G20Y")

    def test_adjacent_pair_parses(self):
        assert parse_ncs("3050-G20Y").hue == chromatic("G", 20)

    def test_all_sixteen_ordered_hue_pairs(self):
        # oracle: the only legal transitions are the four successor pairs
        legal = {(a, NEXT_HUE[a]) for a in ELEMENTARY_HUES}
        rejected = []
        for a in ELEMENTARY_HUES:
            for b in ELEMENTARY_HUES:
                notation = f"1020-{a}50{b}"
                if (a, b) in legal:
                    assert parse_ncs(notation).hue == chromatic(a, 50)
                else:
                    with pytest.raises(NonAdjacentHuePair):
                        parse_ncs(notation)
                    rejected.append(notation)
        assert len(rejected) == 12

    def test_explicit_zero_pct_normalizes(self):
        assert parse_ncs("1020-Y00R") == parse_ncs("1020-Y")

    def test_neutral_with_chroma(self):
        with pytest.raises(InconsistentNeutral):
            parse_ncs("1010-N")

    def test_chromatic_hue_with_zero_chroma(self):
        with pytest.raises(InconsistentNeutral):
            parse_ncs("1000-Y90R")

    @pytest.mark.parametrize("bad", ["", "105-Y90R", "1050Y90R", "1050-X", "1050-Y9R",
                                     "1050-y90r", "1050-Y90RB", "abcd-N", "1050-N20Y"])
    def test_malformed(self, bad):
        with pytest.raises(MalformedNotation):
            parse_ncs(bad)

    def test_trims_whitespace(self):
        assert parse_ncs("  0500-N \n") == NcsColor(5, 0, NEUTRAL)


class TestFormat:
    def test_canonical(self):
        assert format_ncs(NcsColor(10, 50, chromatic("Y", 90))) == "1050-Y90R"
        assert format_ncs(NcsColor(5, 0, NEUTRAL)) == "0500-N"
        assert format_ncs(NcsColor(10, 20, chromatic("G", 0))) == "1020-G"

    def test_hundred_has_no_notation(self):
        with pytest.raises(ValueError):
            format_ncs(NcsColor(100, 0, NEUTRAL))
        with pytest.raises(ValueError):
            format_ncs(NcsColor(0, 100, chromatic("R", 0)))

    @given(notatable_colors())
    @settings(max_examples=300)
    def test_round_trip_color(self, color):
        assert parse_ncs(format_ncs(color)) == color


class TestTypeInvariants:
    def test_sum_enforced(self):
        with pytest.raises(InvalidSum):
            NcsColor(60, 50, chromatic("Y", 0))

    def test_neutral_consistency_enforced(self):
        with pytest.raises(InconsistentNeutral):
            NcsColor(10, 10, NEUTRAL)
        with pytest.raises(InconsistentNeutral):
            NcsColor(10, 0, chromatic("Y", 0))

    def test_pct_range(self):
        with pytest.raises(MalformedNotation):
            NcsHue("Y", 100)

    def test_mood_degrees(self):
        with pytest.raises(ValueError):
            ColorMood(tones=3, distance=0, heaviness=0)


class TestHueGeometry:
    @pytest.mark.parametrize("hue,angle", [
        (("Y", 0), 0.0),
        (("Y", 90), 81.0),
        (("G", 50), 315.0),
        (("R", 0), 90.0),
        (("B", 0), 180.0),
        (("G", 0), 270.0),
    ])
    def test_angles(self, hue, angle):
        assert hue_angle(chromatic(*hue)) == pytest.approx(angle)

    def test_neutral_has_no_angle(self):
        with pytest.raises(NeutralHasNoAngle):
            hue_angle(NEUTRAL)
        with pytest.raises(NeutralHasNoAngle):
            hue_distance(NEUTRAL, chromatic("Y", 0))

    @pytest.mark.parametrize("a,b,expected", [
        (("Y", 0), ("R", 0), 90.0),
        (("Y", 90), ("R", 0), 9.0),
        (("Y", 0), ("G", 50), 45.0),
    ])
    def test_distances(self, a, b, expected):
        assert hue_distance(chromatic(*a), chromatic(*b)) == pytest.approx(expected)

    def test_metric_on_degree_grid(self):
        # exhaustive check of symmetry / identity / triangle inequality on
        # a coarse grid of chromatic hues
        grid = [chromatic(s, p) for s in ELEMENTARY_HUES for p in range(0, 100, 10)]
        for a in grid:
            assert hue_distance(a, a) == 0.0
            for b in grid:
                d_ab = hue_distance(a, b)
                assert d_ab == pytest.approx(hue_distance(b, a))
                assert 0.0 <= d_ab <= 180.0
                if a != b:
                    assert d_ab > 0.0
        for a in grid[::4]:
            for b in grid[::4]:
                for c in grid[::4]:
                    assert (hue_distance(a, c)
                            <= hue_distance(a, b) + hue_distance(b, c) + 1e-9)

    def test_families(self):
        assert hue_family(chromatic("Y", 90)) == "Y"
        assert hue_family(chromatic("R", 0)) == "R"
        assert hue_family(chromatic("G", 50)) == "G"
        assert hue_family(NEUTRAL) is None


def _oracle_rgb(color):
    """Independent implementation of the stated conversion model."""
    def to_linear(u8):
        s = u8 / 255
        return s / 12.92 if s <= 0.04045 else ((s + 0.055) / 1.055) ** 2.4

    def to_srgb(lin):
        s = 12.92 * lin if lin <= 0.0031308 else 1.055 * lin ** (1 / 2.4) - 0.055
        return s * 255

    anchors_at = {0: "Y", 90: "R", 180: "B", 270: "G"}
    if color.hue.is_neutral:
        full = (0.0, 0.0, 0.0)
    else:
        angle = hue_angle(color.hue)
        base = int(angle // 90) * 90
        lo = DEFAULT_ANCHORS[anchors_at[base % 360]]
        hi = DEFAULT_ANCHORS[anchors_at[(base + 90) % 360]]
        t = (angle - base) / 90
        full = tuple(
            to_srgb(to_linear(l) * (1 - t) + to_linear(h) * t) for l, h in zip(lo, hi)
        )
    out = []
    for i in range(3):
        mixed = (color.chromaticness * full[i] + color.whiteness * 255) / 100
        out.append(int(math.floor(mixed + 0.5)))
    return tuple(out)


class TestRgb:
    def test_black_and_white(self):
        assert ncs_to_rgb(NcsColor(100, 0, NEUTRAL)) == ncs_to_rgb(NcsColor(100, 0, NEUTRAL))
        black = ncs_to_rgb(NcsColor(100, 0, NEUTRAL))
        white = ncs_to_rgb(NcsColor(0, 0, NEUTRAL))
        assert (black.r, black.g, black.b) == (0, 0, 0)
        assert (white.r, white.g, white.b) == (255, 255, 255)

    def test_golden_warm_red_orange(self):
        # frozen from the independent oracle below
        rgb = ncs_to_rgb(parse_ncs("1050-Y90R"))
        assert (rgb.r, rgb.g, rgb.b) == (204, 138, 129)
        assert (rgb.r, rgb.g, rgb.b) == _oracle_rgb(parse_ncs("1050-Y90R"))
        assert rgb.r > rgb.g > rgb.b  # reads warm

    @given(notatable_colors())
    @settings(max_examples=200)
    def test_matches_oracle(self, color):
        rgb = ncs_to_rgb(color)
        assert (rgb.r, rgb.g, rgb.b) == _oracle_rgb(color)

    @given(notatable_colors())
    @settings(max_examples=200)
    def test_blackness_monotone(self, color):
        if color.blackness + 1 + color.chromaticness > 100:
            return
        darker = NcsColor(color.blackness + 1, color.chromaticness, color.hue)
        a, b = ncs_to_rgb(color), ncs_to_rgb(darker)
        assert b.r <= a.r and b.g <= a.g and b.b <= a.b

    def test_whiteness_drives_toward_white(self):
        hue = chromatic("B", 0)
        prev = ncs_to_rgb(NcsColor(0, 60, hue))
        for chroma in (40, 20, 10, 1):
            cur = ncs_to_rgb(NcsColor(0, chroma, hue))
            assert cur.r >= prev.r and cur.g >= prev.g and cur.b >= prev.b
            prev = cur
        assert ncs_to_rgb(NcsColor(0, 0, NEUTRAL)).hex == "#FFFFFF"

    def test_hex_uppercase(self):
        assert ncs_to_rgb(parse_ncs("1050-Y90R")).hex == "#CC8A81"


class _SchemeStub:
    def __init__(self, dominant):
        self.dominant = dominant


class TestClassifyMood:
    # expected values derived by applying the documented thresholds
    @pytest.mark.parametrize("notation,expected", [
        ("2060-R", (2, 0, 0)),    # warm, close (chroma >= 40), light (blackness <= 20)
        ("1020-B", (0, 2, 0)),    # cool is always far
        ("1010-Y50R", (1, 2, 0)),  # chroma <= 10 reads neutral; pale reads far
        ("0500-N", (1, 2, 0)),
        ("4040-R", (2, 0, 1)),    # warm and saturated reads close; mid blackness
        ("6020-B", (0, 2, 2)),    # dark cool
        ("2505-G", (1, 1, 1)),    # low chroma, not pale enough for far
    ])
    def test_thresholds(self, notation, expected):
        mood = classify_mood(_SchemeStub(parse_ncs(notation)))
        assert (mood.tones, mood.distance, mood.heaviness) == expected

    def test_boundary_axis_reads_neutral(self):
        # 135 and 315 degrees sit on the warm/cool axis
        for hue in (chromatic("R", 50), chromatic("G", 50)):
            mood = classify_mood(_SchemeStub(NcsColor(10, 30, hue)))
            assert mood.tones == 1

    @given(notatable_colors())
    @settings(max_examples=300)
    def test_total_function(self, color):
        mood = classify_mood(_SchemeStub(color))
        assert mood.tones in (0, 1, 2)
        assert mood.distance in (0, 1, 2)
        assert mood.heaviness in (0, 1, 2)
