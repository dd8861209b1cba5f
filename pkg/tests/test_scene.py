"""Scene model: loading guards, narration, stats."""

import json

import pytest

from chromachain.errors import (
    AreaSumMismatch,
    DanglingAdjacency,
    SchemaViolation,
    UncoveredElement,
    UnknownElement,
)
from chromachain.ncs import hue_angle, parse_ncs
from chromachain.scene import (
    ColorAssignment,
    compute_stats,
    describe_scene,
    load_scene,
    scene_from_payload,
    scene_to_payload,
    size_class_for,
)


def minimal_scene_payload(**overrides):
    payload = {
        "id": "test",
        "name": "Test",
        "elements": [
            {"id": "wall", "label": "wall", "area_fraction": 0.7},
            {"id": "sofa", "label": "sofa", "area_fraction": 0.25},
            {"id": "vase", "label": "vase", "area_fraction": 0.05},
        ],
        "adjacency": [["wall", "sofa"]],
        "description_sentences": ["A test room."],
    }
    payload.update(overrides)
    return payload


class TestBundledScenes:
    def test_counts(self, scenes):
        assert len(scenes["study_room"].elements) == 12
        assert len(scenes["study_room"].colorable_elements) == 12
        assert len(scenes["living_room"].colorable_elements) == 13
        assert len(scenes["bedroom"].colorable_elements) == 21

    def test_colorable_areas_sum_to_one(self, scenes):
        for scene in scenes.values():
            total = sum(e.area_fraction for e in scene.colorable_elements)
            assert total == pytest.approx(1.0, abs=0.01)

    def test_size_classes_consistent(self, scenes):
        for scene in scenes.values():
            for e in scene.elements:
                assert e.size_class == size_class_for(e.area_fraction)

    def test_bedroom_keeps_quoted_layout_sentence(self, scenes):
        text = describe_scene(scenes["bedroom"])
        assert "against the right wall is a bed with a cover and pillows" in text

    def test_descriptions_distinct(self, scenes):
        texts = {describe_scene(s) for s in scenes.values()}
        assert len(texts) == len(scenes)

    def test_description_deterministic(self, scenes):
        for s in scenes.values():
            assert describe_scene(s) == describe_scene(s)


class TestLoading:
    def test_round_trip(self, scenes, tmp_path):
        for scene in scenes.values():
            path = tmp_path / f"{scene.id}.json"
            path.write_text(json.dumps(scene_to_payload(scene)), encoding="utf-8")
            assert load_scene(path) == scene

    def test_area_sum_mismatch(self):
        payload = minimal_scene_payload()
        payload["elements"][0]["area_fraction"] = 0.5
        with pytest.raises(AreaSumMismatch):
            scene_from_payload(payload)

    def test_dangling_adjacency(self):
        payload = minimal_scene_payload(adjacency=[["wall", "ghost"]])
        with pytest.raises(DanglingAdjacency):
            scene_from_payload(payload)

    def test_duplicate_ids(self):
        payload = minimal_scene_payload()
        payload["elements"][1]["id"] = "wall"
        with pytest.raises(SchemaViolation):
            scene_from_payload(payload)

    def test_adjacency_symmetrized(self):
        payload = minimal_scene_payload(adjacency=[["sofa", "wall"], ["wall", "sofa"]])
        scene = scene_from_payload(payload)
        assert scene.adjacent_pairs() == (("sofa", "wall"),)

    def test_fixed_color_conflicts_with_colorable(self):
        payload = minimal_scene_payload()
        payload["elements"][0]["fixed_color"] = "0500-N"
        with pytest.raises(SchemaViolation):
            scene_from_payload(payload)

    def test_inconsistent_size_class(self):
        payload = minimal_scene_payload()
        payload["elements"][0]["size_class"] = "small"
        with pytest.raises(SchemaViolation):
            scene_from_payload(payload)

    def test_single_element_scene_description(self):
        payload = minimal_scene_payload(
            elements=[{"id": "wall", "label": "wall", "area_fraction": 1.0}],
            adjacency=[], description_sentences=[])
        scene = scene_from_payload(payload)
        assert describe_scene(scene) == "The wall (wall) is a large element to be colored."


def _assign_all(scene, mapping):
    return ColorAssignment(entries={
        eid: (role, parse_ncs(color)) for eid, (role, color) in mapping.items()
    })


class TestStats:
    def test_all_neutral(self):
        scene = scene_from_payload(minimal_scene_payload())
        a = _assign_all(scene, {
            "wall": ("dominant", "0500-N"),
            "sofa": ("secondary", "2500-N"),
            "vase": ("accent", "4500-N"),
        })
        stats = compute_stats(a, scene)
        assert sum(stats.hue_bins) == 0.0
        assert stats.neutral_mass == pytest.approx(1.0)

    def test_single_element_bin(self):
        payload = minimal_scene_payload(
            elements=[{"id": "wall", "label": "wall", "area_fraction": 1.0}], adjacency=[])
        scene = scene_from_payload(payload)
        a = _assign_all(scene, {"wall": ("dominant", "1050-Y90R")})
        stats = compute_stats(a, scene)
        assert stats.hue_bins[8] == pytest.approx(1.0)  # 81 degrees -> bin [80, 90)
        assert sum(stats.hue_bins) == pytest.approx(1.0)
        assert stats.neutral_mass == 0.0

    def test_bedroom_histogram_matches_brute_force(self, scenes, pipeline):
        scene = scenes["bedroom"]
        session = pipeline.new_session(seed=0)
        pipeline.stage1_concepts(session, "Warm and Cozy")
        pipeline.stage2_schemes(session)
        pipeline.choose_scheme(session, 0)
        assignment = pipeline.stage3_assign(session, "bedroom")
        stats = compute_stats(assignment, scene)

        expected = [0.0] * 36
        neutral = 0.0
        for e in scene.colorable_elements:
            color = assignment.color_of(e.id)
            if color.hue.is_neutral:
                neutral += e.area_fraction
            else:
                expected[int(hue_angle(color.hue) // 10) % 36] += e.area_fraction
        assert list(stats.hue_bins) == pytest.approx(expected)
        assert stats.neutral_mass == pytest.approx(neutral)

    def test_mass_conservation(self, scenes, pipeline):
        for scene_id in scenes:
            session = pipeline.new_session(seed=0)
            pipeline.stage1_concepts(session, "Modern and Simple")
            pipeline.stage2_schemes(session)
            pipeline.choose_scheme(session, 0)
            assignment = pipeline.stage3_assign(session, scene_id)
            stats = compute_stats(assignment, scenes[scene_id])
            assert sum(stats.hue_bins) + stats.neutral_mass == pytest.approx(1.0, abs=0.01)

    def test_coverage_errors(self):
        scene = scene_from_payload(minimal_scene_payload())
        partial = _assign_all(scene, {"wall": ("dominant", "0500-N")})
        with pytest.raises(UncoveredElement):
            compute_stats(partial, scene)
        extra = _assign_all(scene, {
            "wall": ("dominant", "0500-N"),
            "sofa": ("secondary", "2500-N"),
            "vase": ("accent", "4500-N"),
            "ghost": ("accent", "4500-N"),
        })
        with pytest.raises(UnknownElement):
            compute_stats(extra, scene)
