"""Interior color-design ideation engine.

Three staged operations (intent -> design concepts -> color scheme ->
element assignment) over the natural color system, with machine-checkable
composition rules, a deterministic offline mock backend, and an HTTP/CLI
surface for interactive refinement.
"""

from .artifacts import ColorScheme, DesignConcepts
from .gateway import BackendConfig, complete_structured
from .knowledge import CompositionRules, load_knowledge
from .ncs import ColorMood, NcsColor, NcsHue, Rgb, classify_mood, format_ncs, hue_angle, \
    hue_distance, ncs_to_rgb, parse_ncs
from .pipeline import Pipeline, Session, load_session, replay_session, save_session
from .scene import ColorAssignment, SceneSpec, compute_stats, describe_scene, load_scene, \
    load_scene_registry
from .validation import ValidationReport, validate_assignment, validate_scheme

__version__ = "0.1.0"

__all__ = [
    "BackendConfig",
    "ColorAssignment",
    "ColorMood",
    "ColorScheme",
    "CompositionRules",
    "DesignConcepts",
    "NcsColor",
    "NcsHue",
    "Pipeline",
    "Rgb",
    "SceneSpec",
    "Session",
    "ValidationReport",
    "classify_mood",
    "complete_structured",
    "compute_stats",
    "describe_scene",
    "format_ncs",
    "hue_angle",
    "hue_distance",
    "load_knowledge",
    "load_scene",
    "load_scene_registry",
    "load_session",
    "ncs_to_rgb",
    "parse_ncs",
    "replay_session",
    "save_session",
    "validate_assignment",
    "validate_scheme",
    "__version__",
]
