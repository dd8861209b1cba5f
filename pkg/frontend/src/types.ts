/** Wire types mirroring the service's JSON responses. The UI never computes
 *  color values itself; every number and hex string below originates from
 *  the service. */

export interface MoodPayload {
  tones: number;
  distance: number;
  heaviness: number;
}

export interface ConceptsPayload {
  themes: string[];
  mood: MoodPayload;
  source_intent?: string;
}

export interface ConceptsView {
  concepts: ConceptsPayload | null;
  candidates: ConceptsPayload[];
  stale: string[];
}

/** A color as the service renders it: canonical notation plus display hex. */
export interface ColorRef {
  ncs: string;
  hex: string;
}

export interface RoleEntry {
  color: ColorRef;
  variations: ColorRef[];
}

export interface SchemePayload {
  dominant: RoleEntry;
  secondary: RoleEntry;
  accent: RoleEntry;
  reasoning: string;
}

export type RoleName = 'dominant' | 'secondary' | 'accent';

export interface ViolationPayload {
  rule_code: string;
  severity: 'error' | 'warning';
  message: string;
  subject: string;
}

export interface ReportPayload {
  verdict: 'pass' | 'fail';
  violations: ViolationPayload[];
}

export interface SchemeView {
  chosen_index: number | null;
  scheme: SchemePayload | null;
  candidates: SchemePayload[];
  locks: Record<string, string>;
  stale: string[];
  report: ReportPayload | null;
}

export interface AssignmentEntry {
  role: RoleName;
  color: ColorRef;
}

export interface AssignmentView {
  scene_id: string | null;
  assignment: {
    assignments: Record<string, AssignmentEntry>;
    reasoning: string;
  } | null;
  report: ReportPayload | null;
  stale: string[];
}

export interface ScatterPoint {
  element_id: string;
  chromaticness: number;
  blackness: number;
}

export interface StatsPayload {
  hue_bins: number[];
  bin_width_degrees: number;
  neutral_mass: number;
  scatter: ScatterPoint[];
}

export interface SceneElementPayload {
  id: string;
  label: string;
  area_fraction: number;
  size_class: 'large' | 'medium' | 'small';
  colorable: boolean;
  fixed_color?: ColorRef;
}

export interface ScenePayload {
  id: string;
  name: string;
  elements: SceneElementPayload[];
  adjacency: [string, string][];
  description_sentences: string[];
}

export interface SceneSummary {
  id: string;
  name: string;
  element_count: number;
  colorable_count: number;
}

export interface SessionSummary {
  id: string;
  seed: number;
  intent_history: string[];
  scene_id: string | null;
  locks: Record<string, string>;
  pins: Record<string, string>;
  stale: string[];
  has_concepts: boolean;
  has_schemes: boolean;
  chosen_scheme: number | null;
  has_assignment: boolean;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: Record<string, unknown>;
}

export type ExportBundle = Record<string, unknown>;
