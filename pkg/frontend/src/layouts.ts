/** Per-scene layout hints for the schematic renderer: one axis-aligned box
 *  per element (center x/y/z and dimensions, meters-ish). Original data;
 *  the service knows nothing about geometry. */

export interface BoxHint {
  x: number;
  y: number;
  z: number;
  w: number;
  h: number;
  d: number;
}

export type SceneLayout = Record<string, BoxHint>;

const WALLS = {
  back: { x: 0, y: 1.3, z: -2.48, w: 4, h: 2.6, d: 0.04 },
  left: { x: -1.98, y: 1.3, z: 0, w: 0.04, h: 2.6, d: 5 },
  right: { x: 1.98, y: 1.3, z: 0, w: 0.04, h: 2.6, d: 5 },
  ceiling: { x: 0, y: 2.58, z: 0, w: 4, h: 0.04, d: 5 },
  floor: { x: 0, y: 0.02, z: 0, w: 4, h: 0.04, d: 5 },
};

export const LAYOUTS: Record<string, SceneLayout> = {
  study_room: {
    wall_main: WALLS.back,
    wall_side: WALLS.left,
    ceiling: WALLS.ceiling,
    floor: WALLS.floor,
    desk: { x: 0.3, y: 0.38, z: -1.9, w: 1.5, h: 0.76, d: 0.7 },
    chair: { x: 0.3, y: 0.45, z: -1.1, w: 0.5, h: 0.9, d: 0.5 },
    bookshelf: { x: -1.4, y: 1.0, z: -2.2, w: 1.0, h: 2.0, d: 0.35 },
    desk_lamp: { x: 0.85, y: 0.95, z: -2.05, w: 0.18, h: 0.38, d: 0.18 },
    curtains: { x: -1.95, y: 1.4, z: 1.2, w: 0.06, h: 2.2, d: 1.3 },
    rug: { x: 0.3, y: 0.05, z: -0.6, w: 1.6, h: 0.03, d: 1.2 },
    picture_frame: { x: 1.2, y: 1.7, z: -2.42, w: 0.55, h: 0.75, d: 0.05 },
    plant_pot: { x: 1.6, y: 0.25, z: -1.8, w: 0.35, h: 0.5, d: 0.35 },
  },
  living_room: {
    wall_main: WALLS.back,
    wall_accent: WALLS.right,
    ceiling: WALLS.ceiling,
    floor: WALLS.floor,
    sofa: { x: -0.6, y: 0.45, z: 0.9, w: 2.0, h: 0.9, d: 0.9 },
    cushions: { x: -0.6, y: 0.95, z: 0.75, w: 1.2, h: 0.25, d: 0.4 },
    coffee_table: { x: -0.4, y: 0.25, z: -0.4, w: 1.1, h: 0.5, d: 0.6 },
    rug: { x: -0.4, y: 0.05, z: -0.2, w: 2.2, h: 0.03, d: 1.6 },
    armchair: { x: 1.2, y: 0.5, z: 0.8, w: 0.85, h: 1.0, d: 0.85 },
    tv_stand: { x: -0.2, y: 0.3, z: -2.2, w: 1.6, h: 0.6, d: 0.45 },
    curtains: { x: 1.95, y: 1.4, z: -1.0, w: 0.06, h: 2.2, d: 1.5 },
    floor_lamp: { x: 1.3, y: 0.8, z: 0.1, w: 0.25, h: 1.6, d: 0.25 },
    vase: { x: -0.4, y: 0.62, z: -0.4, w: 0.16, h: 0.25, d: 0.16 },
    window_frame: { x: 1.96, y: 1.5, z: -1.0, w: 0.05, h: 1.6, d: 1.2 },
  },
  bedroom: {
    wall_head: WALLS.back,
    wall_left: WALLS.left,
    wall_right: WALLS.right,
    ceiling: WALLS.ceiling,
    floor: WALLS.floor,
    bed_frame: { x: 0.8, y: 0.25, z: -0.8, w: 1.6, h: 0.5, d: 2.1 },
    bed_cover: { x: 0.8, y: 0.55, z: -0.7, w: 1.5, h: 0.12, d: 1.8 },
    headboard: { x: 0.8, y: 0.85, z: -1.82, w: 1.6, h: 0.9, d: 0.12 },
    pillow_a: { x: 0.45, y: 0.66, z: -1.5, w: 0.55, h: 0.14, d: 0.35 },
    pillow_b: { x: 1.15, y: 0.66, z: -1.5, w: 0.55, h: 0.14, d: 0.35 },
    curtains: { x: 1.95, y: 1.4, z: 0.8, w: 0.06, h: 2.2, d: 1.4 },
    wardrobe: { x: -1.7, y: 1.0, z: 0.6, w: 0.6, h: 2.0, d: 1.2 },
    rug: { x: 0.3, y: 0.05, z: 0.8, w: 1.8, h: 0.03, d: 1.2 },
    bedside_table_a: { x: -0.25, y: 0.3, z: -2.0, w: 0.45, h: 0.6, d: 0.45 },
    bedside_table_b: { x: 1.7, y: 0.3, z: -2.0, w: 0.45, h: 0.6, d: 0.45 },
    dresser: { x: -1.7, y: 0.45, z: -0.9, w: 0.5, h: 0.9, d: 1.0 },
    picture_frame_a: { x: -0.7, y: 1.7, z: -2.42, w: 0.5, h: 0.7, d: 0.05 },
    picture_frame_b: { x: 0.2, y: 1.8, z: -2.42, w: 0.6, h: 0.5, d: 0.05 },
    table_lamp_a: { x: -0.25, y: 0.75, z: -2.0, w: 0.18, h: 0.3, d: 0.18 },
    table_lamp_b: { x: 1.7, y: 0.75, z: -2.0, w: 0.18, h: 0.3, d: 0.18 },
    vase: { x: -1.7, y: 1.02, z: -0.9, w: 0.15, h: 0.25, d: 0.15 },
  },
};

/** Fallback box for elements without a hint (stacked along the left wall). */
export function fallbackHint(index: number): BoxHint {
  return { x: -1.6 + (index % 4) * 0.4, y: 0.2, z: 2.0, w: 0.3, h: 0.4, d: 0.3 };
}
