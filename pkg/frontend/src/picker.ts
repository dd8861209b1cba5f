/** Color picker input assembly. The picker edits notation parts; all
 *  validation authority and every hex preview stays with the service. The
 *  only client-side logic is clamping the two numeric fields into the
 *  notation's legal ranges and explaining why a value moved. */

export interface ComposedNotation {
  ncs: string;
  blackness: number;
  chromaticness: number;
  hue: string;
  clamped: boolean;
  note: string | null;
}

const HUE_PATTERN = /^(N|[YRBG](\d{2}[YRBG])?)$/;

export function composeNcs(blackness: number, chromaticness: number, hue: string): ComposedNotation {
  let note: string | null = null;
  let b = Math.round(blackness);
  let c = Math.round(chromaticness);
  let h = hue.trim().toUpperCase();
  if (!HUE_PATTERN.test(h)) {
    throw new Error(`hue code '${hue}' is not N, an elementary hue, or a transition like Y90R`);
  }
  if (b < 0 || b > 99) {
    b = Math.min(99, Math.max(0, b));
    note = 'blackness is limited to 0..99';
  }
  if (c < 0 || c > 99) {
    c = Math.min(99, Math.max(0, c));
    note = 'chromaticness is limited to 0..99';
  }
  if (b + c > 100) {
    c = 100 - b;
    note = `blackness + chromaticness may not exceed 100; chromaticness clamped to ${c}`;
  }
  if (c === 0 && h !== 'N') {
    h = 'N';
    note = 'a color without chromaticness sits on the neutral axis (hue N)';
  }
  if (c > 0 && h === 'N') {
    c = 0;
    note = 'the neutral axis carries no chromaticness; set a hue to add chroma';
  }
  const ncs = `${String(b).padStart(2, '0')}${String(c).padStart(2, '0')}-${h}`;
  return { ncs, blackness: b, chromaticness: c, hue: h, clamped: note !== null, note };
}
