import { describe, expect, it } from 'vitest';

import { composeNcs } from '../src/picker.js';

describe('notation picker', () => {
  it('formats in-range parts verbatim', () => {
    const out = composeNcs(10, 50, 'y90r');
    expect(out.ncs).toBe('1050-Y90R');
    expect(out.clamped).toBe(false);
    expect(out.note).toBeNull();
  });

  it('clamps a blackness/chromaticness sum over 100 and explains why', () => {
    const out = composeNcs(70, 60, 'B');
    expect(out.blackness + out.chromaticness).toBeLessThanOrEqual(100);
    expect(out.ncs).toBe('7030-B');
    expect(out.clamped).toBe(true);
    expect(out.note).toMatch(/may not exceed 100/);
  });

  it('forces the neutral axis when chromaticness is zero', () => {
    const out = composeNcs(15, 0, 'Y90R');
    expect(out.ncs).toBe('1500-N');
    expect(out.note).toMatch(/neutral axis/);
  });

  it('drops chroma when the hue is neutral', () => {
    const out = composeNcs(15, 30, 'N');
    expect(out.ncs).toBe('1500-N');
    expect(out.clamped).toBe(true);
  });

  it('limits component fields to two digits', () => {
    const out = composeNcs(150, -5, 'G');
    expect(out.blackness).toBe(99);
    expect(out.chromaticness).toBe(0);
  });

  it('rejects garbage hue codes', () => {
    expect(() => composeNcs(10, 10, 'Q')).toThrow(/hue code/);
    expect(() => composeNcs(10, 10, 'Y500R')).toThrow(/hue code/);
  });
});
