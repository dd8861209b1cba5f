/** Charts must encode the /stats payload exactly; the raw numbers ride in
 *  data attributes so this is directly checkable. */

import { describe, expect, it } from 'vitest';

import { chromaBlacknessSvg, hueDistributionSvg } from '../src/charts.js';
import type { StatsPayload } from '../src/types.js';
import fixtures from './fixtures/api_fixtures.json';

function recordedStats(): StatsPayload {
  const step = (fixtures.steps as Array<{ method: string; path: string; response: unknown }>)
    .find((s) => s.method === 'GET' && s.path === '/sessions/{sid}/stats');
  return step!.response as StatsPayload;
}

describe('hue distribution chart', () => {
  it('renders one bar per bin with the exact payload weight', () => {
    const stats = recordedStats();
    const svg = hueDistributionSvg(stats);
    stats.hue_bins.forEach((weight, i) => {
      expect(svg).toContain(`data-bin="${i}" data-weight="${weight}"`);
    });
    expect(svg).toContain(`class="neutral-mass" data-weight="${stats.neutral_mass}"`);
    expect((svg.match(/class="hue-bin"/g) ?? []).length).toBe(stats.hue_bins.length);
  });
});

describe('chromaticness/blackness chart', () => {
  it('renders one point per element with the exact payload coordinates', () => {
    const stats = recordedStats();
    const svg = chromaBlacknessSvg(stats, () => '#ABCDEF');
    expect((svg.match(/class="cb-point"/g) ?? []).length).toBe(stats.scatter.length);
    for (const point of stats.scatter) {
      expect(svg).toContain(
        `data-element="${point.element_id}" data-chromaticness="${point.chromaticness}" ` +
          `data-blackness="${point.blackness}"`,
      );
    }
  });

  it('fills points with the server-provided element hex', () => {
    const stats = recordedStats();
    const svg = chromaBlacknessSvg(stats, (id) => (id === 'floor' ? '#112233' : '#445566'));
    expect(svg).toContain('fill="#112233"');
    expect(svg).toContain('fill="#445566"');
  });
});
