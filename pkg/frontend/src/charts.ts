/** SVG chart builders. Bars and points encode the stats payload verbatim
 *  (raw values carried in data-* attributes); nothing is recomputed here.
 *  Scatter points borrow their fill from the server-provided element hex. */

import type { StatsPayload } from './types.js';

const esc = (v: string | number) => String(v).replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/"/g, '&quot;');

export function hueDistributionSvg(stats: StatsPayload, width = 380, height = 140): string {
  const bins = stats.hue_bins;
  const maxWeight = Math.max(...bins, stats.neutral_mass, 1e-9);
  const barWidth = width / (bins.length + 2); // room for the neutral bar
  const parts: string[] = [];
  parts.push(
    `<svg class="hue-chart" viewBox="0 0 ${width} ${height + 18}" xmlns="http://www.w3.org/2000/svg">`,
  );
  bins.forEach((weight, i) => {
    const h = (weight / maxWeight) * height;
    const x = i * barWidth;
    parts.push(
      `<rect class="hue-bin" data-bin="${i}" data-weight="${esc(weight)}" ` +
        `x="${x.toFixed(2)}" y="${(height - h).toFixed(2)}" ` +
        `width="${(barWidth * 0.85).toFixed(2)}" height="${h.toFixed(2)}"/>`,
    );
  });
  const nh = (stats.neutral_mass / maxWeight) * height;
  parts.push(
    `<rect class="neutral-mass" data-weight="${esc(stats.neutral_mass)}" ` +
      `x="${((bins.length + 1) * barWidth).toFixed(2)}" y="${(height - nh).toFixed(2)}" ` +
      `width="${(barWidth * 0.85).toFixed(2)}" height="${nh.toFixed(2)}"/>`,
  );
  parts.push(
    `<text x="0" y="${height + 14}" class="axis">0&#176;</text>` +
      `<text x="${(width / 2).toFixed(2)}" y="${height + 14}" class="axis">180&#176;</text>` +
      `<text x="${((bins.length + 1) * barWidth).toFixed(2)}" y="${height + 14}" class="axis">N</text>`,
  );
  parts.push('</svg>');
  return parts.join('');
}

export function chromaBlacknessSvg(
  stats: StatsPayload,
  elementHex: (elementId: string) => string | undefined,
  size = 220,
): string {
  const parts: string[] = [];
  parts.push(
    `<svg class="cb-chart" viewBox="0 0 ${size} ${size}" xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(`<rect class="frame" x="0" y="0" width="${size}" height="${size}"/>`);
  for (const point of stats.scatter) {
    const x = (point.chromaticness / 100) * size;
    const y = size - (point.blackness / 100) * size;
    const fill = elementHex(point.element_id) ?? '#888888';
    parts.push(
      `<circle class="cb-point" data-element="${esc(point.element_id)}" ` +
        `data-chromaticness="${esc(point.chromaticness)}" data-blackness="${esc(point.blackness)}" ` +
        `cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="5" fill="${esc(fill)}">` +
        `<title>${esc(point.element_id)}: chromaticness ${esc(point.chromaticness)}, ` +
        `blackness ${esc(point.blackness)}</title></circle>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}
