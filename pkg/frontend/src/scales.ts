/** Color scales for node importance and edge relevance.
 *
 * Both legends read low -> high from left to right; the scale maps a
 * numeric domain onto a light-to-dark ramp. A collapsed domain (all
 * values equal) pins everything to the dark end so a uniform path is
 * still visibly "scored".
 */

export interface ColorScale {
  (value: number): string;
  readonly min: number;
  readonly max: number;
  readonly lowColor: string;
  readonly highColor: string;
}

function hexChannel(hex: string, i: number): number {
  return parseInt(hex.slice(1 + 2 * i, 3 + 2 * i), 16);
}

/** Linear interpolation between two #rrggbb colors, t in [0, 1]. */
export function mixHex(low: string, high: string, t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const parts = [0, 1, 2].map((i) => {
    const a = hexChannel(low, i);
    const b = hexChannel(high, i);
    return Math.round(a + (b - a) * clamped);
  });
  return `#${parts.map((p) => p.toString(16).padStart(2, "0")).join("")}`;
}

export function linearScale(values: number[], lowColor: string, highColor: string): ColorScale {
  const min = values.length ? Math.min(...values) : 0;
  const max = values.length ? Math.max(...values) : 1;
  const span = max - min;
  const fn = ((value: number) =>
    span === 0 ? highColor : mixHex(lowColor, highColor, (value - min) / span)) as ColorScale;
  Object.defineProperties(fn, {
    min: { value: min },
    max: { value: max },
    lowColor: { value: lowColor },
    highColor: { value: highColor },
  });
  return fn;
}

export const NODE_RAMP = { low: "#dbe9f6", high: "#1450a0" };
export const EDGE_RAMP = { low: "#d9d9d9", high: "#f03b20" };

/** Evenly spaced gradient stops, left (low) to right (high). */
export function legendStops(scale: ColorScale, n = 8): string[] {
  const stops: string[] = [];
  for (let i = 0; i < n; i++) {
    const t = n === 1 ? 1 : i / (n - 1);
    stops.push(mixHex(scale.lowColor, scale.highColor, t));
  }
  return stops;
}
