import { describe, expect, it } from "vitest";

import { EDGE_RAMP, NODE_RAMP, legendStops, linearScale, mixHex } from "../scales.js";

describe("mixHex", () => {
  it("returns the endpoints at t=0 and t=1", () => {
    expect(mixHex("#000000", "#ffffff", 0)).toBe("#000000");
    expect(mixHex("#000000", "#ffffff", 1)).toBe("#ffffff");
  });

  it("interpolates channel-wise at the midpoint", () => {
    expect(mixHex("#000000", "#ffffff", 0.5)).toBe("#808080");
    expect(mixHex("#ff0000", "#0000ff", 0.5)).toBe("#800080");
  });

  it("clamps t outside [0, 1]", () => {
    expect(mixHex("#102030", "#405060", -3)).toBe("#102030");
    expect(mixHex("#102030", "#405060", 7)).toBe("#405060");
  });
});

describe("linearScale", () => {
  it("maps min to the low color and max to the high color", () => {
    const scale = linearScale([1, 2, 5], "#dbe9f6", "#1450a0");
    expect(scale(1)).toBe("#dbe9f6");
    expect(scale(5)).toBe("#1450a0");
    expect(scale.min).toBe(1);
    expect(scale.max).toBe(5);
  });

  it("collapses a uniform domain onto the high color", () => {
    const scale = linearScale([3, 3, 3], "#dbe9f6", "#1450a0");
    expect(scale(3)).toBe("#1450a0");
    expect(scale(99)).toBe("#1450a0");
  });

  it("handles an empty domain without throwing", () => {
    const scale = linearScale([], "#dbe9f6", "#1450a0");
    expect(scale(0)).toBe("#dbe9f6");
    expect(scale(1)).toBe("#1450a0");
  });
});

describe("legendStops", () => {
  it("runs low to high with the ramp endpoints pinned", () => {
    const scale = linearScale([0, 10], NODE_RAMP.low, NODE_RAMP.high);
    const stops = legendStops(scale);
    expect(stops).toHaveLength(8);
    expect(stops[0]).toBe(NODE_RAMP.low);
    expect(stops[stops.length - 1]).toBe(NODE_RAMP.high);
  });

  it("still draws a full ramp when the domain is uniform", () => {
    const scale = linearScale([2, 2], EDGE_RAMP.low, EDGE_RAMP.high);
    const stops = legendStops(scale, 5);
    expect(stops).toHaveLength(5);
    expect(stops[0]).toBe(EDGE_RAMP.low);
    expect(stops[4]).toBe(EDGE_RAMP.high);
  });
});
