import { expect, test } from "vitest";

import {
  EVEN_BAR_COLOR,
  ODD_BAR_COLOR,
  decayedValues,
  histogramBars,
  visibleBars,
} from "../src/decay.js";

// the six-cycle's distribution, as the service reports it
const RING6_A = [1, 0, 0, 8, 21, 24, 10];

test("no noise leaves the integer sector lengths untouched", () => {
  expect(decayedValues(RING6_A, 0)).toEqual(RING6_A);
});

test("sector k decays by (1-p)^(2k)", () => {
  const p = 0.2;
  const values = decayedValues(RING6_A, p);
  for (let k = 0; k < RING6_A.length; k++) {
    expect(values[k]).toBeCloseTo(RING6_A[k] * (1 - p) ** (2 * k), 12);
  }
});

test("bars alternate blue (even k) and red (odd k)", () => {
  const chart = histogramBars(RING6_A, 0);
  expect(chart).toHaveLength(7);
  for (const bar of chart) {
    expect(bar.color).toBe(bar.k % 2 === 0 ? EVEN_BAR_COLOR : ODD_BAR_COLOR);
  }
});

test("bar heights are normalized to the tallest sector", () => {
  const p = 0.1;
  const chart = histogramBars(RING6_A, p);
  const values = decayedValues(RING6_A, p);
  const top = Math.max(...values);
  for (const bar of chart) {
    expect(bar.height).toBeCloseTo(values[bar.k] / top, 12);
  }
  expect(Math.max(...chart.map((bar) => bar.height))).toBe(1);
});

test("full noise collapses the histogram to the identity sector", () => {
  const survivors = visibleBars(histogramBars(RING6_A, 1));
  expect(survivors.map((bar) => bar.k)).toEqual([0]);
  expect(survivors[0].value).toBe(1);
});

test("a type-II distribution shows no red bars at any noise level", () => {
  const k2 = [1, 0, 3];
  for (const p of [0, 0.3, 0.9]) {
    const survivors = visibleBars(histogramBars(k2, p));
    expect(survivors.some((bar) => bar.color === ODD_BAR_COLOR)).toBe(false);
  }
});

test("noise outside [0,1] is rejected", () => {
  expect(() => decayedValues(RING6_A, -0.01)).toThrow();
  expect(() => decayedValues(RING6_A, 1.01)).toThrow();
  expect(() => decayedValues(RING6_A, Number.NaN)).toThrow();
});
