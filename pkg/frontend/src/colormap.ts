// Field-to-color mapping: a hue ramp from blue (low) over green to red (high).

import type { VrMeshDocument } from "./types.js";

export type Rgb = [number, number, number]; // 0..255 integers

export const MISSING_COLOR: Rgb = [128, 128, 128];
export const UNCOLORED: Rgb = [180, 180, 180];

/** Normalized position of a value inside [min, max]; 0.5 when min == max. */
export function normalized(value: number, min: number, max: number): number {
  if (!(max > min)) return 0.5;
  return Math.min(1, Math.max(0, (value - min) / (max - min)));
}

/**
 * Hue ramp: hue = 240deg * (1 - t) at full saturation and value, i.e.
 * blue -> cyan -> green -> yellow -> red as t runs 0 -> 1.
 */
export function colorFor(t: number): Rgb {
  const clamped = Math.min(1, Math.max(0, t));
  const hue = 240 * (1 - clamped);
  const sector = hue / 60;
  const x = 1 - Math.abs((sector % 2) - 1);
  let rgb: [number, number, number];
  if (sector < 1) rgb = [1, x, 0];
  else if (sector < 2) rgb = [x, 1, 0];
  else if (sector < 3) rgb = [0, 1, x];
  else rgb = [0, x, 1];
  return [Math.round(255 * rgb[0]), Math.round(255 * rgb[1]), Math.round(255 * rgb[2])];
}

/** Legend strip labels: stored min and max verbatim, units appended. */
export function legendLabels(
  name: string,
  field: { min: number; max: number; units?: string },
): { left: string; middle: string; right: string } {
  const suffix = field.units ? ` ${field.units}` : "";
  return { left: `${field.min}${suffix}`, middle: name, right: `${field.max}${suffix}` };
}

/**
 * Per-vertex colors (0..1 floats, flat RGB) for the given field, gray when
 * no field is assigned and for vertices with a missing value.
 */
export function vertexColors(doc: VrMeshDocument, fieldName: string | null): Float32Array {
  const colors = new Float32Array(doc.vertices.length * 3);
  const paint = (i: number, rgb: Rgb) => {
    colors[3 * i] = rgb[0] / 255;
    colors[3 * i + 1] = rgb[1] / 255;
    colors[3 * i + 2] = rgb[2] / 255;
  };
  const field = fieldName === null ? undefined : doc.fields[fieldName];
  for (let i = 0; i < doc.vertices.length; i++) {
    if (!field) {
      paint(i, UNCOLORED);
      continue;
    }
    const value = field.values[i];
    paint(i, value === null ? MISSING_COLOR : colorFor(normalized(value, field.min, field.max)));
  }
  return colors;
}
