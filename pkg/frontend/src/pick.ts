// Vertex probing: cast a ray, take the nearest hit triangle, then report the
// triangle corner closest to the intersection point. Values are per-vertex
// node results, so the probe snaps to a vertex instead of interpolating.

import { add, distance, intersectTriangle, scale, type Vec3 } from "./math.js";
import type { VrMeshDocument } from "./types.js";

export interface ProbeResult {
  vertexIndex: number;
  nodeId: number;
  triangleIndex: number;
  hitPoint: Vec3;
  values: Record<string, number | null>;
}

export function probe(doc: VrMeshDocument, origin: Vec3, dir: Vec3): ProbeResult | null {
  let bestT = Infinity;
  let bestTriangle = -1;
  for (let i = 0; i < doc.triangles.length; i++) {
    const [a, b, c] = doc.triangles[i];
    const t = intersectTriangle(origin, dir, doc.vertices[a], doc.vertices[b], doc.vertices[c]);
    if (t !== null && t < bestT) {
      bestT = t;
      bestTriangle = i;
    }
  }
  if (bestTriangle < 0) return null;

  const hitPoint = add(origin, scale(dir, bestT));
  let vertexIndex = doc.triangles[bestTriangle][0];
  let bestDistance = Infinity;
  for (const corner of doc.triangles[bestTriangle]) {
    const d = distance(hitPoint, doc.vertices[corner]);
    if (d < bestDistance) {
      bestDistance = d;
      vertexIndex = corner;
    }
  }

  const values: Record<string, number | null> = {};
  for (const [name, field] of Object.entries(doc.fields)) {
    values[name] = field.values[vertexIndex];
  }
  return {
    vertexIndex,
    nodeId: doc.node_id_map[vertexIndex],
    triangleIndex: bestTriangle,
    hitPoint,
    values,
  };
}

/** Display form of a probed value: 6 significant digits, null stays a dash. */
export function displayValue(value: number | null): string {
  return value === null ? "-" : Number(value.toPrecision(6)).toString();
}
