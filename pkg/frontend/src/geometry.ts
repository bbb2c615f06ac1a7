// Flat typed-array geometry derived from a document, ready for GPU upload.

import type { Vec3 } from "./math.js";
import type { VrMeshDocument } from "./types.js";

export interface Geometry {
  positions: Float32Array;
  normals: Float32Array;
  indices: Uint32Array;
  triangleCount: number;
  center: Vec3;
  radius: number;
}

export function buildGeometry(doc: VrMeshDocument): Geometry {
  const vertexCount = doc.vertices.length;
  const positions = new Float32Array(vertexCount * 3);
  const normals = new Float32Array(vertexCount * 3);
  const lo: Vec3 = [Infinity, Infinity, Infinity];
  const hi: Vec3 = [-Infinity, -Infinity, -Infinity];
  for (let i = 0; i < vertexCount; i++) {
    for (let axis = 0; axis < 3; axis++) {
      const x = doc.vertices[i][axis];
      positions[3 * i + axis] = x;
      normals[3 * i + axis] = doc.normals[i][axis];
      if (x < lo[axis]) lo[axis] = x;
      if (x > hi[axis]) hi[axis] = x;
    }
  }
  const indices = new Uint32Array(doc.triangles.length * 3);
  doc.triangles.forEach(([a, b, c], i) => {
    indices[3 * i] = a;
    indices[3 * i + 1] = b;
    indices[3 * i + 2] = c;
  });
  const center: Vec3 =
    vertexCount > 0
      ? [(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2, (lo[2] + hi[2]) / 2]
      : [0, 0, 0];
  const radius =
    vertexCount > 0
      ? Math.max(1e-6, Math.hypot(hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]) / 2)
      : 1;
  return {
    positions,
    normals,
    indices,
    triangleCount: doc.triangles.length,
    center,
    radius,
  };
}
