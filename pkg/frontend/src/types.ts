// vrmesh document schema and validation, mirroring the converter's contract.

export interface ScalarFieldData {
  values: (number | null)[];
  min: number;
  max: number;
  units?: string;
}

export interface VrMeshDocument {
  format: "vrmesh";
  version: 1;
  vertices: [number, number, number][];
  triangles: [number, number, number][];
  normals: [number, number, number][];
  node_id_map: number[];
  fields: Record<string, ScalarFieldData>;
  provenance?: Record<string, unknown>;
}

export class DocumentError extends Error {}

function isFiniteNumber(x: unknown): x is number {
  return typeof x === "number" && Number.isFinite(x);
}

function checkRows(value: unknown, key: string): [number, number, number][] {
  if (!Array.isArray(value)) throw new DocumentError(`${key} must be an array`);
  value.forEach((row, i) => {
    if (!Array.isArray(row) || row.length !== 3 || !row.every(isFiniteNumber)) {
      throw new DocumentError(`${key}[${i}] must be a list of 3 finite numbers`);
    }
  });
  return value as [number, number, number][];
}

/** Validate a parsed JSON value as a vrmesh document; throws DocumentError. */
export function validateDocument(raw: unknown): VrMeshDocument {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new DocumentError("document must be a JSON object");
  }
  const doc = raw as Record<string, unknown>;
  if (doc.format !== "vrmesh") {
    throw new DocumentError(`format must be "vrmesh", got ${JSON.stringify(doc.format)}`);
  }
  if (doc.version !== 1) {
    throw new DocumentError(`unsupported version ${JSON.stringify(doc.version)}`);
  }
  const vertices = checkRows(doc.vertices, "vertices");
  const normals = checkRows(doc.normals, "normals");
  if (normals.length !== vertices.length) {
    throw new DocumentError(
      `normals length ${normals.length} does not match vertices length ${vertices.length}`,
    );
  }

  if (!Array.isArray(doc.triangles)) throw new DocumentError("triangles must be an array");
  doc.triangles.forEach((row, i) => {
    if (!Array.isArray(row) || row.length !== 3 || !row.every((v) => Number.isInteger(v))) {
      throw new DocumentError(`triangle ${i} must be a list of 3 integers`);
    }
    if (Math.min(...(row as number[])) < 0 || Math.max(...(row as number[])) >= vertices.length) {
      throw new DocumentError(`triangle ${i} index out of range`);
    }
  });

  if (!Array.isArray(doc.node_id_map) || doc.node_id_map.length !== vertices.length) {
    throw new DocumentError("node_id_map length does not match vertices length");
  }
  if (!doc.node_id_map.every((v) => Number.isInteger(v))) {
    throw new DocumentError("node_id_map entries must be integers");
  }

  const fieldsRaw = doc.fields ?? {};
  if (typeof fieldsRaw !== "object" || Array.isArray(fieldsRaw)) {
    throw new DocumentError("fields must be an object");
  }
  for (const [name, entry] of Object.entries(fieldsRaw as Record<string, unknown>)) {
    if (typeof entry !== "object" || entry === null) {
      throw new DocumentError(`fields.${name} must be an object`);
    }
    const field = entry as Record<string, unknown>;
    if (!Array.isArray(field.values) || field.values.length !== vertices.length) {
      throw new DocumentError(`fields.${name}.values length does not match vertices`);
    }
    field.values.forEach((v, i) => {
      if (v !== null && !isFiniteNumber(v)) {
        throw new DocumentError(`fields.${name}.values[${i}] is not a finite number`);
      }
    });
    if (!isFiniteNumber(field.min) || !isFiniteNumber(field.max)) {
      throw new DocumentError(`fields.${name} min/max must be finite numbers`);
    }
  }
  return raw as VrMeshDocument;
}

/** Fetch and validate a vrmesh document (the /api/model endpoint or a file URL). */
export async function loadModel(url: string): Promise<VrMeshDocument> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new DocumentError(`failed to load model: ${response.status} ${response.statusText}`);
  }
  return validateDocument(await response.json());
}
