import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { validateDocument, type VrMeshDocument } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function cubeDocument(): VrMeshDocument {
  const raw = readFileSync(join(here, "fixtures", "cube.vrmesh.json"), "utf-8");
  return validateDocument(JSON.parse(raw));
}
