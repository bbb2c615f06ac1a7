import { createServer } from "node:http";
import type { AddressInfo } from "node:net";
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { buildGeometry } from "../src/geometry.js";
import { DocumentError, loadModel, validateDocument } from "../src/types.js";
import { cubeDocument } from "./helpers.js";

const here = dirname(fileURLToPath(import.meta.url));
const fixtureBytes = readFileSync(join(here, "fixtures", "cube.vrmesh.json"));

describe("validateDocument", () => {
  it("accepts the cube fixture", () => {
    const doc = cubeDocument();
    expect(doc.vertices).toHaveLength(8);
    expect(doc.triangles).toHaveLength(12);
  });

  it("rejects a wrong version", () => {
    const raw = JSON.parse(fixtureBytes.toString());
    raw.version = 2;
    expect(() => validateDocument(raw)).toThrow(DocumentError);
  });

  it("rejects out-of-range triangle indices", () => {
    const raw = JSON.parse(fixtureBytes.toString());
    raw.triangles[5] = [0, 1, 99];
    expect(() => validateDocument(raw)).toThrow(/triangle 5 index out of range/);
  });

  it("rejects mismatched field lengths", () => {
    const raw = JSON.parse(fixtureBytes.toString());
    raw.fields.TEMP.values = [1.0];
    expect(() => validateDocument(raw)).toThrow(/TEMP/);
  });
});

describe("buildGeometry", () => {
  it("produces 12 renderable triangles for the cube", () => {
    const geometry = buildGeometry(cubeDocument());
    expect(geometry.triangleCount).toBe(12);
    expect(geometry.indices).toHaveLength(36);
    expect(geometry.positions).toHaveLength(24);
    expect(geometry.center).toEqual([0.5, 0.5, 0.5]);
  });
});

describe("loadModel over HTTP", () => {
  const server = createServer((request, response) => {
    if (request.url === "/api/model") {
      response.setHeader("Content-Type", "application/json");
      response.end(fixtureBytes);
    } else {
      response.statusCode = 404;
      response.end("not found");
    }
  });
  let base = "";

  beforeAll(async () => {
    await new Promise<void>((resolve) => server.listen(0, "127.0.0.1", resolve));
    base = `http://127.0.0.1:${(server.address() as AddressInfo).port}`;
  });

  afterAll(() => {
    server.close();
  });

  it("loads the cube and yields 12 triangles to render", async () => {
    const doc = await loadModel(`${base}/api/model`);
    expect(buildGeometry(doc).triangleCount).toBe(12);
  });

  it("surfaces HTTP failures as errors", async () => {
    await expect(loadModel(`${base}/nope`)).rejects.toThrow(/404/);
  });
});
