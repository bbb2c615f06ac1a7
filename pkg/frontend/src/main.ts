// Viewer wiring: load the model, render it, drive modalities and probing.

import { frequencyFor, TonePlayer } from "./audio.js";
import { OrbitCamera } from "./camera.js";
import { colorFor, legendLabels, vertexColors } from "./colormap.js";
import { buildGeometry } from "./geometry.js";
import { ModalityAssignment, type Modality } from "./modality.js";
import { normalize, sub } from "./math.js";
import { displayValue, probe } from "./pick.js";
import { Scene } from "./scene.js";
import { loadModel, validateDocument, type VrMeshDocument } from "./types.js";

const canvas = document.getElementById("viewport") as HTMLCanvasElement;
const fieldPanel = document.getElementById("fields")!;
const legend = document.getElementById("legend")!;
const overlay = document.getElementById("overlay")!;
const statusLine = document.getElementById("status")!;
const filePicker = document.getElementById("file-picker") as HTMLInputElement;

let doc: VrMeshDocument | null = null;
let scene: Scene | null = null;
let assignment: ModalityAssignment | null = null;
const camera = new OrbitCamera();
const player = new TonePlayer((message) => setStatus(message, true));

function setStatus(message: string, isWarning = false): void {
  statusLine.textContent = message;
  statusLine.classList.toggle("warning", isWarning);
}

function showError(message: string): void {
  overlay.hidden = true;
  setStatus(message, true);
}

function start(model: VrMeshDocument): void {
  doc = model;
  assignment = new ModalityAssignment(Object.keys(model.fields));
  try {
    scene = scene ?? new Scene(canvas);
  } catch (error) {
    showError(String(error));
    return;
  }
  const geometry = buildGeometry(model);
  scene.setGeometry(geometry);
  camera.frame(geometry.center, geometry.radius);
  buildFieldPanel();
  applyVisual();
  setStatus(
    `${model.vertices.length} vertices, ${model.triangles.length} triangles, ` +
      `${Object.keys(model.fields).length} field(s)`,
  );
  requestAnimationFrame(draw);
}

function draw(): void {
  if (!scene) return;
  const aspect = canvas.clientWidth / Math.max(1, canvas.clientHeight);
  const lightDir = normalize(sub(camera.eye, camera.target));
  scene.render(camera.viewProjection(aspect), lightDir);
  requestAnimationFrame(draw);
}

function buildFieldPanel(): void {
  fieldPanel.innerHTML = "";
  if (!doc || !assignment) return;
  if (assignment.fieldNames.length === 0) {
    fieldPanel.textContent = "no result fields in this model";
    return;
  }
  for (const name of assignment.fieldNames) {
    const row = document.createElement("div");
    row.className = "field-row";
    const label = document.createElement("span");
    const units = doc.fields[name].units;
    label.textContent = units ? `${name} [${units}]` : name;
    const select = document.createElement("select");
    for (const option of ["none", "visual", "audio"] as Modality[]) {
      const el = document.createElement("option");
      el.value = option;
      el.textContent = option;
      select.appendChild(el);
    }
    select.value = assignment.modalityOf(name);
    select.addEventListener("change", () => {
      assignment!.assign(name, select.value as Modality);
      buildFieldPanel(); // other rows may have lost their modality
      applyVisual();
    });
    row.append(label, select);
    fieldPanel.appendChild(row);
  }
}

function applyVisual(): void {
  if (!doc || !scene || !assignment) return;
  const fieldName = assignment.fieldFor("visual");
  scene.setColors(vertexColors(doc, fieldName));
  renderLegend(fieldName);
}

function renderLegend(fieldName: string | null): void {
  legend.innerHTML = "";
  if (!doc || fieldName === null) {
    legend.hidden = true;
    return;
  }
  legend.hidden = false;
  const field = doc.fields[fieldName];
  const bar = document.createElement("div");
  bar.className = "legend-bar";
  const stops: string[] = [];
  for (let i = 0; i <= 10; i++) {
    const [r, g, b] = colorFor(i / 10);
    stops.push(`rgb(${r},${g},${b}) ${i * 10}%`);
  }
  bar.style.background = `linear-gradient(to right, ${stops.join(",")})`;
  const labels = document.createElement("div");
  labels.className = "legend-labels";
  const text = legendLabels(fieldName, field);
  for (const part of [text.left, text.middle, text.right]) {
    const span = document.createElement("span");
    span.textContent = part;
    labels.appendChild(span);
  }
  legend.append(bar, labels);
}

function handleProbe(event: MouseEvent): void {
  if (!doc || !assignment) return;
  const rect = canvas.getBoundingClientRect();
  const { origin, dir } = camera.rayFromScreen(
    event.clientX - rect.left,
    event.clientY - rect.top,
    rect.width,
    rect.height,
  );
  const hit = probe(doc, origin, dir);
  if (!hit) {
    overlay.hidden = true;
    return;
  }
  const lines = [`node ${hit.nodeId}`];
  for (const [name, value] of Object.entries(hit.values)) {
    lines.push(`${name}: ${displayValue(value)}`);
  }
  overlay.textContent = lines.join("\n");
  overlay.style.left = `${event.clientX - rect.left + 12}px`;
  overlay.style.top = `${event.clientY - rect.top + 12}px`;
  overlay.hidden = false;

  const audioField = assignment.fieldFor("audio");
  if (audioField !== null) {
    const value = hit.values[audioField];
    if (value !== null && value !== undefined) {
      const field = doc.fields[audioField];
      player.play(frequencyFor(value, field.min, field.max));
    }
  }
}

// -- camera controls ---------------------------------------------------------

let dragging = false;
let moved = 0;
let last: [number, number] = [0, 0];

canvas.addEventListener("mousedown", (event) => {
  dragging = true;
  moved = 0;
  last = [event.clientX, event.clientY];
});
window.addEventListener("mousemove", (event) => {
  if (!dragging) return;
  const dx = event.clientX - last[0];
  const dy = event.clientY - last[1];
  moved += Math.abs(dx) + Math.abs(dy);
  camera.rotate(dx, dy);
  last = [event.clientX, event.clientY];
});
window.addEventListener("mouseup", (event) => {
  if (dragging && moved < 4) handleProbe(event);
  dragging = false;
});
canvas.addEventListener("wheel", (event) => {
  event.preventDefault();
  camera.zoom(event.deltaY > 0 ? 1.1 : 1 / 1.1);
});

// -- model loading -----------------------------------------------------------

filePicker.addEventListener("change", () => {
  const file = filePicker.files?.[0];
  if (!file) return;
  file
    .text()
    .then((text) => start(validateDocument(JSON.parse(text))))
    .catch((error) => showError(`could not load ${file.name}: ${error}`));
});

loadModel("/api/model")
  .then(start)
  .catch((error) => {
    showError(`no model at /api/model (${error}); open a vrmesh file instead`);
  });
